#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import functools
from typing import Dict, List

import tqdm

from kodaira import Config
from kodaira.core.errors import ParseError
from kodaira.core.logging import logger
from kodaira.core.utils import INFINITY, Valuation
from kodaira_cli.common.base_command import (
    EXIT_MISMATCH,
    EXIT_OK,
    BaseCommand,
)
from kodaira_cli.common.command_registry import command_registry
from kodaira_cli.common.sweeps import (
    REGIMES,
    build_grid,
    parse_range,
    run_point,
    summarize,
)
from kodaira_cli.common.vector_runner import ThreadedGridRunner

RANGE_NAMES = ("s", "u")


def parse_ranges(tokens: List[str]) -> Dict[str, List[Valuation]]:
    r"""``["s=1..11:odd", "u=1..6,inf"]`` -> ``{"s": [...], "u": [...]}``."""
    ranges = {}
    for token in tokens:
        name, sep, text = token.partition("=")
        if not sep or name not in RANGE_NAMES:
            raise ParseError(
                "expected s=<range> or u=<range>, got {!r}".format(token)
            )
        ranges[name] = parse_range(text)
    return ranges


def scan_config(
    core: Config, regime: str, ranges: Dict[str, List[Valuation]]
) -> Config:
    r"""Copy of the core config with the regime and ranges applied."""
    config = core.clone()
    config.defrost()
    if regime is not None:
        config.SCAN.REGIME = regime
    if "s" in ranges:
        config.SCAN.S_VALUES = [s for s in ranges["s"] if s != INFINITY]
    if "u" in ranges:
        config.SCAN.U_VALUES = [u for u in ranges["u"] if u != INFINITY]
        config.SCAN.INCLUDE_J_ZERO = INFINITY in ranges["u"]
    config.freeze()
    return config


@command_registry.register_command(name="scan")
class ScanCommand(BaseCommand):
    help = "verification sweep over a grid of breaks and j-valuations"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument(
            "regime",
            nargs="?",
            choices=REGIMES,
            default=None,
            help="sweep regime, SCAN.REGIME of the config by default",
        )
        parser.add_argument(
            "ranges",
            nargs="*",
            help="s=<range> and u=<range>, e.g. s=1..11:odd u=1..6,inf",
        )

    def run(self, args):
        config = scan_config(
            self.config.CORE, args.regime, parse_ranges(args.ranges)
        )
        grid = build_grid(config)
        logger.info(
            "Scanning {} points of the {} regime".format(
                len(grid), config.SCAN.REGIME
            )
        )
        job_fn = functools.partial(
            run_point,
            max_precision_doublings=config.RETRY.MAX_PRECISION_DOUBLINGS,
            max_residue_doublings=config.RETRY.MAX_RESIDUE_DOUBLINGS,
        )
        with ThreadedGridRunner(job_fn, config.NUM_WORKERS) as runner:
            with tqdm.tqdm(
                total=len(grid), disable=not config.OUTPUT.PROGRESS
            ) as pbar:
                results = runner.map(grid, progress=pbar.update)

        self.emit(result.to_dict() for result in results)
        summary = summarize(results)
        logger.info("Scan summary: {}".format(summary.to_dict()))
        for result in results:
            if not result.ok:
                logger.warning("Mismatch at {}".format(result.point))
        return EXIT_OK if summary.all_match else EXIT_MISMATCH
