#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import attr

from kodaira.core.dataset import dumps_entries
from kodaira.core.errors import UnknownLabel
from kodaira.core.logging import logger
from kodaira.curves.tate import tate_run_with_retries
from kodaira.datasets.catalog.catalog_dataset import (
    entry_curve_text,
    reproduce_entry,
)
from kodaira.datasets.registration import make_catalog
from kodaira.fields.parsing import parse_field
from kodaira_cli.common.base_command import (
    EXIT_MISMATCH,
    EXIT_OK,
    BaseCommand,
)
from kodaira_cli.common.command_registry import command_registry
from kodaira_cli.common.lmfdb_client import LMFDBClient


@command_registry.register_command(name="catalog")
class CatalogCommand(BaseCommand):
    help = "recompute the Kodaira types of the vendored curve catalog"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument(
            "label",
            nargs="?",
            default=None,
            help="label or label prefix, every entry when omitted",
        )

    def run(self, args):
        core = self.config.CORE
        catalog = make_catalog(core.CATALOG.TYPE, config=core.CATALOG)
        entries = catalog.entries_matching(args.label)
        if not entries:
            raise UnknownLabel(
                "no catalog entry matches {}".format(args.label)
            )
        results = [
            reproduce_entry(
                entry,
                max_precision_doublings=core.RETRY.MAX_PRECISION_DOUBLINGS,
                max_residue_doublings=core.RETRY.MAX_RESIDUE_DOUBLINGS,
            )
            for entry in entries
        ]
        self.emit(result.to_dict() for result in results)
        failed = [result.label for result in results if not result.match]
        if failed:
            logger.warning("Catalog mismatches: {}".format(", ".join(failed)))
            return EXIT_MISMATCH
        return EXIT_OK


@command_registry.register_command(name="lmfdb")
class LmfdbCommand(BaseCommand):
    help = "fetch a curve from the LMFDB as a catalog entry"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("label", help="LMFDB curve label")
        parser.add_argument(
            "--expected",
            default=None,
            help="expected Kodaira symbol; computed locally when omitted",
        )
        parser.add_argument(
            "--output",
            default=None,
            help="write the entry as catalog JSON to this path",
        )

    def run(self, args):
        lmfdb = self.config.CORE.LMFDB
        client = LMFDBClient(lmfdb.BASE_URL, timeout=lmfdb.TIMEOUT)
        entry = client.fetch(args.label, expected=args.expected)
        if not entry.expected:
            report = tate_run_with_retries(
                entry_curve_text(entry),
                parse_field(entry.field),
                self.config.CORE,
            )
            entry = attr.evolve(
                entry,
                expected=str(report.kodaira),
                provenance=entry.provenance
                + "; expected type computed locally",
            )

        if args.output:
            with open(args.output, "w") as f:
                f.write(dumps_entries([entry]) + "\n")
            logger.info("Wrote {} to {}".format(entry.label, args.output))
        self.emit([attr.asdict(entry)])
        return EXIT_OK
