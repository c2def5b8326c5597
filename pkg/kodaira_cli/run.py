#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse
import random
import re
import sys
from typing import List, Optional, TextIO, Tuple

import numpy as np

import kodaira_cli.commands  # noqa: F401
from kodaira import Config
from kodaira.core.errors import COMPUTATIONAL_FAILURES, KodairaError
from kodaira.core.logging import logger
from kodaira_cli.common.base_command import EXIT_FAILURE, EXIT_USAGE
from kodaira_cli.common.command_registry import command_registry
from kodaira_cli.common.output import FORMATS
from kodaira_cli.config.default import get_config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kodaira",
        description="Kodaira types of quadratic twists over 2-adic fields",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="comma separated core config yaml paths",
    )
    parser.add_argument(
        "--field", type=str, default=None, help="field descriptor"
    )
    parser.add_argument(
        "--prec", type=int, default=None, help="working precision"
    )
    parser.add_argument(
        "--format", choices=FORMATS, default=None, help="output format"
    )
    parser.add_argument(
        "--trace",
        action="store_true",
        help="print the step trace of Tate's algorithm",
    )
    parser.add_argument(
        "--max-retries",
        type=int,
        default=None,
        help="cap on the precision doublings of a failed computation",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name in command_registry.command_names():
        command = command_registry.get_command(name)
        command.add_arguments(
            subparsers.add_parser(name, help=command.help)
        )
    return parser


def config_opts(args: argparse.Namespace) -> List[str]:
    r"""Translate the global flags into run config options."""
    opts = []
    if args.field is not None:
        opts += ["CORE.FIELD", args.field]
    if args.prec is not None:
        opts += ["CORE.PRECISION", str(args.prec)]
    if args.format is not None:
        opts += ["CORE.OUTPUT.FORMAT", args.format]
    if args.trace:
        opts += ["CORE.OUTPUT.TRACE", "True"]
    if args.max_retries is not None:
        opts += ["CORE.RETRY.MAX_PRECISION_DOUBLINGS", str(args.max_retries)]
    return opts


def execute_command(
    config: Config, args: argparse.Namespace, stream: TextIO = None
) -> int:
    r"""Seed, configure logging and run the selected subcommand."""
    random.seed(config.CORE.SEED)
    np.random.seed(config.CORE.SEED)

    if config.LOG_FILE:
        logger.add_filehandler(config.LOG_FILE)
    logger.set_verbosity(config.VERBOSE)

    command_init = command_registry.get_command(args.command)
    assert command_init is not None, f"{args.command} is not supported"
    return command_init(config, stream=stream).run(args)


def split_trailing_opts(argv: List[str]) -> Tuple[List[str], List[str]]:
    r"""Config options follow a bare ``--``, e.g.
    ``kodaira scan mixed -- CORE.NUM_WORKERS 4 VERBOSE True``.
    """
    if "--" not in argv:
        return argv, []
    index = argv.index("--")
    return argv[:index], argv[index + 1 :]


NEGATIVE_NUMBER = re.compile(r"^-\d+(/\d+)?$")


def protect_negative_values(argv: List[str]) -> List[str]:
    r"""Parenthesize values such as ``-pi`` or ``-1+pi`` so that argparse
    does not read them as options. Every option is long (``--name``)
    apart from ``-h``, and argparse already takes ``-3`` or ``-1/4`` as a
    value.
    """
    return [
        "({})".format(token)
        if token.startswith("-")
        and not token.startswith("--")
        and token not in ("-", "-h")
        and not NEGATIVE_NUMBER.match(token)
        else token
        for token in argv
    ]


def main(argv: Optional[List[str]] = None, stream: TextIO = None) -> int:
    argv, opts = split_trailing_opts(
        list(sys.argv[1:] if argv is None else argv)
    )
    parser = build_parser()
    try:
        args = parser.parse_args(protect_negative_values(argv))
    except SystemExit as e:
        return e.code
    try:
        config = get_config(args.config, config_opts(args) + opts)
    except (KodairaError, ValueError, KeyError, AssertionError) as e:
        # yacs rejects unknown keys with an AssertionError
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_USAGE
    try:
        return execute_command(config, args, stream=stream)
    except COMPUTATIONAL_FAILURES as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_FAILURE
    except (KodairaError, ValueError, KeyError) as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
