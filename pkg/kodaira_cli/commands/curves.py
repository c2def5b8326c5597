#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse

from kodaira.curves.tate import tate_run
from kodaira.curves.weierstrass import WeierstrassEq, j_valuation
from kodaira.extensions.quadratic import (
    compute_s,
    different_oracle,
    parse_extension,
    twist,
)
from kodaira_cli.common.base_command import (
    EXIT_MISMATCH,
    EXIT_OK,
    BaseCommand,
)
from kodaira_cli.common.command_registry import command_registry


def add_curve_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "curve", type=str, help="Weierstrass coefficients [a1,a2,a3,a4,a6]"
    )


def add_extension_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "ext",
        type=str,
        help='quadratic extension, e.g. "as(pi^-3)", "sqrt(pi)" or '
        '"eis(pi^2,pi)"',
    )


@command_registry.register_command(name="tate")
class TateCommand(BaseCommand):
    help = "Kodaira type, minimal discriminant and minimal model"

    @classmethod
    def add_arguments(cls, parser):
        add_curve_argument(parser)

    def run(self, args):
        report = self.compute(
            lambda c: tate_run(WeierstrassEq.parse(c, args.curve))
        )
        record = report.to_dict()
        del record["trace"]
        self.emit([record])
        self.emit_trace(report.trace)
        return EXIT_OK


@command_registry.register_command(name="slk")
class SlkCommand(BaseCommand):
    help = (
        "ramification break of a quadratic extension, checked against the "
        "valuation of the different"
    )

    @classmethod
    def add_arguments(cls, parser):
        add_extension_argument(parser)

    def run(self, args):
        def compute(c):
            ext = parse_extension(c, args.ext)
            return ext, compute_s(ext).s, different_oracle(ext)

        ext, s, different = self.compute(compute)
        agrees = different - 1 == s
        self.emit(
            [
                {
                    "ext": str(ext),
                    "s": s,
                    "different": different,
                    "oracle_agrees": agrees,
                }
            ]
        )
        return EXIT_OK if agrees else EXIT_MISMATCH


@command_registry.register_command(name="twist")
class TwistCommand(BaseCommand):
    help = "quadratic twist of a curve by an extension"

    @classmethod
    def add_arguments(cls, parser):
        add_curve_argument(parser)
        add_extension_argument(parser)

    def run(self, args):
        def compute(c):
            E = WeierstrassEq.parse(c, args.curve)
            twisted = twist(E, parse_extension(c, args.ext))
            return twisted, j_valuation(twisted)

        twisted, vj = self.compute(compute)
        self.emit([{"curve": str(twisted), "vj": vj}])
        return EXIT_OK
