#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.core.utils import parse_valuation
from kodaira.curves.weierstrass import WeierstrassEq
from kodaira.extensions.quadratic import parse_extension
from kodaira.theory.supersingular import (
    STATUS_MISMATCH,
    predicted_type,
    verify,
)
from kodaira_cli.commands.curves import (
    add_curve_argument,
    add_extension_argument,
)
from kodaira_cli.common.base_command import (
    EXIT_MISMATCH,
    EXIT_OK,
    BaseCommand,
    keyword_values,
)
from kodaira_cli.common.command_registry import command_registry


@command_registry.register_command(name="predict")
class PredictCommand(BaseCommand):
    help = "predicted Kodaira type from v(j) and the ramification break"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument(
            "values",
            nargs="+",
            metavar="ARG",
            help="v(j), or inf for j = 0, and the ramification break; bare "
            "or as vj=... s=...",
        )

    def run(self, args):
        values = keyword_values(args.values, ("vj", "s"))
        if set(values) != {"vj", "s"}:
            raise ValueError("predict takes vj and s")
        prediction = predicted_type(
            parse_valuation(values["vj"]), int(values["s"])
        )
        self.emit([prediction.to_dict()])
        return EXIT_OK


@command_registry.register_command(name="verify")
class VerifyCommand(BaseCommand):
    help = "compare the predicted and the computed Kodaira type"

    @classmethod
    def add_arguments(cls, parser):
        add_curve_argument(parser)
        add_extension_argument(parser)

    def run(self, args):
        record = self.compute(
            lambda c: verify(
                WeierstrassEq.parse(c, args.curve),
                parse_extension(c, args.ext),
            )
        )
        self.emit([record.to_dict()])
        return EXIT_MISMATCH if record.status == STATUS_MISMATCH else EXIT_OK
