#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.curves.tate import tate_run
from kodaira.curves.weierstrass import WeierstrassEq, j_valuation
from kodaira.fields.parsing import parse_elem
from kodaira.isogeny.phi2 import (
    classify_2isogeny_valuations,
    parse_rational,
    phi2_eval,
    phi2_parametrization,
    same_type_2isogeny,
)
from kodaira.isogeny.velu import j_pair, vanishes, velu_2isogeny
from kodaira_cli.commands.curves import add_curve_argument
from kodaira_cli.common.base_command import (
    EXIT_OK,
    BaseCommand,
    keyword_values,
)
from kodaira_cli.common.command_registry import command_registry


@command_registry.register_command(name="isogeny2")
class Isogeny2Command(BaseCommand):
    help = "2-isogeny by Velu's formulas with Kodaira types and j-valuations"

    @classmethod
    def add_arguments(cls, parser):
        add_curve_argument(parser)
        parser.add_argument(
            "x0",
            type=str,
            help="x-coordinate of the 2-torsion kernel point, e.g. -pi",
        )
        parser.add_argument(
            "--s",
            type=int,
            default=None,
            help="ramification break, to evaluate the same-type criterion",
        )

    def run(self, args):
        def compute(c):
            pair = velu_2isogeny(
                WeierstrassEq.parse(c, args.curve), parse_elem(c, args.x0)
            )
            j1, j2 = j_pair(pair)
            return (
                pair,
                (j1, j2),
                phi2_eval(j1, j2),
                (j_valuation(pair.source), j_valuation(pair.target)),
                (tate_run(pair.source), tate_run(pair.target)),
            )

        pair, js, residual, vjs, reports = self.compute(compute)
        record = pair.to_dict()
        record.update(
            {
                "j_source": str(js[0]),
                "j_target": str(js[1]),
                "phi2_vanishes": vanishes(residual),
                "vj_source": vjs[0],
                "vj_target": vjs[1],
                "kodaira_source": str(reports[0].kodaira),
                "kodaira_target": str(reports[1].kodaira),
                "valuation_case": str(
                    classify_2isogeny_valuations(*vjs, v2=pair.source.ctx.v2)
                ),
            }
        )
        if args.s is not None:
            record["same_type_predicted"] = same_type_2isogeny(
                vjs[0], vjs[1], args.s, pair.source.ctx.v2
            )
        self.emit([record])
        return EXIT_OK


@command_registry.register_command(name="phi2")
class Phi2Command(BaseCommand):
    help = "evaluate the modular polynomial of level 2 or its parametrization"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument(
            "values",
            nargs="*",
            metavar="ARG",
            help="rational X and Y, bare or as x=... y=...; or t=p/q",
        )
        parser.add_argument(
            "--t", type=parse_rational, default=None, help="parameter p/q"
        )

    def run(self, args):
        values = {
            name: parse_rational(text)
            for name, text in keyword_values(
                args.values, ("x", "y", "t")
            ).items()
        }
        t = values.pop("t", args.t)
        if t is not None:
            if values:
                raise ValueError("phi2 takes X and Y, or t, not both")
            x, y = phi2_parametrization(t)
            self.emit([{"t": str(t), "x": str(x), "y": str(y), "phi2": 0}])
            return EXIT_OK
        if set(values) != {"x", "y"}:
            raise ValueError("phi2 takes X and Y, or t")
        x, y = values["x"], values["y"]
        self.emit([{"x": str(x), "y": str(y), "phi2": str(phi2_eval(x, y))}])
        return EXIT_OK
