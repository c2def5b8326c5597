#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Sweep grids over (field, break, u) and their evaluation.

Each grid point builds the good supersingular curve
:math:`y^2 + \pi^u xy + y = x^3` (:math:`j = 0` for ``u = inf``), the
extension with the requested break, twists the curve by it and verifies the
predicted type of the twisted, additive curve against Tate's algorithm.
"""

from collections import defaultdict
from typing import Dict, List, Set

import attr

from kodaira import Config
from kodaira.core.errors import ParseError
from kodaira.core.utils import INFINITY, Valuation, parse_valuation
from kodaira.curves.kodaira_types import KodairaType
from kodaira.curves.tate import with_retries
from kodaira.extensions.quadratic import construct_extension_with_s, twist
from kodaira.fields.local import FieldCtx
from kodaira.fields.parsing import parse_field
from kodaira.theory.supersingular import (
    STATUS_MATCH,
    VerificationRecord,
    allowed_istar_multiples,
    construct_supersingular_with_vj,
    converse_parameters,
    equichar_j0_break,
    equichar_parameters,
    is_good_supersingular,
    verify,
)

EQUICHAR = "equichar"
MIXED = "mixed"
CONVERSE = "converse"
EQUICHAR_CONVERSE = "equichar-converse"
REGIMES = (EQUICHAR, MIXED, CONVERSE, EQUICHAR_CONVERSE)

DEFAULT_PRECISION = 64

_STEPS = {"odd": (2, 1), "even": (2, 0)}


@attr.s(auto_attribs=True, frozen=True)
class SweepPoint:
    field: str
    s: int
    u: Valuation

    def __str__(self):
        return "{} s={} u={}".format(self.field, self.s, self.u)


@attr.s(auto_attribs=True, kw_only=True)
class SweepResult:
    point: SweepPoint
    record: VerificationRecord
    twist_back_good: bool

    def to_dict(self) -> dict:
        out = self.record.to_dict()
        out["u"] = self.point.u
        out["twist_back_good"] = self.twist_back_good
        return out

    @property
    def ok(self) -> bool:
        return self.record.status == STATUS_MATCH and self.twist_back_good


def _precision(config: Config) -> int:
    return config.PRECISION if config.PRECISION > 0 else DEFAULT_PRECISION


def _u_values(config: Config) -> List[Valuation]:
    us = [parse_valuation(u) for u in config.SCAN.U_VALUES]
    if config.SCAN.INCLUDE_J_ZERO and INFINITY not in us:
        us.append(INFINITY)
    return us


def _equichar_grid(config: Config) -> List[SweepPoint]:
    prec = _precision(config)
    points = []
    for k in config.SCAN.RESIDUE_DEGREES:
        field = str(FieldCtx.equichar(k, prec))
        for s in config.SCAN.S_VALUES:
            for u in _u_values(config):
                points.append(SweepPoint(field, s, u))
    return points


def _mixed_grid(config: Config) -> List[SweepPoint]:
    r"""Every admissible break and every admissible :math:`u < v(2)` (plus
    :math:`j = 0`) of each tower, unless the config narrows them down.
    """
    prec = _precision(config)
    points = []
    for tower in config.SCAN.TOWERS:
        ctx = parse_field('mixed(eis="{}")'.format(tower), prec)
        breaks = list(range(1, 2 * ctx.v2, 2)) + [2 * ctx.v2]
        if config.SCAN.S_VALUES:
            breaks = [s for s in breaks if s in config.SCAN.S_VALUES]
        us: List[Valuation] = list(range(1, ctx.v2))
        if config.SCAN.U_VALUES:
            us = [u for u in us if u in config.SCAN.U_VALUES]
        if config.SCAN.INCLUDE_J_ZERO:
            us.append(INFINITY)
        for s in breaks:
            for u in us:
                points.append(SweepPoint(str(ctx), s, u))
    return points


def _converse_grid(config: Config) -> List[SweepPoint]:
    r"""One point per realizable :math:`I^*_{4m}` of each tower, built from
    :ref:`converse_parameters`.
    """
    prec = _precision(config)
    points = []
    for tower in config.SCAN.TOWERS:
        ctx = parse_field('mixed(eis="{}")'.format(tower), prec)
        for m in sorted(allowed_istar_multiples(ctx.v2)):
            s, u = converse_parameters(m, ctx.v2)
            points.append(SweepPoint(str(ctx), s, u))
    return points


def _equichar_converse_grid(config: Config) -> List[SweepPoint]:
    prec = _precision(config)
    points = []
    for k in config.SCAN.RESIDUE_DEGREES:
        field = str(FieldCtx.equichar(k, prec))
        for m in range(1, 5):
            s, u = equichar_parameters(m)
            points.append(SweepPoint(field, s, u))
        for f in (1, 3, 5):
            points.append(SweepPoint(field, equichar_j0_break(f), INFINITY))
    return points


def build_grid(config: Config) -> List[SweepPoint]:
    r"""The grid of the configured regime, in a stable order."""
    regime = config.SCAN.REGIME
    if regime == EQUICHAR:
        return _equichar_grid(config)
    if regime == MIXED:
        return _mixed_grid(config)
    if regime == CONVERSE:
        return _converse_grid(config)
    if regime == EQUICHAR_CONVERSE:
        return _equichar_converse_grid(config)
    raise ValueError(
        "SCAN.REGIME must be one of {}, got {}".format(REGIMES, regime)
    )


def parse_range(text: str) -> List[Valuation]:
    r"""Comma separated items, each ``n``, ``inf``, ``a..b`` or
    ``a..b:odd`` / ``a..b:even`` (bounds included).

    :raise ParseError: on any other item.
    """
    values: List[Valuation] = []
    for item in (part.strip() for part in text.split(",")):
        if not item:
            continue
        if ".." not in item:
            try:
                values.append(parse_valuation(item))
            except ValueError as e:
                raise ParseError("bad range item {!r}".format(item)) from e
            continue
        bounds, _, parity = item.partition(":")
        lo, _, hi = bounds.partition("..")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError as e:
            raise ParseError("bad range bounds {!r}".format(item)) from e
        if parity and parity not in _STEPS:
            raise ParseError("bad range filter {!r}".format(parity))
        modulus, residue = _STEPS.get(parity, (1, 0))
        values.extend(n for n in range(lo, hi + 1) if n % modulus == residue)
    return values


def _run_point_in(ctx: FieldCtx, point: SweepPoint) -> SweepResult:
    ext = construct_extension_with_s(ctx, point.s)
    good = construct_supersingular_with_vj(ctx, point.u)
    additive = twist(good, ext)
    record = verify(additive, ext)
    return SweepResult(
        point=point,
        record=record,
        twist_back_good=is_good_supersingular(twist(additive, ext)),
    )


def run_point(
    point: SweepPoint,
    max_precision_doublings: int = 4,
    max_residue_doublings: int = 3,
) -> SweepResult:
    return with_retries(
        lambda c: _run_point_in(c, point),
        parse_field(point.field),
        max_precision_doublings=max_precision_doublings,
        max_residue_doublings=max_residue_doublings,
    )


@attr.s(auto_attribs=True, kw_only=True)
class SweepSummary:
    total: int = 0
    matched: int = 0
    types: Dict[str, Set[KodairaType]] = attr.ib(
        factory=lambda: defaultdict(set)
    )

    def add(self, result: SweepResult) -> None:
        self.total += 1
        self.matched += int(result.ok)
        if result.record.computed is not None:
            self.types[result.point.field].add(result.record.computed)

    @property
    def all_match(self) -> bool:
        return self.matched == self.total

    def istar_multiples(self, field: str) -> Set[int]:
        return {
            t.n // 4
            for t in self.types.get(field, ())
            if t.symbol == "I*" and t.n > 0
        }

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "matched": self.matched,
            "types": {
                field: sorted(str(t) for t in types)
                for field, types in self.types.items()
            },
        }


def summarize(results: List[SweepResult]) -> SweepSummary:
    summary = SweepSummary()
    for result in results:
        summary.add(result)
    return summary
