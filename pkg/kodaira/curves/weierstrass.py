#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Iterable, List, Optional, Tuple, Union

import attr

from kodaira.core.errors import DivisionByZero, ParseError, RegimeUnsupported
from kodaira.core.utils import INFINITY, Valuation
from kodaira.fields.local import Elem, FieldCtx
from kodaira.fields.parsing import parse_elem

Coefficient = Union[Elem, int, str]


@attr.s(auto_attribs=True, frozen=True)
class StdInvariants:
    r"""The quantities :math:`b_2, \dots, b_8, c_4, c_6, \Delta` and
    :math:`j` attached to a Weierstrass equation. ``j`` is :py:`None` when
    :math:`\Delta` vanishes.
    """

    b2: Elem
    b4: Elem
    b6: Elem
    b8: Elem
    c4: Elem
    c6: Elem
    delta: Elem
    j: Optional[Elem]


@attr.s(auto_attribs=True, frozen=True, repr=False)
class WeierstrassEq:
    r""":math:`y^2 + a_1 xy + a_3 y = x^3 + a_2 x^2 + a_4 x + a_6` over
    :p:`ctx`.
    """

    ctx: FieldCtx
    a1: Elem
    a2: Elem
    a3: Elem
    a4: Elem
    a6: Elem

    @classmethod
    def from_ainvs(
        cls, ctx: FieldCtx, ainvs: Iterable[Coefficient]
    ) -> "WeierstrassEq":
        coeffs = [coerce_coefficient(ctx, a) for a in ainvs]
        if len(coeffs) != 5:
            raise ParseError(
                "expected [a1,a2,a3,a4,a6], got {} entries".format(len(coeffs))
            )
        return cls(ctx, *coeffs)

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "WeierstrassEq":
        r"""Parse ``[a1,a2,a3,a4,a6]`` with element expressions."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError("curve must look like [a1,a2,a3,a4,a6]")
        return cls.from_ainvs(
            ctx, [part.strip() for part in body[1:-1].split(",")]
        )

    @property
    def ainvs(self) -> Tuple[Elem, Elem, Elem, Elem, Elem]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self):
        return "[{}]".format(",".join(str(a) for a in self.ainvs))

    __repr__ = __str__

    def valuations(self) -> List[Valuation]:
        return [a.valuation_lower_bound() for a in self.ainvs]


def coerce_coefficient(ctx: FieldCtx, a: Coefficient) -> Elem:
    if isinstance(a, Elem):
        return a
    if isinstance(a, int):
        return ctx.from_int(a)
    return parse_elem(ctx, a)


def invariants(E: WeierstrassEq, with_j: bool = True) -> StdInvariants:
    r"""Evaluate the standard invariants. In equicharacteristic 2 the integer
    constants reduce mod 2, so the same formulas apply.

    :param with_j: skip the division for ``j`` when :py:`False`. ``j`` is
        also left :py:`None` when no digit of :math:`\Delta` is visible.
    """
    a1, a2, a3, a4, a6 = E.ainvs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (
        a1 * a1 * a6
        + 4 * a2 * a6
        - a1 * a3 * a4
        + a2 * a3 * a3
        - a4 * a4
    )
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 ** 3) + 36 * b2 * b4 - 216 * b6
    delta = (
        -(b2 * b2 * b8) - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    )
    j = None
    if with_j and delta.valuation_lower_bound() != delta.prec:
        if not delta.is_zero():
            j = (c4 ** 3).exact_quotient(delta)
    return StdInvariants(
        b2=b2, b4=b4, b6=b6, b8=b8, c4=c4, c6=c6, delta=delta, j=j
    )


def discriminant(E: WeierstrassEq) -> Elem:
    return invariants(E, with_j=False).delta


def j_invariant(E: WeierstrassEq) -> Elem:
    j = invariants(E).j
    if j is None:
        raise DivisionByZero("singular equation: discriminant vanishes")
    return j


def j_valuation(E: WeierstrassEq) -> Valuation:
    r""":math:`3v(c_4) - v(\Delta)`, infinite when :math:`c_4 = 0`."""
    inv = invariants(E, with_j=False)
    v_delta = inv.delta.valuation()
    if inv.c4.is_zero():
        return INFINITY
    return 3 * inv.c4.valuation() - v_delta


def transform(
    E: WeierstrassEq,
    u: Coefficient = 1,
    r: Coefficient = 0,
    s: Coefficient = 0,
    t: Coefficient = 0,
) -> WeierstrassEq:
    r"""Change of variables :math:`x = u^2 x' + r`,
    :math:`y = u^3 y' + s u^2 x' + t`. The discriminant scales by
    :math:`u^{-12}` and ``j`` is unchanged.
    """
    ctx = E.ctx
    u, r, s, t = (coerce_coefficient(ctx, c) for c in (u, r, s, t))
    if u.is_zero():
        raise DivisionByZero("transform with u = 0")
    a1, a2, a3, a4, a6 = E.ainvs
    w = u.inverse()
    w2 = w * w
    w3 = w2 * w
    na1 = (a1 + 2 * s) * w
    na2 = (a2 - s * a1 + 3 * r - s * s) * w2
    na3 = (a3 + r * a1 + 2 * t) * w3
    na4 = (
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
    ) * (w2 * w2)
    na6 = (
        a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1
    ) * (w3 * w3)
    return WeierstrassEq(ctx, na1, na2, na3, na4, na6)


def to_short_form(E: WeierstrassEq) -> WeierstrassEq:
    r"""Complete the square: :math:`y^2 = x^3 + \frac{b_2}{4} x^2 +
    \frac{b_4}{2} x + \frac{b_6}{4}`. Mixed characteristic only.
    """
    ctx = E.ctx
    if not ctx.is_mixed:
        raise RegimeUnsupported(
            "completing the square needs 2 invertible, not {}".format(ctx)
        )
    half = ctx.from_int(2).inverse()
    return transform(E, s=-(E.a1 * half), t=-(E.a3 * half))
