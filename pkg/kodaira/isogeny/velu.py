#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Velu's formulas for a kernel of order 2.

On :math:`y^2 = x^3 + a_2 x^2 + a_4 x + a_6` with 2-torsion point
:math:`(x_0, 0)` put

.. math::

    t = 3x_0^2 + 2a_2 x_0 + a_4, \qquad w = x_0 t,

then the quotient curve is
:math:`y^2 = x^3 + a_2 x^2 + (a_4 - 5t) x + (a_6 - 4a_2 t - 7w)`.
For :math:`y^2 = x^3 + D^3` and :math:`x_0 = -D` this is
:math:`y^2 = x^3 - 15D^2 x + 22D^3`.
"""

from typing import Iterable, List, Tuple

import attr

from kodaira.core.errors import NotTwoTorsion, RegimeUnsupported
from kodaira.curves.weierstrass import (
    Coefficient,
    WeierstrassEq,
    coerce_coefficient,
    j_invariant,
    to_short_form,
)
from kodaira.fields.local import Elem


@attr.s(auto_attribs=True, frozen=True)
class TwoIsogenyPair:
    source: WeierstrassEq
    target: WeierstrassEq
    kernel_x: Elem

    def to_dict(self) -> dict:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "kernel_x": str(self.kernel_x),
        }


def _cubic(E: WeierstrassEq, x: Elem) -> Elem:
    return ((x + E.a2) * x + E.a4) * x + E.a6


def vanishes(a: Elem) -> bool:
    if a.is_exact:
        return a.is_zero()
    return a.valuation_lower_bound() >= a.prec


def _short(E: WeierstrassEq) -> WeierstrassEq:
    if not E.ctx.is_mixed:
        raise RegimeUnsupported(
            "2-isogenies need a model with a1 = a3 = 0, impossible over "
            "{}".format(E.ctx)
        )
    if E.a1.is_zero() and E.a3.is_zero():
        return E
    # x is unchanged by completing the square
    return to_short_form(E)


def is_two_torsion_x(E: WeierstrassEq, x0: Coefficient) -> bool:
    E = _short(E)
    return vanishes(_cubic(E, coerce_coefficient(E.ctx, x0)))


def two_torsion_x(
    E: WeierstrassEq, candidates: Iterable[Coefficient]
) -> List[Elem]:
    r"""The candidates that are x-coordinates of 2-torsion points."""
    E = _short(E)
    xs = [coerce_coefficient(E.ctx, x) for x in candidates]
    return [x for x in xs if vanishes(_cubic(E, x))]


def velu_2isogeny(E: WeierstrassEq, x0: Coefficient) -> TwoIsogenyPair:
    r"""The 2-isogeny with kernel :math:`\{O, (x_0, 0)\}`.

    :param E: a curve over a mixed field; models with :math:`a_1` or
        :math:`a_3` nonzero are first brought to :math:`a_1 = a_3 = 0`.
    :raise NotTwoTorsion: :math:`x_0` is not a root of the 2-division cubic.
    :raise RegimeUnsupported: over an equichar field.
    """
    source = _short(E)
    x0 = coerce_coefficient(source.ctx, x0)
    if not vanishes(_cubic(source, x0)):
        raise NotTwoTorsion(
            "({}, 0) is not a 2-torsion point of {}".format(x0, source)
        )
    t = 3 * x0 * x0 + 2 * source.a2 * x0 + source.a4
    w = x0 * t
    target = WeierstrassEq(
        source.ctx,
        source.a1,
        source.a2,
        source.a3,
        source.a4 - 5 * t,
        source.a6 - 4 * source.a2 * t - 7 * w,
    )
    return TwoIsogenyPair(source=source, target=target, kernel_x=x0)


def j_pair(pair: TwoIsogenyPair) -> Tuple[Elem, Elem]:
    return j_invariant(pair.source), j_invariant(pair.target)
