#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""The modular polynomial of level 2 and the valuations of 2-isogenous
j-invariants.

:math:`\Phi_2(X, Y) = 0` is parametrized by

.. math::

    t \mapsto \left(\frac{(t + 16)^3}{t}, \frac{(t + 256)^3}{t^2}\right)

and :math:`t \mapsto 2^{12}/t` swaps the two coordinates. Sorting the two
j-valuations of an additive pair that becomes good supersingular over a
quadratic extension, exactly one of the following holds:

(i)      :math:`v(j_1) = v(j_2) = 6v(2)`;
(ii)(a)  :math:`v(j_1) < 4v(2)` and :math:`v(j_2) = 2v(j_1)`;
(ii)(b)  :math:`4v(2) < v(j_1) < 6v(2)` and :math:`v(j_2) = 12v(2) - v(j_1)`;
(ii)(c)  :math:`v(j_1) = 4v(2)` and :math:`v(j_2) = 8v(2) + 3r`,
         :math:`r \geq 0`.
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import attr

from kodaira.core.errors import DivisionByZero, ParseError
from kodaira.core.utils import INFINITY, Valuation
from kodaira.fields.local import Elem

Exact = Union[int, Fraction, Elem]

PHI2: Dict[Tuple[int, int], int] = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 2): 1488,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 3): 1,
    (0, 2): -162000,
    (0, 1): 8748000000,
    (0, 0): -157464000000000,
}

CASE_I = "(i)"
CASE_IIA = "(ii)(a)"
CASE_IIB = "(ii)(b)"
CASE_IIC = "(ii)(c)"
INCONSISTENT = "inconsistent"


def _powers(x, n: int):
    powers = [1]
    for _ in range(n):
        powers.append(powers[-1] * x)
    return powers


def phi2_eval(x: Exact, y: Exact) -> Exact:
    r"""Exact value of :math:`\Phi_2(x, y)`. Works on :py:`int`,
    :py:`Fraction`, field elements and sympy expressions alike.
    """
    xs, ys = _powers(x, 3), _powers(y, 3)
    total = 0
    for (i, j), c in PHI2.items():
        total = total + c * xs[i] * ys[j]
    return total


def _as_exact(t: Exact) -> Exact:
    if isinstance(t, int):
        return Fraction(t)
    return t


def _is_zero(t: Exact) -> bool:
    if isinstance(t, Elem):
        return t.is_zero()
    return t == 0


def phi2_parametrization(t: Exact) -> Tuple[Exact, Exact]:
    r""":math:`((t + 16)^3 / t, (t + 256)^3 / t^2)`.

    :raise DivisionByZero: :math:`t = 0`.
    """
    t = _as_exact(t)
    if _is_zero(t):
        raise DivisionByZero("the parametrization is undefined at t = 0")
    a = (t + 16) ** 3
    b = (t + 256) ** 3
    if isinstance(t, Elem):
        return a.exact_quotient(t), b.exact_quotient(t * t)
    return a / t, b / (t * t)


def parse_rational(text: str) -> Fraction:
    r"""``p`` or ``p/q`` with integers :math:`p, q`."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError("not a rational literal: {!r}".format(text)) from e


@attr.s(auto_attribs=True, frozen=True)
class IsogenyCase:
    label: str
    r: Optional[int] = None

    @property
    def is_consistent(self) -> bool:
        return self.label != INCONSISTENT

    def __str__(self):
        if self.r is None:
            return self.label
        return "{} r={}".format(self.label, self.r)


def classify_2isogeny_valuations(
    vj1: Valuation, vj2: Valuation, v2: int, sharpened: bool = False
) -> IsogenyCase:
    r"""Which valuation law the pair :math:`(v(j_1), v(j_2))` instantiates.

    :param sharpened: require :math:`r \geq 1` in (ii)(c), which holds over
        :math:`\mathbb{Q}_2^{unr}` for rational j-invariants.
    :return: the matching case, or ``inconsistent`` when none applies
        (including non-positive or infinite valuations).
    """
    vj1, vj2 = sorted((vj1, vj2))
    if vj1 <= 0 or vj2 == INFINITY:
        return IsogenyCase(INCONSISTENT)
    if vj1 == vj2 == 6 * v2:
        return IsogenyCase(CASE_I)
    if vj1 < 4 * v2 and vj2 == 2 * vj1:
        return IsogenyCase(CASE_IIA)
    if 4 * v2 < vj1 < 6 * v2 and vj2 == 12 * v2 - vj1:
        return IsogenyCase(CASE_IIB)
    if vj1 == 4 * v2 and vj2 >= 8 * v2 and (vj2 - 8 * v2) % 3 == 0:
        r = (vj2 - 8 * v2) // 3
        if r >= 1 or not sharpened:
            return IsogenyCase(CASE_IIC, r)
    return IsogenyCase(INCONSISTENT)


def parametrization_case(vt: int, v2: int) -> str:
    r"""The case reached by the parametrization point with :math:`v(t) = vt`.
    :math:`t \mapsto 2^{12}/t` sends :math:`vt` to :math:`12v(2) - vt`, so
    only the smaller of the two matters.

    :raise ValueError: :math:`vt \notin (0, 12v(2))`, where a j-valuation is
        not positive.
    """
    if not 0 < vt < 12 * v2:
        raise ValueError(
            "v(t) = {} gives a non-positive j-valuation for v(2) = {}".format(
                vt, v2
            )
        )
    w = min(vt, 12 * v2 - vt)
    if w < 4 * v2:
        return CASE_IIA
    if w == 4 * v2:
        return CASE_IIC
    if w < 6 * v2:
        return CASE_IIB
    return CASE_I


def same_type_2isogeny(
    vj1: Valuation, vj2: Valuation, s: int, v2: Valuation
) -> bool:
    r"""Whether two 2-isogenous curves share their reduction type:
    :math:`\min(v(j_1), v(j_2)) > 4s - 4`, or
    :math:`v(j_1) = v(j_2) = 6v(2)`.
    """
    s = int(s)
    return min(vj1, vj2) > 4 * s - 4 or vj1 == vj2 == 6 * v2
