#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Local fields of residue characteristic 2.

Two regimes are supported:

-   ``equichar``: :math:`K = F_{2^k}((\pi))`, elements are finitely supported
    Laurent expansions with residue digits.
-   ``mixed``: :math:`K = W[\pi]/(e(\pi))` where :math:`W` is the unramified
    extension of :math:`Z_2` of degree ``k`` and ``e`` an Eisenstein
    polynomial with integer coefficients. Elements are
    :math:`2^{-d} \sum_{i<E} \sum_{j<k} n_{ij} x^j \pi^i` with python ints
    :math:`n_{ij}`, so every value met in practice (integer Laurent polynomials
    in :math:`\pi`) is represented exactly.

Every element carries ``prec``, an absolute :math:`\pi`-adic horizon below
which its digits are known, or :py:`None` when it is exact. Asking for the
valuation of an element whose visible digits all vanish raises
:ref:`PrecisionLoss`.

The residue field of the theory is algebraically closed. It is approximated by
:math:`F_{2^k}`; computations needing a root outside of it raise
:ref:`ResidueFieldTooSmall` and are restarted at a larger ``k`` by
:ref:`kodaira.curves.tate.tate_run_with_retries`.
"""

import functools
import itertools
from typing import Dict, Iterable, List, Optional, Tuple, Union

import attr

from kodaira.core.errors import (
    CtxMismatch,
    DivisionByZero,
    NegativeValuation,
    NoSquareRoot,
    ParseError,
    PrecisionLoss,
    RegimeMismatch,
    RegimeUnsupported,
    ResidueFieldTooSmall,
)
from kodaira.core.utils import (
    INFINITY,
    Valuation,
    ceil_div,
    positive_validator,
    two_adic_valuation,
)
from kodaira.fields.residue import (
    ResCtx,
    ResElem,
    Unsolvable,
    res_artin_schreier,
    res_elements,
    res_inv,
    res_sqrt,
    res_trace,
)

EQUICHAR = "equichar"
MIXED = "mixed"

Prec = Optional[int]


def _min_prec(*precs: Prec) -> Prec:
    known = [p for p in precs if p is not None]
    return min(known) if known else None


def _format_eisenstein(coeffs: Tuple[int, ...]) -> str:
    degree = len(coeffs)
    text = "z" if degree == 1 else "z^{}".format(degree)
    for i in reversed(range(degree)):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            text += "{}{}".format(sign, mag)
        else:
            mono = "z" if i == 1 else "z^{}".format(i)
            text += "{}{}{}".format(
                sign, "" if mag == 1 else "{}*".format(mag), mono
            )
    return text


@attr.s(auto_attribs=True, frozen=True, repr=False)
class FieldCtx:
    r"""A local field tower descriptor.

    :property regime: ``equichar`` or ``mixed``.
    :property residue: the residue field approximation.
    :property precision: equichar: significant digits of series results;
        mixed: 2-adic bits per coefficient of series results.
    :property eisenstein: mixed only, the lower coefficients
        :math:`(e_0, \dots, e_{E-1})` of the monic Eisenstein polynomial.
    """

    regime: str = attr.ib(validator=attr.validators.in_([EQUICHAR, MIXED]))
    residue: ResCtx = attr.ib()
    precision: int = attr.ib(validator=positive_validator)
    eisenstein: Tuple[int, ...] = attr.ib(default=(), converter=tuple)

    def __attrs_post_init__(self):
        if self.regime == EQUICHAR:
            if self.eisenstein:
                raise ParseError("equichar fields take no Eisenstein data")
            return
        if not self.eisenstein:
            raise ParseError("mixed fields need an Eisenstein polynomial")
        if any(c % 2 for c in self.eisenstein):
            raise ParseError(
                "{} is not Eisenstein: odd lower coefficient".format(
                    _format_eisenstein(self.eisenstein)
                )
            )
        if self.eisenstein[0] % 4 == 0:
            raise ParseError(
                "{} is not Eisenstein: constant term divisible by 4".format(
                    _format_eisenstein(self.eisenstein)
                )
            )

    @classmethod
    def equichar(cls, k: int = 1, prec: int = 64) -> "FieldCtx":
        return cls(
            regime=EQUICHAR, residue=ResCtx.for_degree(k), precision=prec
        )

    @classmethod
    def mixed(
        cls, eisenstein: Iterable[int], k: int = 1, prec: int = 64
    ) -> "FieldCtx":
        return cls(
            regime=MIXED,
            residue=ResCtx.for_degree(k),
            precision=prec,
            eisenstein=tuple(eisenstein),
        )

    @property
    def is_mixed(self) -> bool:
        return self.regime == MIXED

    @property
    def ramification(self) -> int:
        return len(self.eisenstein) if self.is_mixed else 1

    @property
    def residue_degree(self) -> int:
        return self.residue.degree

    @property
    def v2(self) -> Valuation:
        return self.ramification if self.is_mixed else INFINITY

    @property
    def series_precision(self) -> int:
        r"""Relative :math:`\pi`-adic precision of inverses and roots."""
        return self.precision * self.ramification

    def with_precision(self, precision: int) -> "FieldCtx":
        return attr.evolve(self, precision=precision)

    def with_residue_degree(self, k: int) -> "FieldCtx":
        return attr.evolve(self, residue=ResCtx.for_degree(k))

    def __str__(self):
        k = self.residue_degree
        if self.is_mixed:
            return 'mixed(k={},eis="{}",prec={})'.format(
                k, _format_eisenstein(self.eisenstein), self.precision
            )
        return "equichar(k={},prec={})".format(k, self.precision)

    __repr__ = __str__

    # element constructors

    def zero(self) -> "Elem":
        return self.from_int(0)

    def one(self) -> "Elem":
        return self.from_int(1)

    def from_int(self, n: int) -> "Elem":
        if self.is_mixed:
            return _mixed(self, {(0, 0): n})
        return _equichar(self, {0: n & 1})

    def lift(self, r: ResElem) -> "Elem":
        r"""Teichmuller-free lift: the residue bits as a 0/1 polynomial."""
        if r.ctx != self.residue:
            raise CtxMismatch("{} vs {}".format(r.ctx, self.residue))
        if self.is_mixed:
            return _mixed(
                self,
                {
                    (0, j): (r.bits >> j) & 1
                    for j in range(self.residue_degree)
                },
            )
        return _equichar(self, {0: r.bits})

    def gen(self) -> "Elem":
        return self.lift(self.residue.gen())

    def pi(self) -> "Elem":
        if not self.is_mixed:
            return _equichar(self, {1: 1})
        if self.ramification == 1:
            return self.from_int(-self.eisenstein[0])
        return _mixed(self, {(1, 0): 1})

    def monomial(self, r: ResElem, exponent: int) -> "Elem":
        return self.lift(r).shift(exponent)


# ----------------------------------------------------------------------------
# Elements
# ----------------------------------------------------------------------------


@attr.s(auto_attribs=True, frozen=True, repr=False, kw_only=True)
class Elem:
    ctx: FieldCtx
    prec: Prec = None

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    # regime hooks

    def _raw_valuation(self) -> Valuation:
        raise NotImplementedError

    def _add(self, other: "Elem") -> "Elem":
        raise NotImplementedError

    def _mul_repr(self, other: "Elem", prec: Prec) -> "Elem":
        raise NotImplementedError

    def _neg(self) -> "Elem":
        raise NotImplementedError

    def with_prec(self, prec: Prec) -> "Elem":
        r"""Forget every digit at or beyond :p:`prec`."""
        raise NotImplementedError

    def _exactified(self) -> "Elem":
        raise NotImplementedError

    def _unit_inverse(self, rel: int) -> "Elem":
        raise NotImplementedError

    def _first_sign(self) -> int:
        return 1

    # valuation and residue

    def valuation(self) -> Valuation:
        v = self._raw_valuation()
        if v == INFINITY and self.prec is not None:
            raise PrecisionLoss(
                "all digits below pi^{} vanish".format(self.prec)
            )
        return v

    def valuation_lower_bound(self) -> Valuation:
        v = self._raw_valuation()
        if v == INFINITY and self.prec is not None:
            return self.prec
        return v

    def is_zero_to(self, n: int) -> bool:
        r"""Whether :math:`v(self) \geq n`; raises :ref:`PrecisionLoss` when
        the known digits cannot tell.
        """
        v = self._raw_valuation()
        if v < n:
            return False
        if self.prec is not None and self.prec < n:
            raise PrecisionLoss(
                "need digits up to pi^{}, known to pi^{}".format(
                    n, self.prec
                )
            )
        return True

    def is_zero(self) -> bool:
        return self.is_exact and self._raw_valuation() == INFINITY

    def residue(self) -> ResElem:
        v = self.valuation()
        if v < 0:
            raise NegativeValuation(
                "residue of an element of valuation {}".format(v)
            )
        return self._residue()

    def _residue(self) -> ResElem:
        raise NotImplementedError

    def unit_part(self) -> "Elem":
        return self.shift(-self.valuation())

    def leading_residue(self) -> ResElem:
        return self.unit_part().residue()

    # arithmetic

    def _coerce(self, other: Union["Elem", int]) -> "Elem":
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if not isinstance(other, Elem):
            return NotImplemented
        if other.ctx != self.ctx:
            raise CtxMismatch("{} vs {}".format(self.ctx, other.ctx))
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def __neg__(self):
        return self._neg()

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.ctx.zero()
        prec = None
        if self.prec is not None:
            prec = self.prec + other.valuation_lower_bound()
        if other.prec is not None:
            bound = other.prec + self.valuation_lower_bound()
            prec = bound if prec is None else min(prec, bound)
        return self._mul_repr(other, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> "Elem":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ctx.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "Elem":
        r"""Multiply by :math:`\pi^n`."""
        raise NotImplementedError

    def inverse(self) -> "Elem":
        if self._raw_valuation() == INFINITY:
            if self.is_exact:
                raise DivisionByZero("inverse of 0")
            raise PrecisionLoss(
                "inverse of an element known to vanish to pi^{}".format(
                    self.prec
                )
            )
        v = self.valuation()
        unit = self.shift(-v)
        rel = self.ctx.series_precision
        if unit.prec is not None:
            rel = min(rel, unit.prec)
        inv = unit._unit_inverse(rel)
        if unit.is_exact:
            candidate = inv._exactified()
            if unit * candidate == self.ctx.one():
                inv = candidate
        return inv.shift(-v)

    def exact_quotient(self, other: "Elem") -> "Elem":
        r"""``self / other``, exact whenever both inputs are exact and the
        quotient has a finite expansion; otherwise the truncated quotient.
        """
        other = self._coerce(other)
        q = self / other
        if q.is_exact or not (self.is_exact and other.is_exact):
            return q
        candidate = q._exactified()
        if candidate * other == self:
            return candidate
        return q

    def __bool__(self):
        raise TypeError(
            "truth value of a field element is ambiguous; "
            "use is_zero() or is_zero_to(n)"
        )

    def __repr__(self):
        return str(self)


def _equichar(
    ctx: FieldCtx, digits: Dict[int, int], prec: Prec = None
) -> "EquicharElem":
    items = tuple(
        sorted(
            (e, b)
            for e, b in digits.items()
            if b and (prec is None or e < prec)
        )
    )
    return EquicharElem(ctx=ctx, prec=prec, digits=items)


@attr.s(auto_attribs=True, frozen=True, repr=False, kw_only=True)
class EquicharElem(Elem):
    r"""Element of :math:`F_{2^k}((\pi))`: sorted ``(exponent, bits)``
    pairs with nonzero bits.
    """

    digits: Tuple[Tuple[int, int], ...] = ()

    def _raw_valuation(self) -> Valuation:
        return self.digits[0][0] if self.digits else INFINITY

    def digit(self, exponent: int) -> ResElem:
        for e, b in self.digits:
            if e == exponent:
                return ResElem(ctx=self.ctx.residue, bits=b)
        if self.prec is not None and exponent >= self.prec:
            raise PrecisionLoss(
                "digit {} beyond known precision {}".format(
                    exponent, self.prec
                )
            )
        return self.ctx.residue.zero()

    def _residue(self) -> ResElem:
        return self.digit(0)

    def _add(self, other: "EquicharElem") -> "EquicharElem":
        digits = dict(self.digits)
        for e, b in other.digits:
            digits[e] = digits.get(e, 0) ^ b
        return _equichar(self.ctx, digits, _min_prec(self.prec, other.prec))

    def _neg(self) -> "EquicharElem":
        return self

    def _mul_repr(self, other: "EquicharElem", prec: Prec) -> "EquicharElem":
        mul = self.ctx.residue.mul_bits
        digits: Dict[int, int] = {}
        for ea, ba in self.digits:
            for eb, bb in other.digits:
                e = ea + eb
                if prec is not None and e >= prec:
                    continue
                digits[e] = digits.get(e, 0) ^ mul(ba, bb)
        return _equichar(self.ctx, digits, prec)

    def shift(self, n: int) -> "EquicharElem":
        return EquicharElem(
            ctx=self.ctx,
            prec=None if self.prec is None else self.prec + n,
            digits=tuple((e + n, b) for e, b in self.digits),
        )

    def with_prec(self, prec: Prec) -> "EquicharElem":
        return _equichar(
            self.ctx, dict(self.digits), _min_prec(self.prec, prec)
        )

    def _exactified(self) -> "EquicharElem":
        return EquicharElem(ctx=self.ctx, prec=None, digits=self.digits)

    def _unit_inverse(self, rel: int) -> "EquicharElem":
        res = self.ctx.residue
        coeff = dict(self.digits)
        c0_inv = res.inv_bits(coeff[0])
        inv = [c0_inv]
        for n in range(1, rel):
            acc = 0
            for i in range(1, n + 1):
                ci = coeff.get(i, 0)
                if ci:
                    acc ^= res.mul_bits(ci, inv[n - i])
            inv.append(res.mul_bits(c0_inv, acc))
        return _equichar(self.ctx, dict(enumerate(inv)), rel)

    def __str__(self):
        if not self.digits:
            text = "0"
        else:
            terms = []
            for e, b in self.digits:
                coeff = self.ctx.residue.bits_to_str(b)
                if "+" in coeff:
                    coeff = "({})".format(coeff)
                if e == 0:
                    terms.append(coeff)
                    continue
                mono = "pi" if e == 1 else "pi^{}".format(e)
                terms.append(mono if coeff == "1" else coeff + "*" + mono)
            text = "+".join(terms)
        if self.prec is not None:
            text += "+O(pi^{})".format(self.prec)
        return text


def _mixed(
    ctx: FieldCtx,
    coeffs: Union[Dict[Tuple[int, int], int], List[List[int]]],
    den: int = 0,
    prec: Prec = None,
) -> "MixedElem":
    E, k = ctx.ramification, ctx.residue_degree
    if isinstance(coeffs, dict):
        table = [[0] * k for _ in range(E)]
        for (i, j), n in coeffs.items():
            table[i][j] += n
    else:
        table = [list(row) for row in coeffs]
    if prec is not None:
        for i in range(E):
            bits = ceil_div(prec - i, E) + den
            if bits <= 0:
                table[i] = [0] * k
            else:
                modulus = 1 << bits
                table[i] = [n % modulus for n in table[i]]
    nonzero = [n for row in table for n in row if n]
    if not nonzero:
        den = 0
    elif den > 0:
        shift = min(den, min(two_adic_valuation(n) for n in nonzero))
        if shift:
            table = [[n >> shift for n in row] for row in table]
            den -= shift
    return MixedElem(
        ctx=ctx,
        prec=prec,
        coeffs=tuple(tuple(row) for row in table),
        den=den,
    )


def _modulus_lift(ctx: FieldCtx) -> List[int]:
    modulus = ctx.residue.modulus
    return [(modulus >> j) & 1 for j in range(ctx.residue_degree + 1)]


def _w_mul(a: Tuple[int, ...], b: Tuple[int, ...], lift: List[int]):
    k = len(a)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(k):
                if lift[j]:
                    prod[deg - k + j] -= c
    return prod[:k]


@attr.s(auto_attribs=True, frozen=True, repr=False, kw_only=True)
class MixedElem(Elem):
    r"""Element of :math:`W[\pi]/(e)`: ``coeffs[i][j]`` is the integer
    coefficient of :math:`x^j \pi^i` and ``den`` the exponent of the common
    denominator :math:`2^{den}`.
    """

    coeffs: Tuple[Tuple[int, ...], ...] = ()
    den: int = 0

    def _raw_valuation(self) -> Valuation:
        E = self.ctx.ramification
        best = INFINITY
        for i, row in enumerate(self.coeffs):
            for n in row:
                if n:
                    v = E * (two_adic_valuation(n) - self.den) + i
                    best = min(best, v)
        return best

    def _residue(self) -> ResElem:
        bits = 0
        for j, n in enumerate(self.coeffs[0]):
            bits |= ((n >> self.den) & 1) << j
        return ResElem(ctx=self.ctx.residue, bits=bits)

    def _rescaled(self, den: int) -> List[List[int]]:
        assert den >= self.den, "rescaling can only grow the denominator"
        factor = 1 << (den - self.den)
        return [[n * factor for n in row] for row in self.coeffs]

    def _add(self, other: "MixedElem") -> "MixedElem":
        den = max(self.den, other.den)
        a, b = self._rescaled(den), other._rescaled(den)
        table = [
            [x + y for x, y in zip(row_a, row_b)] for row_a, row_b in zip(a, b)
        ]
        return _mixed(self.ctx, table, den, _min_prec(self.prec, other.prec))

    def _neg(self) -> "MixedElem":
        return _mixed(
            self.ctx,
            [[-n for n in row] for row in self.coeffs],
            self.den,
            self.prec,
        )

    def _mul_repr(self, other: "MixedElem", prec: Prec) -> "MixedElem":
        ctx = self.ctx
        E, k = ctx.ramification, ctx.residue_degree
        lift = _modulus_lift(ctx)
        prod = [[0] * k for _ in range(2 * E - 1)]
        for i, row_a in enumerate(self.coeffs):
            if not any(row_a):
                continue
            for j, row_b in enumerate(other.coeffs):
                if not any(row_b):
                    continue
                w = _w_mul(row_a, row_b, lift)
                prod[i + j] = [x + y for x, y in zip(prod[i + j], w)]
        # pi^E = -(e_{E-1} pi^{E-1} + ... + e_0)
        for deg in range(2 * E - 2, E - 1, -1):
            c = prod[deg]
            if not any(c):
                continue
            prod[deg] = [0] * k
            for i, e_i in enumerate(ctx.eisenstein):
                if e_i:
                    target = prod[deg - E + i]
                    prod[deg - E + i] = [
                        t - e_i * x for t, x in zip(target, c)
                    ]
        return _mixed(ctx, prod[:E], self.den + other.den, prec)

    def shift(self, n: int) -> "MixedElem":
        if n == 0:
            return self
        if n > 0:
            return self * self.ctx.pi() ** n
        return self * _pi_inverse(self.ctx) ** (-n)

    def with_prec(self, prec: Prec) -> "MixedElem":
        return _mixed(
            self.ctx,
            [list(row) for row in self.coeffs],
            self.den,
            _min_prec(self.prec, prec),
        )

    def _exactified(self) -> "MixedElem":
        if self.prec is None:
            return self
        E = self.ctx.ramification
        table = []
        for i, row in enumerate(self.coeffs):
            bits = ceil_div(self.prec - i, E) + self.den
            if bits <= 0:
                table.append([0] * len(row))
                continue
            half, modulus = 1 << (bits - 1), 1 << bits
            table.append([n - modulus if n > half else n for n in row])
        return _mixed(self.ctx, table, self.den, None)

    def _first_sign(self) -> int:
        for row in self._exactified().coeffs:
            for n in row:
                if n:
                    return 1 if n > 0 else -1
        return 1

    def _unit_inverse(self, rel: int) -> "MixedElem":
        ctx = self.ctx
        one = ctx.one()
        approx = self.with_prec(rel)
        inv = ctx.lift(res_inv(self.residue()))
        for _ in range(rel.bit_length() + 2):
            err = (one - approx * inv).with_prec(rel)
            if err.is_zero_to(rel):
                break
            inv = (inv + inv * err).with_prec(rel)
        else:
            assert False, "Newton inverse did not converge"
        return inv.with_prec(rel)

    def __str__(self):
        terms = []
        for i, row in enumerate(self.coeffs):
            if not any(row):
                continue
            w = _format_int_poly(row)
            if i == 0:
                terms.append(w)
                continue
            mono = "pi" if i == 1 else "pi^{}".format(i)
            if w == "1":
                terms.append(mono)
            else:
                terms.append("({})*{}".format(w, mono))
        text = "+".join(terms) if terms else "0"
        if self.den:
            text = "2^-{}*({})".format(self.den, text)
        if self.prec is not None:
            text += "+O(pi^{})".format(self.prec)
        return text


def _format_int_poly(row: Tuple[int, ...]) -> str:
    text = ""
    for j in reversed(range(len(row))):
        n = row[j]
        if n == 0:
            continue
        mono = "" if j == 0 else "g" if j == 1 else "g^{}".format(j)
        if mono and abs(n) == 1:
            term = mono
        elif mono:
            term = "{}*{}".format(abs(n), mono)
        else:
            term = str(abs(n))
        if n < 0:
            text += "-" + term
        else:
            text += ("+" if text else "") + term
    return text


@functools.lru_cache(maxsize=None)
def _pi_inverse(ctx: FieldCtx) -> MixedElem:
    r"""From :math:`\pi (\pi^{E-1} + e_{E-1}\pi^{E-2} + \dots + e_1) =
    -e_0`. Exact whenever :math:`e_0 = \pm 2`.
    """
    E, e = ctx.ramification, ctx.eisenstein
    table: Dict[Tuple[int, int], int] = {(E - 1, 0): 1}
    for i in range(1, E):
        table[(i - 1, 0)] = table.get((i - 1, 0), 0) + e[i]
    numerator = _mixed(ctx, table)
    odd_part = -e[0] // 2
    half = _mixed(ctx, {(0, 0): 1}, den=1)
    if odd_part in (1, -1):
        return numerator * half * odd_part
    return numerator * half * ctx.from_int(odd_part).inverse()


# ----------------------------------------------------------------------------
# Operations
# ----------------------------------------------------------------------------


def elem_add(a: Elem, b: Elem) -> Elem:
    return a + b


def elem_sub(a: Elem, b: Elem) -> Elem:
    return a - b


def elem_mul(a: Elem, b: Elem) -> Elem:
    return a * b


def elem_div(a: Elem, b: Elem) -> Elem:
    return a / b


def valuation(a: Elem) -> Valuation:
    return a.valuation()


def residue(a: Elem) -> ResElem:
    return a.residue()


def square_defect(a: Elem) -> Tuple[Optional[int], Elem]:
    r"""Run the square-completion walk on a unit.

    Starting from a lift of the residue square root ``b``, every even
    valuation ``m`` of :math:`a - b^2` below :math:`2v(2)` is cancelled by
    adding :math:`\pi^{m/2}` times a residue square root.

    :return: ``(m, b)`` where ``m`` is the odd valuation of :math:`a - b^2`
        the walk stopped at (so :p:`a` is not a square even over the
        closure of the residue field), or ``(None, b)`` when
        :math:`v(a - b^2) \geq 2v(2)`.
    """
    ctx = a.ctx
    if a.valuation() != 0:
        raise NoSquareRoot(
            "square defect is defined on units, got valuation {}".format(
                a.valuation()
            )
        )
    if not ctx.is_mixed:
        # squares are exactly the expansions with no odd exponent
        odd = [e for e, _ in a.digits if e % 2]
        even = {e: b for e, b in a.digits if e % 2 == 0}
        if odd:
            head = {e: b for e, b in even.items() if e < odd[0]}
            return odd[0], _equichar_sqrt_digits(ctx, head, None)
        return None, _equichar_sqrt_digits(ctx, even, a.prec)
    bound = 2 * ctx.ramification
    b = ctx.lift(res_sqrt(a.residue()))
    for _ in range(bound + 1):
        delta = a - b * b
        if delta.is_zero_to(bound):
            return None, b
        m = delta.valuation()
        if m % 2:
            return m, b
        b = b + ctx.lift(res_sqrt(delta.shift(-m).residue())).shift(m // 2)
    assert False, "square-completion walk must stop below 2v(2)"


def _equichar_sqrt_digits(
    ctx: FieldCtx, digits: Dict[int, int], prec: Prec
) -> Elem:
    res = ctx.residue
    root = {e // 2: res.sqrt_bits(b) for e, b in digits.items()}
    return _equichar(ctx, root, None if prec is None else ceil_div(prec, 2))


def unit_sqrt(a: Elem) -> Elem:
    r"""Square root of a unit to working precision.

    Equichar roots are computed digit by digit (squaring is additive). Mixed
    roots run :ref:`square_defect`, one Artin-Schreier step at depth
    :math:`2v(2)` and Newton's iteration :math:`x \mapsto (x + a/x)/2`.
    Exact roots are recognised and returned exact; the root is normalized
    so that its leading integer coefficient is positive.

    :raise NoSquareRoot: :p:`a` is not a square (or not a unit).
    :raise ResidueFieldTooSmall: the root needs a larger residue field.
    """
    ctx = a.ctx
    if a.valuation() != 0:
        raise NoSquareRoot(
            "unit_sqrt expects a unit, got valuation {}".format(a.valuation())
        )
    m, b = square_defect(a)
    if m is not None:
        raise NoSquareRoot(
            "{} is not a square: odd defect at depth {}".format(a, m)
        )
    if not ctx.is_mixed:
        return b

    E = ctx.ramification
    delta = a - b * b
    if not delta.is_zero_to(2 * E + 1):
        # v(a - b^2) = 2 v(2): correct by b * 2z with z^2 + z = delta/(4b^2)
        c = (delta * (4 * b * b).inverse()).residue()
        z = res_artin_schreier(c)
        if isinstance(z, Unsolvable):
            raise ResidueFieldTooSmall(z.required_degree)
        b = b + 2 * b * ctx.lift(z)

    target = ctx.series_precision - 2 * E
    if a.prec is not None:
        target = min(target, a.prec - E)
    working = target + 2 * E
    half = _mixed(ctx, {(0, 0): 1}, den=1)
    # iterates are exactified: v(a - x^2) >= target + E pins x to the root
    # up to pi^target, and halving would otherwise cost E digits a step
    x = b
    for _ in range(2 * working.bit_length() + 4):
        if (a - x * x).is_zero_to(target + E):
            break
        x = ((x + a * x.inverse()) * half).with_prec(working)._exactified()
    else:
        assert False, "Newton square root did not converge"
    x = x.with_prec(target)
    if a.is_exact:
        candidate = x._exactified()
        if candidate * candidate == a:
            x = candidate
    return x if x._first_sign() > 0 else -x


def elem_sqrt(a: Elem) -> Elem:
    r"""Square root of any element of even valuation."""
    if a.is_zero():
        return a
    v = a.valuation()
    if v % 2:
        raise NoSquareRoot("odd valuation {}".format(v))
    return unit_sqrt(a.shift(-v)).shift(v // 2)


def is_square(a: Elem) -> bool:
    r"""Whether :p:`a` is a square over the closure of the residue field."""
    if a.is_zero():
        return True
    v = a.valuation()
    if v % 2:
        return False
    m, _ = square_defect(a.shift(-v))
    return m is None


def normalize_sqrt(d: Elem) -> Elem:
    r"""Move :math:`v(d)` into ``{0, 1}`` by an even power of :math:`\pi`;
    the field :math:`K(\sqrt{d})` is unchanged.
    """
    v = d.valuation()
    return d.shift(-2 * (v // 2))


def square_classes(ctx: FieldCtx) -> List[Elem]:
    r"""Representatives of :math:`K^*/K^{*2}` for a mixed field whose residue
    field is exactly :math:`F_{2^k}` (not its closure). Generated by
    :math:`\pi`, :math:`1 + x^j \pi^i` for odd :math:`i < 2v(2)` and
    :math:`1 + 4c` with :math:`c` of absolute trace one.
    """
    if not ctx.is_mixed:
        raise RegimeUnsupported(
            "square classes of {} are infinite in number".format(ctx)
        )
    one = ctx.one()
    generators = [ctx.pi()]
    for i in range(1, 2 * ctx.ramification, 2):
        for j in range(ctx.residue_degree):
            generators.append(one + ctx.gen() ** j * ctx.pi() ** i)
    c = next(r for r in res_elements(ctx.residue) if res_trace(r) == 1)
    generators.append(one + 4 * ctx.lift(c))
    classes = []
    for mask in itertools.product((0, 1), repeat=len(generators)):
        rep = one
        for bit, gen in zip(mask, generators):
            if bit:
                rep = rep * gen
        classes.append(rep)
    return classes


def require_regime(ctx: FieldCtx, regime: str, what: str) -> None:
    if ctx.regime != regime:
        raise RegimeMismatch(
            "{} needs a {} field, got {}".format(what, regime, ctx)
        )
