#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Quadratic extensions :math:`L/K`, their ramification break
:math:`s_{L/K}` and quadratic twists.

Three presentations are supported, each registered under its keyword of the
extension grammar::

    as(D=<elem>)          z^2 + z + D          equichar
    sqrt(<elem>)          z^2 - D              mixed
    eis(a=<elem>,b=<elem>) z^2 + a z + b       mixed, Eisenstein

:math:`L` is never built as a field: the different of :math:`L/K` is
computed in :ref:`QuadraticAlgebra` from the trace and norm of a uniformizer
of :math:`L`.
"""

import re
from typing import Dict, List, Optional, Tuple

import attr

from kodaira.core.errors import (
    InvalidBreak,
    NotANonSquareUnit,
    ParseError,
    ReducibleExtension,
    RegimeMismatch,
)
from kodaira.core.registry import registry
from kodaira.core.utils import INFINITY, positive_validator
from kodaira.curves.weierstrass import WeierstrassEq, invariants
from kodaira.fields.local import (
    EQUICHAR,
    MIXED,
    Elem,
    FieldCtx,
    is_square,
    normalize_sqrt,
    require_regime,
    square_defect,
)
from kodaira.fields.parsing import parse_elem
from kodaira.fields.residue import res_sqrt

_CALL = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")

# odd breaks listed for equichar fields when no cap is given
DEFAULT_EQUICHAR_BREAK_CAP = 11


@attr.s(auto_attribs=True, frozen=True)
class RamificationBreak:
    s: int = attr.ib(validator=positive_validator)

    def __int__(self):
        return self.s


@attr.s(auto_attribs=True, frozen=True, repr=False)
class ExtensionSpec:
    r"""Base class of quadratic extension presentations."""

    @property
    def ctx(self) -> FieldCtx:
        raise NotImplementedError

    @classmethod
    def from_args(
        cls, ctx: FieldCtx, positional: List[str], named: Dict[str, str]
    ) -> "ExtensionSpec":
        raise NotImplementedError

    def validate(self) -> None:
        raise NotImplementedError

    def __repr__(self):
        return str(self)


@registry.register_extension(name="as")
@attr.s(auto_attribs=True, frozen=True, repr=False)
class ArtinSchreier(ExtensionSpec):
    r"""Splitting field of :math:`z^2 + z + D`, equicharacteristic only."""

    D: Elem

    @property
    def ctx(self) -> FieldCtx:
        return self.D.ctx

    @classmethod
    def from_args(cls, ctx, positional, named):
        text = named.get("D", positional[0] if positional else None)
        if text is None:
            raise ParseError("as(...) needs D=<elem>")
        return cls(parse_elem(ctx, text))

    def validate(self) -> None:
        require_regime(self.ctx, EQUICHAR, "an Artin-Schreier extension")
        normalize_as(self.D)

    def __str__(self):
        return "as(D={})".format(self.D)


@registry.register_extension(name="sqrt")
@attr.s(auto_attribs=True, frozen=True, repr=False)
class SqrtD(ExtensionSpec):
    r""":math:`K(\sqrt{D})`, mixed characteristic only."""

    D: Elem

    @property
    def ctx(self) -> FieldCtx:
        return self.D.ctx

    @classmethod
    def from_args(cls, ctx, positional, named):
        text = named.get("D", positional[0] if positional else None)
        if text is None:
            raise ParseError("sqrt(...) needs an element")
        return cls(parse_elem(ctx, text))

    def validate(self) -> None:
        require_regime(self.ctx, MIXED, "a square-root extension")
        D = normalize_sqrt(self.D)
        if D.valuation() == 0 and square_defect(D)[0] is None:
            raise NotANonSquareUnit(
                "{} is a square over the closure of the residue field".format(
                    self.D
                )
            )

    def __str__(self):
        return "sqrt({})".format(self.D)


@registry.register_extension(name="eis")
@attr.s(auto_attribs=True, frozen=True, repr=False)
class Eisenstein2(ExtensionSpec):
    r"""Splitting field of the Eisenstein polynomial :math:`z^2 + az + b`."""

    a: Elem
    b: Elem

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    @classmethod
    def from_args(cls, ctx, positional, named):
        values = dict(zip(("a", "b"), positional))
        values.update(named)
        if set(values) != {"a", "b"}:
            raise ParseError("eis(...) needs a=<elem>,b=<elem>")
        return cls(parse_elem(ctx, values["a"]), parse_elem(ctx, values["b"]))

    def validate(self) -> None:
        require_regime(self.ctx, MIXED, "an Eisenstein extension")
        if self.b.valuation() != 1:
            raise ParseError(
                "z^2+az+b is not Eisenstein: v(b) = {}".format(
                    self.b.valuation()
                )
            )
        if not self.a.is_zero() and self.a.valuation() < 1:
            raise ParseError("z^2+az+b is not Eisenstein: a is a unit")

    def __str__(self):
        return "eis(a={},b={})".format(self.a, self.b)


def parse_extension(ctx: FieldCtx, text: str) -> ExtensionSpec:
    r"""Parse the extension grammar and validate the result."""
    match = _CALL.match(text)
    if match is None:
        raise ParseError("malformed extension {!r}".format(text))
    keyword, body = match.groups()
    spec_cls = registry.get_extension(keyword)
    if spec_cls is None:
        raise ParseError(
            "unknown extension {!r}; expected as(...), sqrt(...) or "
            "eis(...)".format(keyword)
        )
    positional: List[str] = []
    named: Dict[str, str] = {}
    for part in body.split(","):
        part = part.strip()
        if not part:
            raise ParseError("empty argument in {!r}".format(text))
        key, sep, value = part.partition("=")
        if sep:
            named[key.strip()] = value.strip()
        else:
            positional.append(part)
    ext = spec_cls.from_args(ctx, positional, named)
    ext.validate()
    return ext


# ----------------------------------------------------------------------------
# Ramification break
# ----------------------------------------------------------------------------


def normalize_as(D: Elem) -> Elem:
    r"""Make :math:`v(D)` odd by substitutions :math:`z = Z + b/\pi^s`
    killing the leading term of even valuation :math:`-2s`.

    :raise ReducibleExtension: :math:`v(D) \geq 0` is reached, so
        :math:`z^2 + z + D` has a root over the closure by Hensel.
    """
    ctx = D.ctx
    require_regime(ctx, EQUICHAR, "normalize_as")
    while True:
        if D.is_zero():
            raise ReducibleExtension("z^2 + z has the root 0")
        v = D.valuation()
        if v >= 0:
            raise ReducibleExtension(
                "v(D) = {} >= 0: z^2 + z + D splits by Hensel".format(v)
            )
        if v % 2:
            return D
        s = -v // 2
        c = ctx.lift(res_sqrt(D.leading_residue())).shift(-s)
        D = D + c + c * c


def to_eisenstein(ext: SqrtD) -> Eisenstein2:
    r"""Rewrite :math:`K(\sqrt{D})` for a non-square unit :math:`D` as the
    splitting field of an Eisenstein polynomial :math:`z^2 + az + b`.

    With :math:`D = \beta^2 + \delta`, :math:`v(\delta) = m` odd and
    :math:`h = (m - 1)/2`, the element :math:`(\sqrt{D} - \beta)/\pi^h` is a
    uniformizer with minimal polynomial
    :math:`z^2 + 2\beta\pi^{-h} z + (\beta^2 - D)\pi^{-2h}`.
    """
    D = ext.D
    require_regime(D.ctx, MIXED, "to_eisenstein")
    if D.valuation() != 0:
        raise NotANonSquareUnit("{} is not a unit".format(D))
    m, beta = square_defect(D)
    if m is None:
        raise NotANonSquareUnit(
            "{} is a square over the closure of the residue field".format(D)
        )
    h = (m - 1) // 2
    a = (2 * beta).shift(-h)
    b = (beta * beta - D).shift(-2 * h)
    # a^2 - 4b = D c^2 with v(c) = v(a)
    c_squared = (a * a - 4 * b).exact_quotient(D)
    assert b.valuation() == 1, "constant term must have valuation 1"
    assert is_square(c_squared), "a^2 - 4b must be D times a square"
    assert c_squared.valuation() == 2 * a.valuation(), "v(c) must equal v(a)"
    return Eisenstein2(a, b)


def compute_s(ext: ExtensionSpec) -> RamificationBreak:
    r"""The break :math:`s_{L/K}`: :math:`-v(D)` after normalization for
    Artin-Schreier, :math:`2v(2)` for :math:`\sqrt{D}` with
    :math:`v(D) = 1`, :math:`2v(a) - 1` for Eisenstein (capped at
    :math:`2v(2)`, the value when :math:`v(a) > v(2)`).
    """
    ext.validate()
    if isinstance(ext, ArtinSchreier):
        return RamificationBreak(-normalize_as(ext.D).valuation())
    if isinstance(ext, SqrtD):
        D = normalize_sqrt(ext.D)
        if D.valuation() == 1:
            return RamificationBreak(2 * ext.ctx.v2)
        return compute_s(to_eisenstein(SqrtD(D)))
    if isinstance(ext, Eisenstein2):
        v2 = ext.ctx.v2
        if ext.a.is_zero():
            return RamificationBreak(2 * v2)
        return RamificationBreak(min(2 * ext.a.valuation() - 1, 2 * v2))
    raise TypeError("unknown extension presentation {!r}".format(ext))


@attr.s(auto_attribs=True, frozen=True)
class QuadraticAlgebra:
    r""":math:`K[z]/(z^2 + c_1 z + c_0)`; elements are pairs ``(x, y)``
    standing for :math:`x + yz`.
    """

    c1: Elem
    c0: Elem

    def mul(
        self, p: Tuple[Elem, Elem], q: Tuple[Elem, Elem]
    ) -> Tuple[Elem, Elem]:
        x1, y1 = p
        x2, y2 = q
        yy = y1 * y2
        # z^2 = -c1 z - c0
        return (x1 * x2 - yy * self.c0, x1 * y2 + x2 * y1 - yy * self.c1)

    def power(self, p: Tuple[Elem, Elem], n: int) -> Tuple[Elem, Elem]:
        assert n >= 0, "only nonnegative powers"
        ctx = self.c0.ctx
        result = (ctx.one(), ctx.zero())
        for _ in range(n):
            result = self.mul(result, p)
        return result

    def trace(self, p: Tuple[Elem, Elem]) -> Elem:
        x, y = p
        return 2 * x - self.c1 * y

    def norm(self, p: Tuple[Elem, Elem]) -> Elem:
        x, y = p
        return x * x - self.c1 * x * y + self.c0 * y * y


def _uniformizer(ext: ExtensionSpec) -> Tuple[QuadraticAlgebra, Tuple]:
    ctx = ext.ctx
    one, zero = ctx.one(), ctx.zero()
    if isinstance(ext, ArtinSchreier):
        D = normalize_as(ext.D)
        r = -D.valuation()
        algebra = QuadraticAlgebra(c1=one, c0=D)
        # pi^m alpha^n with 2m - rn = 1
        n = 1
        m = (r * n + 1) // 2
        x, y = algebra.power((zero, one), n)
        return algebra, (x.shift(m), y.shift(m))
    if isinstance(ext, SqrtD):
        D = normalize_sqrt(ext.D)
        algebra = QuadraticAlgebra(c1=zero, c0=-D)
        if D.valuation() == 1:
            return algebra, (zero, one)
        m, beta = square_defect(D)
        if m is None:
            raise NotANonSquareUnit("{} has no odd square defect".format(D))
        h = (m - 1) // 2
        return algebra, ((-beta).shift(-h), one.shift(-h))
    if isinstance(ext, Eisenstein2):
        return QuadraticAlgebra(c1=ext.a, c0=ext.b), (zero, one)
    raise TypeError("unknown extension presentation {!r}".format(ext))


def different_oracle(ext: ExtensionSpec) -> int:
    r""":math:`v_L(g'(\pi_L))` for a uniformizer :math:`\pi_L` with minimal
    polynomial :math:`g = T^2 - \mathrm{Tr}\,T + N`. Since
    :math:`g'(\pi_L) = 2\pi_L - \mathrm{Tr}` and
    :math:`v_L(x + y\pi_L) = \min(2v(x), 2v(y) + 1)`, this is
    :math:`\min(2v(\mathrm{Tr}), 2v(2) + 1)`.
    """
    ext.validate()
    algebra, pi_l = _uniformizer(ext)
    trace = algebra.trace(pi_l)
    norm = algebra.norm(pi_l)
    if norm.valuation() != 1:
        raise ReducibleExtension(
            "constructed element has norm valuation {}, not a "
            "uniformizer".format(norm.valuation())
        )
    v_trace = INFINITY if trace.is_zero() else trace.valuation()
    assert v_trace >= 1, "minimal polynomial of a uniformizer is Eisenstein"
    return int(min(2 * v_trace, 2 * ext.ctx.v2 + 1))


def s_bounds(ctx: FieldCtx, cap: Optional[int] = None) -> List[int]:
    r"""Admissible breaks: odd :math:`s < 2v(2)` and :math:`2v(2)` for mixed
    fields, odd :math:`s \leq` :p:`cap` for equichar fields.
    """
    if ctx.is_mixed:
        v2 = ctx.v2
        return list(range(1, 2 * v2, 2)) + [2 * v2]
    cap = DEFAULT_EQUICHAR_BREAK_CAP if cap is None else cap
    return list(range(1, cap + 1, 2))


def construct_extension_with_s(ctx: FieldCtx, s: int) -> ExtensionSpec:
    r"""An extension with break :p:`s`: :math:`z^2 + z + \pi^{-s}`
    (equichar), :math:`z^2 - \pi` for :math:`s = 2v(2)` or
    :math:`z^2 + \pi^{(s+1)/2} z + \pi` for odd :math:`s < 2v(2)`.

    :raise InvalidBreak: :p:`s` is not admissible.
    """
    pi = ctx.pi()
    if not ctx.is_mixed:
        if s < 1 or s % 2 == 0:
            raise InvalidBreak(
                "equichar breaks are odd and positive, got {}".format(s)
            )
        return ArtinSchreier(pi ** (-s))
    v2 = ctx.v2
    if s == 2 * v2:
        return SqrtD(pi)
    if s < 1 or s % 2 == 0 or s > 2 * v2 - 1:
        raise InvalidBreak(
            "breaks over {} are odd in [1, {}] or equal {}, got {}".format(
                ctx, 2 * v2 - 1, 2 * v2, s
            )
        )
    return Eisenstein2(pi ** ((s + 1) // 2), pi)


# ----------------------------------------------------------------------------
# Twists
# ----------------------------------------------------------------------------


def quadratic_twist_by(E: WeierstrassEq, D: Elem) -> WeierstrassEq:
    r"""The raw twist formula. Mixed:
    :math:`y^2 = x^3 + Db_2x^2 + 8D^2b_4x + 16D^3b_6`; equichar:
    :math:`a_2 + Da_1^2` and :math:`a_6 + Da_3^2`.
    """
    ctx = E.ctx
    if ctx.is_mixed:
        inv = invariants(E, with_j=False)
        zero = ctx.zero()
        return WeierstrassEq(
            ctx,
            zero,
            D * inv.b2,
            zero,
            8 * D * D * inv.b4,
            16 * D ** 3 * inv.b6,
        )
    a1, a2, a3, a4, a6 = E.ainvs
    return WeierstrassEq(ctx, a1, a2 + D * a1 * a1, a3, a4, a6 + D * a3 * a3)


def twisting_scalar(ext: ExtensionSpec) -> Elem:
    if isinstance(ext, ArtinSchreier):
        return ext.D
    if isinstance(ext, SqrtD):
        return ext.D
    if isinstance(ext, Eisenstein2):
        return ext.a * ext.a - 4 * ext.b
    raise TypeError("unknown extension presentation {!r}".format(ext))


def twist(E: WeierstrassEq, ext: ExtensionSpec) -> WeierstrassEq:
    r"""Quadratic twist of :p:`E` by :math:`L/K`. Not necessarily minimal."""
    if E.ctx != ext.ctx:
        raise RegimeMismatch("{} vs {}".format(E.ctx, ext.ctx))
    if E.ctx.is_mixed == isinstance(ext, ArtinSchreier):
        raise RegimeMismatch(
            "{} cannot twist a curve over {}".format(ext, E.ctx)
        )
    return quadratic_twist_by(E, twisting_scalar(ext))
