#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Residue fields :math:`F_{2^k}` in polynomial basis.

Elements are stored as python ints whose bit ``i`` is the coefficient of
``g^i`` where ``g`` is a root of the context modulus. The residue field of the
local fields in this library is algebraically closed in theory; here it is
approximated by :math:`F_{2^k}` and grown on demand (doubling ``k``) whenever a
root lives outside the current field, see :ref:`res_artin_schreier`.
"""

from typing import Iterator, List, Optional, Union

import attr

from kodaira.core.errors import CtxMismatch, DivisionByZero

# Primitive (hence irreducible) moduli, as exponent tuples. Growth doubles k
# so every degree reachable from 1 or 3 is listed.
MODULUS_EXPONENTS = {
    1: (1, 0),
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    6: (6, 4, 3, 1, 0),
    8: (8, 4, 3, 2, 0),
    12: (12, 7, 6, 5, 3, 1, 0),
    16: (16, 5, 3, 2, 0),
}


def _bits_from_exponents(exponents) -> int:
    bits = 0
    for e in exponents:
        bits |= 1 << e
    return bits


def clmul(a: int, b: int) -> int:
    r"""Carry-less product of two bit polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, m: int) -> int:
    deg_m = m.bit_length() - 1
    while a.bit_length() - 1 >= deg_m:
        a ^= m << (a.bit_length() - 1 - deg_m)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n: int) -> List[int]:
    factors, p = [], 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def is_irreducible(modulus: int) -> bool:
    r"""Rabin's irreducibility test over :math:`F_2`.

    :param modulus: bit polynomial of degree ``k >= 1``.
    :return: :py:`True` iff the polynomial is irreducible.
    """
    k = modulus.bit_length() - 1
    if k < 1:
        return False
    x = 0b10

    def frobenius_power(times: int) -> int:
        # x^(2^times) mod modulus
        y = x
        for _ in range(times):
            y = poly_mod(clmul(y, y), modulus)
        return y

    if frobenius_power(k) != poly_mod(x, modulus):
        return False
    for q in _prime_factors(k):
        h = frobenius_power(k // q) ^ poly_mod(x, modulus)
        if poly_gcd(modulus, h) != 1:
            return False
    return True


@attr.s(auto_attribs=True, frozen=True)
class Unsolvable:
    r"""Structured "no root here" answer of :ref:`res_artin_schreier`.

    :property required_degree: the residue degree in which a root exists.
    """

    required_degree: int


@attr.s(auto_attribs=True, frozen=True, repr=False)
class ResCtx:
    r"""The field :math:`F_2[x]/(modulus)`."""

    degree: int
    modulus: int

    def __attrs_post_init__(self):
        assert self.modulus.bit_length() - 1 == self.degree, (
            "modulus degree {} does not match k={}".format(
                self.modulus.bit_length() - 1, self.degree
            )
        )

    @classmethod
    def for_degree(cls, k: int) -> "ResCtx":
        if k not in MODULUS_EXPONENTS:
            raise ValueError(
                "no shipped modulus for residue degree {}; available: {}"
                .format(k, sorted(MODULUS_EXPONENTS))
            )
        modulus = _bits_from_exponents(MODULUS_EXPONENTS[k])
        return cls(degree=k, modulus=modulus)

    @property
    def size(self) -> int:
        return 1 << self.degree

    def __repr__(self):
        return "ResCtx(F_2^{})".format(self.degree)

    # bit-level arithmetic, shared with the local fields

    def mul_bits(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def pow_bits(self, a: int, n: int) -> int:
        assert n >= 0, "negative powers go through inv_bits"
        result = 1
        while n:
            if n & 1:
                result = self.mul_bits(result, a)
            a = self.mul_bits(a, a)
            n >>= 1
        return result

    def inv_bits(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0 in {}".format(self))
        # a^(2^k - 2)
        return self.pow_bits(a, self.size - 2) if self.size > 2 else 1

    def sqrt_bits(self, a: int) -> int:
        for _ in range(self.degree - 1):
            a = self.mul_bits(a, a)
        return a

    def trace_bits(self, a: int) -> int:
        t, y = 0, a
        for _ in range(self.degree):
            t ^= y
            y = self.mul_bits(y, y)
        assert t in (0, 1), "trace must land in F_2"
        return t

    def artin_schreier_bits(self, c: int) -> Optional[int]:
        r"""Smallest z with z^2 + z = c, or :py:`None`. The map z -> z^2 + z
        is F_2-linear, so the root comes from Gaussian elimination on its
        k x k matrix in the polynomial basis.
        """
        if self.trace_bits(c) != 0:
            return None
        k = self.degree
        columns = [self.mul_bits(1 << i, 1 << i) ^ (1 << i) for i in range(k)]
        # rows: equation j is  sum_i z_i * bit_j(columns[i]) = bit_j(c)
        rows = []
        for j in range(k):
            row = 0
            for i in range(k):
                if (columns[i] >> j) & 1:
                    row |= 1 << i
            rows.append([row, (c >> j) & 1])
        pivots = []
        r = 0
        for i in range(k):
            pivot = next(
                (p for p in range(r, k) if (rows[p][0] >> i) & 1), None
            )
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            for p in range(k):
                if p != r and (rows[p][0] >> i) & 1:
                    rows[p][0] ^= rows[r][0]
                    rows[p][1] ^= rows[r][1]
            pivots.append(i)
            r += 1
        for p in range(r, k):
            if rows[p][1]:
                return None
        # free variables at 0
        z = 0
        for p, i in enumerate(pivots):
            if rows[p][1]:
                z |= 1 << i
        assert self.mul_bits(z, z) ^ z == c, "Artin-Schreier solve failed"
        return min(z, z ^ 1)

    def bits_to_str(self, a: int) -> str:
        if a == 0:
            return "0"
        terms = []
        for i in reversed(range(self.degree)):
            if (a >> i) & 1:
                terms.append("1" if i == 0 else "g" if i == 1 else f"g^{i}")
        return "+".join(terms)

    # element constructors

    def element(self, bits: int) -> "ResElem":
        return ResElem(ctx=self, bits=poly_mod(bits, self.modulus))

    def zero(self) -> "ResElem":
        return ResElem(ctx=self, bits=0)

    def one(self) -> "ResElem":
        return ResElem(ctx=self, bits=1)

    def gen(self) -> "ResElem":
        return self.element(0b10)


@attr.s(auto_attribs=True, frozen=True, repr=False)
class ResElem:
    ctx: ResCtx
    bits: int

    def _check(self, other: "ResElem") -> None:
        if self.ctx != other.ctx:
            raise CtxMismatch("{} vs {}".format(self.ctx, other.ctx))

    def __add__(self, other: "ResElem") -> "ResElem":
        self._check(other)
        return ResElem(ctx=self.ctx, bits=self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self) -> "ResElem":
        return self

    def __mul__(self, other: "ResElem") -> "ResElem":
        self._check(other)
        return ResElem(
            ctx=self.ctx, bits=self.ctx.mul_bits(self.bits, other.bits)
        )

    def __pow__(self, n: int) -> "ResElem":
        if n < 0:
            return res_inv(self) ** (-n)
        return ResElem(ctx=self.ctx, bits=self.ctx.pow_bits(self.bits, n))

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return self.ctx.bits_to_str(self.bits)

    def __repr__(self):
        return "ResElem({}; {})".format(self, self.ctx)


def res_add(a: ResElem, b: ResElem) -> ResElem:
    return a + b


def res_mul(a: ResElem, b: ResElem) -> ResElem:
    return a * b


def res_inv(a: ResElem) -> ResElem:
    return ResElem(ctx=a.ctx, bits=a.ctx.inv_bits(a.bits))


def res_sqrt(a: ResElem) -> ResElem:
    r"""The unique square root, :math:`a^{2^{k-1}}`."""
    return ResElem(ctx=a.ctx, bits=a.ctx.sqrt_bits(a.bits))


def res_trace(a: ResElem) -> int:
    return a.ctx.trace_bits(a.bits)


def res_artin_schreier(c: ResElem) -> Union[ResElem, Unsolvable]:
    r"""Root of :math:`z^2 + z + c` (equivalently :math:`z^2 + z = c`).

    :return: the root with the lexicographically smaller bit vector, or
        :ref:`Unsolvable` carrying degree ``2k`` when the absolute trace of
        ``c`` is 1.
    """
    z = c.ctx.artin_schreier_bits(c.bits)
    if z is None:
        return Unsolvable(required_degree=2 * c.ctx.degree)
    return ResElem(ctx=c.ctx, bits=z)


def res_elements(ctx: ResCtx) -> Iterator[ResElem]:
    for bits in range(ctx.size):
        yield ResElem(ctx=ctx, bits=bits)
