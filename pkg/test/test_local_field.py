#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from kodaira.core.errors import (
    CtxMismatch,
    DivisionByZero,
    NegativeValuation,
    NoSquareRoot,
    ParseError,
    PrecisionLoss,
    RegimeUnsupported,
    ResidueFieldTooSmall,
)
from kodaira.core.utils import INFINITY
from kodaira.fields import (
    FieldCtx,
    elem_sqrt,
    is_square,
    normalize_sqrt,
    parse_elem,
    parse_field,
    square_classes,
    square_defect,
    unit_sqrt,
)

Q2 = FieldCtx.mixed((-2,))
Q2_SQRT2 = FieldCtx.mixed((-2, 0))
Q2_CUBEROOT2 = FieldCtx.mixed((-2, 0, 0))
F2_LAURENT = FieldCtx.equichar(k=1, prec=32)


def _same(a, b):
    return (a - b).is_zero()


@pytest.mark.parametrize(
    "descriptor,regime,ramification,k,prec",
    [
        ("equichar(k=2,prec=40)", "equichar", 1, 2, 40),
        ('mixed(k=1,eis="z-2",prec=64)', "mixed", 1, 1, 64),
        ('mixed(k=1,eis="z^2-2",prec=32)', "mixed", 2, 1, 32),
        ('mixed(k=2,eis="z^2-2*z+2")', "mixed", 2, 2, 64),
        ('mixed(eis="z^3-2")', "mixed", 3, 1, 64),
    ],
)
def test_parse_field(descriptor, regime, ramification, k, prec):
    ctx = parse_field(descriptor)
    assert ctx.regime == regime
    assert ctx.ramification == ramification
    assert ctx.residue_degree == k
    assert ctx.precision == prec
    assert parse_field(descriptor, precision=96).precision == 96
    assert parse_field(str(ctx)) == ctx


@pytest.mark.parametrize(
    "descriptor",
    [
        'mixed(k=1,eis="z^2-4",prec=64)',
        'mixed(k=1,eis="z^2+z-2",prec=64)',
        'mixed(k=1,eis="2*z-2",prec=64)',
        "mixed(k=1,prec=64)",
        'equichar(k=1,eis="z-2")',
        "equichar(k=5)",
        "equichar(k=1,depth=3)",
        "padic(k=1)",
        "equichar",
    ],
)
def test_parse_field_rejects(descriptor):
    with pytest.raises(ParseError):
        parse_field(descriptor)


@pytest.mark.parametrize("text", ["", "pi +", "x^2", "pi.5", "sqrt(2)"])
def test_parse_elem_rejects(text):
    with pytest.raises(ParseError):
        parse_elem(Q2, text)


def test_uniformizer_relations():
    assert _same(Q2.pi(), Q2.from_int(2))
    assert _same(Q2_SQRT2.pi() ** 2, Q2_SQRT2.from_int(2))
    assert _same(Q2_CUBEROOT2.pi() ** 3, Q2_CUBEROOT2.from_int(2))
    for ctx in (Q2, Q2_SQRT2, Q2_CUBEROOT2):
        assert ctx.from_int(2).valuation() == ctx.v2 == ctx.ramification
        assert ctx.pi().valuation() == 1
    assert F2_LAURENT.v2 == INFINITY
    assert F2_LAURENT.from_int(2).is_zero()


def test_valuations():
    assert parse_elem(Q2_CUBEROOT2, "2 + 3*pi").valuation() == 1
    assert parse_elem(Q2_SQRT2, "12").valuation() == 4
    assert parse_elem(Q2_SQRT2, "pi^-3 + 1").valuation() == -3
    assert parse_elem(F2_LAURENT, "pi^-3 + pi").valuation() == -3
    assert F2_LAURENT.zero().valuation() == INFINITY


def test_residues():
    f4 = FieldCtx.equichar(k=2, prec=16)
    x = parse_elem(f4, "g + pi")
    assert x.residue() == f4.residue.gen()
    assert parse_elem(Q2, "5").residue() == Q2.residue.one()
    with pytest.raises(NegativeValuation):
        parse_elem(F2_LAURENT, "pi^-1").residue()


def test_frobenius_in_characteristic_two():
    lhs = parse_elem(F2_LAURENT, "(1 + pi)^2")
    assert lhs == parse_elem(F2_LAURENT, "1 + pi^2")
    assert _same(F2_LAURENT.one() + F2_LAURENT.one(), F2_LAURENT.zero())


def test_inverse_of_a_unit():
    for ctx in (Q2, Q2_SQRT2, F2_LAURENT):
        x = parse_elem(ctx, "1 + pi + pi^2")
        inv = x.inverse()
        assert not inv.is_exact
        assert (x * inv - 1).is_zero_to(ctx.series_precision)


def test_exact_inverse_of_two():
    half = Q2.from_int(2).inverse()
    assert half.is_exact
    assert half.valuation() == -1
    assert _same(half * 2, Q2.one())
    assert _same(Q2_SQRT2.pi() * Q2_SQRT2.pi().inverse(), Q2_SQRT2.one())


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q2.zero().inverse()
    with pytest.raises(DivisionByZero):
        F2_LAURENT.one() / F2_LAURENT.zero()


def test_precision_loss():
    inv = parse_elem(Q2, "3").inverse()
    with pytest.raises(PrecisionLoss):
        (inv - inv).valuation()
    with pytest.raises(PrecisionLoss):
        (inv - inv).inverse()
    assert (inv - inv).valuation_lower_bound() == inv.prec


def test_context_mismatch_and_truth_value():
    with pytest.raises(CtxMismatch):
        Q2.one() + Q2_SQRT2.one()
    with pytest.raises(TypeError):
        bool(Q2.one())


def test_ring_axioms_on_random_elements():
    rng = np.random.RandomState(0)
    for ctx in (Q2_SQRT2, Q2_CUBEROOT2, F2_LAURENT):
        pi = ctx.pi()
        for _ in range(20):
            a, b, c = (
                sum(
                    int(n) * pi ** i
                    for i, n in enumerate(rng.randint(-8, 8, size=4))
                )
                + ctx.zero()
                for _ in range(3)
            )
            assert _same(a * (b + c), a * b + a * c)
            assert _same((a + b) * c, c * b + c * a)
            assert _same(a - a, ctx.zero())


def test_square_defect():
    m, _ = square_defect(Q2.from_int(3))
    assert m == 1
    m, b = square_defect(Q2.from_int(5))
    assert m is None
    assert (Q2.from_int(5) - b * b).is_zero_to(2 * Q2.ramification)
    m, _ = square_defect(parse_elem(F2_LAURENT, "1 + pi^2 + pi^5"))
    assert m == 5
    with pytest.raises(NoSquareRoot):
        square_defect(Q2.from_int(2))


@pytest.mark.parametrize(
    "text,expected", [("5", True), ("3", False), ("17", True), ("7", False)]
)
def test_is_square_over_the_closure(text, expected):
    assert is_square(parse_elem(Q2, text)) == expected


def test_is_square_odd_valuation():
    assert not is_square(Q2.pi())
    assert is_square(Q2_SQRT2.from_int(2))
    assert is_square(F2_LAURENT.zero())


def test_unit_sqrt_exact():
    root = unit_sqrt(Q2.from_int(9))
    assert root.is_exact
    assert _same(root, Q2.from_int(3))
    root = unit_sqrt(parse_elem(F2_LAURENT, "1 + pi^2 + pi^6"))
    assert _same(root, parse_elem(F2_LAURENT, "1 + pi + pi^3"))


@pytest.mark.parametrize("ctx", [Q2, Q2_SQRT2, Q2_CUBEROOT2])
def test_unit_sqrt_of_nine_in_every_tower(ctx):
    root = unit_sqrt(ctx.from_int(9))
    assert root.is_exact
    assert _same(root, ctx.from_int(3))


@pytest.mark.parametrize(
    "ctx,n",
    [
        (FieldCtx.mixed((-2,), prec=32), 17),
        (Q2, 17),
        (Q2, -7),
        (Q2_SQRT2, 17),
        (Q2_CUBEROOT2, 33),
    ],
)
def test_unit_sqrt_of_a_non_perfect_square(ctx, n):
    root = unit_sqrt(ctx.from_int(n))
    assert not root.is_exact
    assert root.prec >= ctx.series_precision - 2 * ctx.ramification
    assert (root * root - n).is_zero_to(root.prec)


def test_unit_sqrt_of_an_inexact_square():
    a = Q2.from_int(17).with_prec(40)
    root = unit_sqrt(a)
    assert root.prec == 39
    assert (root * root - a).is_zero_to(39)


def test_unit_sqrt_grows_residue_field():
    with pytest.raises(ResidueFieldTooSmall) as e:
        unit_sqrt(Q2.from_int(5))
    assert e.value.required_degree == 2
    ctx = Q2.with_residue_degree(2)
    root = unit_sqrt(ctx.from_int(5))
    assert (root * root - 5).is_zero_to(ctx.series_precision - 4)


def test_unit_sqrt_not_a_square():
    with pytest.raises(NoSquareRoot):
        unit_sqrt(Q2.from_int(3))
    with pytest.raises(NoSquareRoot):
        unit_sqrt(Q2.from_int(4))


def test_elem_sqrt():
    root = elem_sqrt(parse_elem(Q2_SQRT2, "2*9"))
    assert root.valuation() == 1
    assert _same(root * root, parse_elem(Q2_SQRT2, "18"))
    with pytest.raises(NoSquareRoot):
        elem_sqrt(Q2_SQRT2.pi())


def test_normalize_sqrt():
    assert normalize_sqrt(parse_elem(F2_LAURENT, "pi^-2")).valuation() == 0
    assert normalize_sqrt(parse_elem(F2_LAURENT, "pi^-3")).valuation() == 1
    assert normalize_sqrt(Q2_SQRT2.pi() ** 5).valuation() == 1


@pytest.mark.parametrize(
    "ctx,count", [(Q2, 8), (Q2_SQRT2, 16), (Q2.with_residue_degree(2), 16)]
)
def test_square_classes(ctx, count):
    classes = square_classes(ctx)
    assert len(classes) == count
    assert classes[0] == ctx.one()


def test_square_classes_equichar_is_infinite():
    with pytest.raises(RegimeUnsupported):
        square_classes(F2_LAURENT)
