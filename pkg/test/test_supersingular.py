#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import pytest

from kodaira.core.errors import InconsistentInput, InvalidBreak, InvalidU
from kodaira.core.utils import INFINITY
from kodaira.curves import KodairaType, WeierstrassEq, j_valuation
from kodaira.curves.kodaira_types import II, IIStar, IStar0, IStarN
from kodaira.extensions import construct_extension_with_s, parse_extension
from kodaira.extensions.quadratic import twist
from kodaira.fields import FieldCtx
from kodaira.theory import (
    JValuation,
    VerificationRecord,
    allowed_istar_multiples,
    allowed_types,
    construct_supersingular_with_vj,
    converse_parameters,
    equichar_j0_break,
    equichar_parameters,
    is_good_supersingular,
    istar_index_law_holds,
    predicted_type,
    verify,
)
from kodaira.theory.supersingular import (
    CASE_A,
    CASE_B,
    STATUS_MATCH,
    STATUS_NOT_APPLICABLE,
)

Q2 = FieldCtx.mixed((-2,))
Q2_SQRT2 = FieldCtx.mixed((-2, 0))
Q2_CUBEROOT2 = FieldCtx.mixed((-2, 0, 0))
F2_LAURENT = FieldCtx.equichar(k=1, prec=48)


@pytest.mark.parametrize(
    "vj,s,kodaira,case,f",
    [
        (12, 4, IStarN(4), CASE_A, None),
        (24, 11, IStarN(20), CASE_A, None),
        (12, 7, IStarN(16), CASE_A, None),
        (INFINITY, 1, IIStar, CASE_B, 5),
        (INFINITY, 2, II, CASE_B, 1),
        (INFINITY, 3, IStar0, CASE_B, 3),
        (13, 2, II, CASE_B, 1),
        (JValuation(36), 6, IStar0, CASE_B, 3),
    ],
)
def test_predicted_type(vj, s, kodaira, case, f):
    prediction = predicted_type(vj, s)
    assert prediction.kodaira == kodaira
    assert prediction.case == case
    assert prediction.f == f
    assert prediction.to_dict()["kodaira"] == str(kodaira)


@pytest.mark.parametrize("vj,s", [(0, 3), (-2, 3), (6, 3), (18, 7)])
def test_predicted_type_rejects(vj, s):
    with pytest.raises(InconsistentInput):
        predicted_type(vj, s)


def test_jvaluation():
    assert str(JValuation(INFINITY)) == "inf"
    assert not JValuation(INFINITY).is_finite
    assert JValuation(12).is_finite


@pytest.mark.parametrize(
    "v2,expected",
    [(1, set()), (2, {1}), (3, {2, 3}), (4, {1, 2, 4, 5})],
)
def test_allowed_istar_multiples(v2, expected):
    assert allowed_istar_multiples(v2) == expected


def test_allowed_types():
    assert allowed_types(1) == {II, IIStar}
    assert allowed_types(2) == {IIStar, IStar0, IStarN(4)}
    assert allowed_types(INFINITY, max_multiple=2) == {
        II,
        IStar0,
        IIStar,
        IStarN(4),
        IStarN(8),
    }


@pytest.mark.parametrize(
    "m,v2,expected",
    [(1, 2, (4, 1)), (5, 4, (8, 1)), (1, 4, (7, 2)), (2, 3, (5, 1))],
)
def test_converse_parameters(m, v2, expected):
    s, u = converse_parameters(m, v2)
    assert (s, u) == expected
    assert 4 * s - 12 * u == 4 * m
    assert s <= 2 * v2


@pytest.mark.parametrize("m,v2", [(3, 4), (1, 1), (4, 3)])
def test_converse_parameters_rejects(m, v2):
    with pytest.raises(InvalidBreak):
        converse_parameters(m, v2)


@pytest.mark.parametrize(
    "m,expected", [(1, (7, 2)), (2, (5, 1)), (4, (7, 1)), (5, (11, 2))]
)
def test_equichar_parameters(m, expected):
    s, u = equichar_parameters(m)
    assert (s, u) == expected
    assert s % 2 == 1
    assert 4 * s - 12 * u == 4 * m


def test_equichar_j0_break():
    assert equichar_j0_break(5) == 1
    assert equichar_j0_break(3) == 3
    assert equichar_j0_break(1) == 5
    with pytest.raises(InvalidBreak):
        equichar_j0_break(2)


def test_constructed_curves_are_supersingular():
    for ctx, u in [(Q2_CUBEROOT2, 1), (Q2_CUBEROOT2, 2), (F2_LAURENT, 2)]:
        E = construct_supersingular_with_vj(ctx, u)
        assert is_good_supersingular(E)
        assert j_valuation(E) == 12 * u
    for ctx in (Q2, F2_LAURENT):
        E = construct_supersingular_with_vj(ctx, INFINITY)
        assert is_good_supersingular(E)
        assert j_valuation(E) == INFINITY


def test_ordinary_and_bad_reduction_are_not_supersingular():
    assert not is_good_supersingular(WeierstrassEq.parse(Q2, "[1,0,0,0,1]"))
    assert not is_good_supersingular(WeierstrassEq.parse(Q2, "[0,0,0,1,0]"))


@pytest.mark.parametrize(
    "ctx,u", [(Q2_CUBEROOT2, 3), (Q2, 1), (F2_LAURENT, 0), (Q2, -1)]
)
def test_construct_supersingular_rejects(ctx, u):
    with pytest.raises(InvalidU):
        construct_supersingular_with_vj(ctx, u)


def test_verify_equichar_istar16():
    E = WeierstrassEq.parse(F2_LAURENT, "[pi,pi^-5,1,0,pi^-7]")
    record = verify(E, parse_extension(F2_LAURENT, "as(pi^-7)"))
    assert record.status == STATUS_MATCH
    assert record.computed == IStarN(16)
    assert record.case == CASE_A
    assert record.index_law
    assert record.to_dict()["vj"] == "12"


@pytest.mark.parametrize("ctx", [Q2_SQRT2, Q2_CUBEROOT2])
def test_verify_realizes_the_converse(ctx):
    v2 = ctx.v2
    for m in sorted(allowed_istar_multiples(v2)):
        s, u = converse_parameters(m, v2)
        ext = construct_extension_with_s(ctx, s)
        E = twist(construct_supersingular_with_vj(ctx, u), ext)
        record = verify(E, ext)
        assert record.status == STATUS_MATCH
        assert record.computed == IStarN(4 * m)


def test_verify_not_applicable():
    E = WeierstrassEq.parse(F2_LAURENT, "[1,0,0,0,pi]")
    record = verify(E, parse_extension(F2_LAURENT, "as(pi^-1)"))
    assert record.status == STATUS_NOT_APPLICABLE
    assert record.predicted is None
    assert not record.match
    assert record.to_dict()["computed"] is None


@pytest.mark.parametrize(
    "computed,s,vj,expected",
    [
        (IStarN(4), 4, 12, True),
        (IStarN(4), 4, 24, False),
        (IStarN(4), 4, INFINITY, False),
        (IStar0, 4, 24, True),
        (KodairaType("II"), 1, 6, True),
        (None, 1, 6, True),
    ],
)
def test_istar_index_law(computed, s, vj, expected):
    record = VerificationRecord(
        field="f", curve="c", ext="e", s=s, vj=vj, computed=computed
    )
    assert istar_index_law_holds(record) == expected
