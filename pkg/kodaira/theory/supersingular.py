#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Reduction types of curves with additive reduction that acquire good
supersingular reduction over a wildly ramified quadratic extension.

If :math:`E/K` has additive reduction, :math:`L/K` is quadratic with break
:math:`s` and :math:`E_L` has good supersingular reduction, then

-   :math:`v(j) \leq 4s - 4` gives type :math:`I^*_{4s - v(j)}`, with
    :math:`12 \mid v(j)`;
-   otherwise the type is ``II``, ``I*0`` or ``II*`` according to
    :math:`f \equiv 2s + 3 \pmod 6` being 1, 3 or 5.

The predicates below state this, the constructions realize every allowed
type and :ref:`verify` compares both against Tate's algorithm.
"""

from typing import Optional, Set, Tuple, Union

import attr

from kodaira.core.errors import (
    InconsistentInput,
    InvalidBreak,
    InvalidU,
    TateError,
)
from kodaira.core.utils import INFINITY, Valuation, format_valuation
from kodaira.curves.kodaira_types import (
    I0,
    II,
    IIStar,
    IStar0,
    IStarN,
    KodairaType,
)
from kodaira.curves.tate import tate_run
from kodaira.curves.weierstrass import WeierstrassEq, j_valuation
from kodaira.extensions.quadratic import ExtensionSpec, compute_s, twist
from kodaira.fields.local import FieldCtx

CASE_A = "A"
CASE_B = "B"

STATUS_MATCH = "match"
STATUS_MISMATCH = "mismatch"
STATUS_NOT_APPLICABLE = "not_applicable"

_TYPE_BY_F = {1: II, 3: IStar0, 5: IIStar}


@attr.s(auto_attribs=True, frozen=True)
class JValuation:
    r""":math:`v(j)`; :py:`math.inf` encodes :math:`j = 0`."""

    vj: Valuation

    @property
    def is_finite(self) -> bool:
        return self.vj != INFINITY

    def __str__(self):
        return format_valuation(self.vj)


@attr.s(auto_attribs=True, frozen=True)
class Prediction:
    kodaira: KodairaType
    f: Optional[int]
    case: str

    def to_dict(self) -> dict:
        return {"kodaira": str(self.kodaira), "f": self.f, "case": self.case}


def _vj(vj: Union[JValuation, Valuation]) -> Valuation:
    return vj.vj if isinstance(vj, JValuation) else vj


def _s(s) -> int:
    return int(s)


def _str_or_none(value) -> Optional[str]:
    return None if value is None else str(value)


def is_good_supersingular(E: WeierstrassEq) -> bool:
    r"""Good reduction with :math:`a_3` a unit and :math:`\pi \mid a_1` on a
    minimal model, cross-checked with the equivalent "good reduction and
    :math:`v(j) > 0`".
    """
    report = tate_run(E)
    if report.kodaira != I0:
        return False
    model = report.minimal_model
    by_coefficients = model.a1.is_zero_to(1) and not model.a3.is_zero_to(1)
    by_j = j_valuation(model) > 0
    if by_coefficients != by_j:
        raise TateError(
            "supersingularity criteria disagree on {}: a1/a3 say {}, j says "
            "{}".format(model, by_coefficients, by_j)
        )
    return by_coefficients


def construct_supersingular_with_vj(
    ctx: FieldCtx, u: Valuation
) -> WeierstrassEq:
    r""":math:`y^2 + \pi^u xy + y = x^3`, good supersingular with
    :math:`v(j) = 12u`. ``u = inf`` (or ``u = 0`` over a mixed field) gives
    :math:`y^2 + y = x^3` with :math:`j = 0`.

    :raise InvalidU: :math:`u \geq v(2)` over a mixed field, or
        :math:`u < 1` over an equichar field.
    """
    zero, one = ctx.zero(), ctx.one()
    if u == INFINITY or (ctx.is_mixed and u == 0):
        return WeierstrassEq(ctx, zero, zero, one, zero, zero)
    if u < 0 or (not ctx.is_mixed and u < 1):
        raise InvalidU("u must be positive, got {}".format(u))
    if ctx.is_mixed and u >= ctx.v2:
        raise InvalidU(
            "u = {} must stay below v(2) = {} over {}".format(u, ctx.v2, ctx)
        )
    return WeierstrassEq(ctx, ctx.pi() ** int(u), zero, one, zero, zero)


def predicted_type(
    vj: Union[JValuation, Valuation], s
) -> Prediction:
    r"""The predicted reduction type from :math:`v(j)` and the break.

    :raise InconsistentInput: :math:`v(j) \leq 0`, or case A with
        :math:`12 \nmid v(j)`.
    """
    vj, s = _vj(vj), _s(s)
    if vj <= 0:
        raise InconsistentInput("v(j) must be positive, got {}".format(vj))
    if vj != INFINITY and vj <= 4 * s - 4:
        if vj % 12:
            raise InconsistentInput(
                "v(j) = {} <= 4s - 4 = {} but 12 does not divide v(j)".format(
                    vj, 4 * s - 4
                )
            )
        return Prediction(kodaira=IStarN(4 * s - int(vj)), f=None, case=CASE_A)
    f = (2 * s + 3) % 6
    return Prediction(kodaira=_TYPE_BY_F[f], f=f, case=CASE_B)


def allowed_istar_multiples(v2: int) -> Set[int]:
    r"""The :math:`m` with :math:`I^*_{4m}` possible when :math:`v(2) = v_2`:
    :math:`1 \leq m \leq 2v_2 - 3` and :math:`m \neq 2v_2 - 5`.
    """
    return {m for m in range(1, 2 * v2 - 2) if m != 2 * v2 - 5}


def allowed_types(v2: Valuation, max_multiple: int = 4) -> Set[KodairaType]:
    r"""Every reduction type the classification allows for :math:`v(2) = v_2`.
    The equichar set (``v2 = inf``) is infinite and cut at
    :math:`I^*_{4 \cdot max\_multiple}`.
    """
    if v2 == INFINITY:
        return {II, IStar0, IIStar} | {
            IStarN(4 * m) for m in range(1, max_multiple + 1)
        }
    breaks = list(range(1, 2 * v2, 2)) + [2 * v2]
    types = {_TYPE_BY_F[(2 * s + 3) % 6] for s in breaks}
    return types | {IStarN(4 * m) for m in allowed_istar_multiples(v2)}


def converse_parameters(m: int, v2: int) -> Tuple[int, int]:
    r"""``(s, u)`` realizing :math:`I^*_{4m}` over a mixed field:
    :math:`s = m + 3` when :math:`m = 2v_2 - 3` or :math:`m` is even,
    :math:`s = m + 6` otherwise, and :math:`u = (s - m)/3`.
    """
    if m not in allowed_istar_multiples(v2):
        raise InvalidBreak(
            "I*{} is not realizable with v(2) = {}".format(4 * m, v2)
        )
    if m == 2 * v2 - 3 or m % 2 == 0:
        s = m + 3
    else:
        s = m + 6
    return s, (s - m) // 3


def equichar_parameters(m: int) -> Tuple[int, int]:
    r"""``(s, u)`` realizing :math:`I^*_{4m}` over an equichar field: the
    smallest odd :math:`s > m` with :math:`3 \mid s - m`.
    """
    if m < 1:
        raise InvalidBreak("m must be positive, got {}".format(m))
    s = m + 1
    while s % 2 == 0 or (s - m) % 3:
        s += 1
    return s, (s - m) // 3


def equichar_j0_break(f: int) -> int:
    r"""Smallest odd break with :math:`2s + 3 \equiv f \pmod 6`."""
    if f not in _TYPE_BY_F:
        raise InvalidBreak("f must be 1, 3 or 5, got {}".format(f))
    s = 1
    while (2 * s + 3) % 6 != f:
        s += 2
    return s


@attr.s(auto_attribs=True, kw_only=True)
class VerificationRecord:
    field: str
    curve: str
    ext: str
    s: int
    vj: Valuation
    predicted: Optional[KodairaType] = None
    computed: Optional[KodairaType] = None
    case: Optional[str] = None
    f: Optional[int] = None
    match: bool = False
    status: str = STATUS_NOT_APPLICABLE
    index_law: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "curve": self.curve,
            "ext": self.ext,
            "s": self.s,
            "vj": format_valuation(self.vj),
            "predicted": _str_or_none(self.predicted),
            "computed": _str_or_none(self.computed),
            "case": self.case,
            "f": self.f,
            "match": self.match,
            "status": self.status,
        }


def istar_index_law_holds(record: VerificationRecord) -> bool:
    r"""For a computed :math:`I^*_n` with :math:`n \geq 1`:
    :math:`n = 4s - v(j)`. Vacuous otherwise.
    """
    computed = record.computed
    if computed is None or computed.symbol != "I*" or computed.n == 0:
        return True
    return record.vj != INFINITY and computed.n == 4 * record.s - record.vj


def verify(E: WeierstrassEq, ext: ExtensionSpec) -> VerificationRecord:
    r"""Compare the predicted and computed types of :p:`E`, gated on
    ``twist(E, ext)`` having good supersingular reduction.
    """
    s = compute_s(ext).s
    vj = j_valuation(E)
    record = VerificationRecord(
        field=str(E.ctx), curve=str(E), ext=str(ext), s=s, vj=vj
    )
    if vj <= 0 or not is_good_supersingular(twist(E, ext)):
        return record
    prediction = predicted_type(vj, s)
    computed = tate_run(E).kodaira
    record.predicted = prediction.kodaira
    record.case = prediction.case
    record.f = prediction.f
    record.computed = computed
    record.index_law = istar_index_law_holds(record)
    record.match = computed == prediction.kodaira and record.index_law
    record.status = STATUS_MATCH if record.match else STATUS_MISMATCH
    return record
