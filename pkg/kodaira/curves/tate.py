#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Tate's algorithm in residue characteristic 2.

The algorithm is the residue-characteristic-agnostic version (no
:math:`c_4, c_6` shortcuts) specialized to :math:`p = 2`. The residue field
stands in for an algebraically closed one, so there are no splitting-field
distinctions: every quadratic met either has distinct roots, which ends the
algorithm, or a double root given by a residue square root.

.. code:: py

    ctx = parse_field("equichar(k=1,prec=64)")
    report = tate_run(WeierstrassEq.parse(ctx, "[0,0,1,0,0]"))
    str(report.kodaira)  # "I0"
"""

from typing import Callable, List, Optional, TypeVar

import attr

from kodaira.core.errors import (
    InconsistentInput,
    PrecisionLoss,
    ResidueFieldTooSmall,
    TateError,
)
from kodaira.core.logging import logger
from kodaira.core.utils import INFINITY, ceil_div, format_valuation
from kodaira.curves.kodaira_types import (
    I0,
    II,
    III,
    IIIStar,
    IIStar,
    IV,
    IVStar,
    IStar0,
    IStarN,
    In,
    KodairaType,
)
from kodaira.curves.weierstrass import (
    WeierstrassEq,
    invariants,
    transform,
)
from kodaira.fields.local import Elem, FieldCtx
from kodaira.fields.residue import res_inv, res_sqrt

T = TypeVar("T")


@attr.s(auto_attribs=True, frozen=True)
class TraceStep:
    step: str
    valuations: List[str]
    decision: str

    def __str__(self):
        return "step {:<3} v(a)=[{}]  {}".format(
            self.step, ",".join(self.valuations), self.decision
        )


@attr.s(auto_attribs=True, kw_only=True)
class TateReport:
    kodaira: KodairaType
    v_delta_min: int
    minimal_model: WeierstrassEq
    restarts: int = 0
    trace: List[TraceStep] = attr.ib(factory=list)

    def to_dict(self) -> dict:
        return {
            "kodaira": str(self.kodaira),
            "v_delta_min": self.v_delta_min,
            "minimal_model": str(self.minimal_model),
            "restarts": self.restarts,
            "trace": [str(step) for step in self.trace],
        }


class _Run:
    r"""Per-call state: the current model and the trace."""

    def __init__(self, E: WeierstrassEq):
        self.E = E
        self.ctx: FieldCtx = E.ctx
        self.trace: List[TraceStep] = []
        self.restarts = 0

    def note(self, step: str, decision: str) -> None:
        entry = TraceStep(
            step=step,
            valuations=[format_valuation(v) for v in self.E.valuations()],
            decision=decision,
        )
        logger.debug("tate: %s", entry)
        self.trace.append(entry)

    def lift(self, r) -> Elem:
        return self.ctx.lift(r)

    def pi_power(self, n: int) -> Elem:
        return self.ctx.pi() ** n

    def move(self, **kwargs) -> None:
        self.E = transform(self.E, **kwargs)

    def report(self, kodaira: KodairaType, v_delta: int) -> TateReport:
        return TateReport(
            kodaira=kodaira,
            v_delta_min=v_delta,
            minimal_model=self.E,
            restarts=self.restarts,
            trace=self.trace,
        )


def _divisible(a: Elem, n: int) -> bool:
    return a.is_zero_to(n)


def _make_integral(run: _Run) -> None:
    shift = 0
    for i, v in zip((1, 2, 3, 4, 6), run.E.valuations()):
        if v != INFINITY and v < 0:
            shift = max(shift, ceil_div(-v, i))
    if shift:
        run.move(u=run.pi_power(-shift))
        run.note(
            "0", "scaled by u = pi^-{} to an integral model".format(shift)
        )


def tate_run(E: WeierstrassEq) -> TateReport:
    r"""Kodaira type, minimal discriminant valuation and a minimal model.

    :raise PrecisionLoss: a needed digit lies beyond the working precision.
    :raise InconsistentInput: the equation is singular.
    """
    if invariants(E, with_j=False).delta.is_zero():
        raise InconsistentInput("singular Weierstrass equation {}".format(E))
    run = _Run(E)
    _make_integral(run)
    while True:
        result = _tate_pass(run)
        if result is not None:
            return result
        run.restarts += 1


def _tate_pass(run: _Run) -> Optional[TateReport]:
    ctx = run.ctx
    pi = ctx.pi()
    inv = invariants(run.E, with_j=False)
    v_delta = inv.delta.valuation()

    # step 1
    if v_delta == 0:
        run.note("1", "v(D) = 0")
        return run.report(I0, 0)

    # step 2: move the singular point to (0, 0)
    a1, a2, a3, a4, a6 = run.E.ainvs
    if _divisible(inv.b2, 1):
        r = res_sqrt(a4.residue())
        t = res_sqrt(
            r * r * r + a2.residue() * r * r + a4.residue() * r + a6.residue()
        )
    else:
        a1_inv = res_inv(a1.residue())
        r = a3.residue() * a1_inv
        t = (a4.residue() + r * r) * a1_inv
    run.move(r=run.lift(r), t=run.lift(t))
    inv = invariants(run.E, with_j=False)
    if not _divisible(inv.b2, 1):
        run.note("2", "b2 is a unit: multiplicative, n = {}".format(v_delta))
        return run.report(In(v_delta), v_delta)
    a1, a2, a3, a4, a6 = run.E.ainvs

    # step 3
    if not _divisible(a6, 2):
        run.note("3", "pi^2 does not divide a6")
        return run.report(II, v_delta)
    # step 4
    if not _divisible(inv.b8, 3):
        run.note("4", "pi^3 does not divide b8")
        return run.report(III, v_delta)
    # step 5
    if not _divisible(inv.b6, 3):
        run.note("5", "pi^3 does not divide b6")
        return run.report(IV, v_delta)

    # step 6: pi | a1, a2; pi^2 | a3, a4; pi^3 | a6
    s = res_sqrt(a2.residue())
    t = res_sqrt(a6.shift(-2).residue())
    run.move(s=run.lift(s), t=pi * run.lift(t))
    a1, a2, a3, a4, a6 = run.E.ainvs
    b = a2.shift(-1)
    c = a4.shift(-2)
    d = a6.shift(-3)
    # minus the discriminant of T^3 + bT^2 + cT + d
    w = (
        27 * d * d
        - b * b * c * c
        + 4 * b ** 3 * d
        - 18 * b * c * d
        + 4 * c ** 3
    )
    if not _divisible(w, 1):
        run.note("6", "P(T) has distinct roots")
        return run.report(IStar0, v_delta)

    x = 3 * c - b * b
    if not _divisible(x, 1):
        # step 7: double root sqrt(c), simple root elsewhere
        run.move(r=pi * run.lift(res_sqrt(c.residue())))
        run.note("7", "P(T) has a double root, entering the subprocedure")
        return _subprocedure(run, v_delta)

    # step 8: triple root b
    run.move(r=pi * run.lift(b.residue()))
    a1, a2, a3, a4, a6 = run.E.ainvs
    if not _divisible(a3, 3):
        run.note("8", "Y^2 + a3,2 Y - a6,4 has distinct roots")
        return run.report(IVStar, v_delta)
    run.move(t=run.pi_power(2) * run.lift(res_sqrt(a6.shift(-4).residue())))
    a1, a2, a3, a4, a6 = run.E.ainvs

    # step 9
    if not _divisible(a4, 4):
        run.note("9", "pi^4 does not divide a4")
        return run.report(IIIStar, v_delta)
    # step 10
    if not _divisible(a6, 6):
        run.note("10", "pi^6 does not divide a6")
        return run.report(IIStar, v_delta)

    # step 11: not minimal
    run.note("11", "equation not minimal, dividing a_i by pi^i")
    run.move(u=pi)
    return None


def _subprocedure(run: _Run, v_delta: int) -> TateReport:
    n = 4
    while n - 3 <= v_delta:
        a1, a2, a3, a4, a6 = run.E.ainvs
        if n % 2 == 0:
            h = n // 2
            if not _divisible(a3, h + 1):
                run.note(
                    "7.{}".format(n),
                    "Y^2 + a3,{} Y - a6,{} separable".format(h, n),
                )
                return run.report(IStarN(n - 3), v_delta)
            root = res_sqrt(a6.shift(-n).residue())
            run.move(t=run.pi_power(h) * run.lift(root))
            run.note("7.{}".format(n), "double root, translated y")
        else:
            h = (n + 1) // 2
            if not _divisible(a4, h + 1):
                run.note(
                    "7.{}".format(n),
                    "a2,1 X^2 + a4,{} X + a6,{} separable".format(h, n),
                )
                return run.report(IStarN(n - 3), v_delta)
            quotient = a6.shift(-n).residue() * res_inv(a2.shift(-1).residue())
            run.move(r=run.pi_power(h - 1) * run.lift(res_sqrt(quotient)))
            run.note("7.{}".format(n), "double root, translated x")
        n += 1
    raise TateError(
        "subprocedure ran past n = {} with v(D) = {}".format(n, v_delta)
    )


def with_retries(
    compute: Callable[[FieldCtx], T],
    ctx: FieldCtx,
    max_precision_doublings: int = 4,
    max_residue_doublings: int = 3,
) -> T:
    r"""Run :p:`compute` on :p:`ctx`, restarting it from scratch with doubled
    precision on :ref:`PrecisionLoss` and with the requested residue degree on
    :ref:`ResidueFieldTooSmall`. :p:`compute` must rebuild every element from
    its textual inputs.
    """
    precision_left = max_precision_doublings
    residue_left = max_residue_doublings
    while True:
        try:
            return compute(ctx)
        except PrecisionLoss as e:
            if precision_left == 0:
                raise
            precision_left -= 1
            ctx = ctx.with_precision(2 * ctx.precision)
            logger.restart("precision loss ({})".format(e), ctx)
        except ResidueFieldTooSmall as e:
            if residue_left == 0:
                raise
            residue_left -= 1
            ctx = ctx.with_residue_degree(e.required_degree)
            logger.restart("residue field too small", ctx)


def tate_run_with_retries(
    curve_text: str, ctx: FieldCtx, config=None
) -> TateReport:
    r"""Parse :p:`curve_text` in :p:`ctx` and run :ref:`tate_run`, with the
    restart caps of ``config.RETRY`` (defaults when :py:`None`).
    """
    caps = {}
    if config is not None:
        caps = dict(
            max_precision_doublings=config.RETRY.MAX_PRECISION_DOUBLINGS,
            max_residue_doublings=config.RETRY.MAX_RESIDUE_DOUBLINGS,
        )
    return with_retries(
        lambda c: tate_run(WeierstrassEq.parse(c, curve_text)), ctx, **caps
    )
