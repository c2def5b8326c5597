#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.curves.kodaira_types import KodairaType, kodaira_format
from kodaira.curves.tate import (
    TateReport,
    TraceStep,
    tate_run,
    tate_run_with_retries,
    with_retries,
)
from kodaira.curves.weierstrass import (
    StdInvariants,
    WeierstrassEq,
    discriminant,
    invariants,
    j_invariant,
    j_valuation,
    to_short_form,
    transform,
)

__all__ = [
    "KodairaType",
    "StdInvariants",
    "TateReport",
    "TraceStep",
    "WeierstrassEq",
    "discriminant",
    "invariants",
    "j_invariant",
    "j_valuation",
    "kodaira_format",
    "tate_run",
    "tate_run_with_retries",
    "to_short_form",
    "transform",
    "with_retries",
]
