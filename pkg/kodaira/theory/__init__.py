#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.theory.supersingular import (
    JValuation,
    Prediction,
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

__all__ = [
    "JValuation",
    "Prediction",
    "VerificationRecord",
    "allowed_istar_multiples",
    "allowed_types",
    "construct_supersingular_with_vj",
    "converse_parameters",
    "equichar_j0_break",
    "equichar_parameters",
    "is_good_supersingular",
    "istar_index_law_holds",
    "predicted_type",
    "verify",
]
