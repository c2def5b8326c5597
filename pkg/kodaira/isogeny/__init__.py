#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.isogeny.phi2 import (
    PHI2,
    IsogenyCase,
    classify_2isogeny_valuations,
    parametrization_case,
    parse_rational,
    phi2_eval,
    phi2_parametrization,
    same_type_2isogeny,
)
from kodaira.isogeny.velu import (
    TwoIsogenyPair,
    is_two_torsion_x,
    j_pair,
    two_torsion_x,
    vanishes,
    velu_2isogeny,
)

__all__ = [
    "PHI2",
    "IsogenyCase",
    "TwoIsogenyPair",
    "classify_2isogeny_valuations",
    "is_two_torsion_x",
    "j_pair",
    "parametrization_case",
    "parse_rational",
    "phi2_eval",
    "phi2_parametrization",
    "same_type_2isogeny",
    "two_torsion_x",
    "vanishes",
    "velu_2isogeny",
]
