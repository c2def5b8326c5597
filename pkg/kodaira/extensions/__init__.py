#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.extensions.quadratic import (
    ArtinSchreier,
    Eisenstein2,
    ExtensionSpec,
    QuadraticAlgebra,
    RamificationBreak,
    SqrtD,
    compute_s,
    construct_extension_with_s,
    different_oracle,
    normalize_as,
    parse_extension,
    quadratic_twist_by,
    s_bounds,
    to_eisenstein,
    twist,
)

__all__ = [
    "ArtinSchreier",
    "Eisenstein2",
    "ExtensionSpec",
    "QuadraticAlgebra",
    "RamificationBreak",
    "SqrtD",
    "compute_s",
    "construct_extension_with_s",
    "different_oracle",
    "normalize_as",
    "parse_extension",
    "quadratic_twist_by",
    "s_bounds",
    "to_eisenstein",
    "twist",
]
