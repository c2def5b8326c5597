#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.fields.local import (
    EQUICHAR,
    MIXED,
    Elem,
    FieldCtx,
    elem_add,
    elem_div,
    elem_mul,
    elem_sqrt,
    elem_sub,
    is_square,
    normalize_sqrt,
    residue,
    square_classes,
    square_defect,
    unit_sqrt,
    valuation,
)
from kodaira.fields.parsing import parse_elem, parse_field, res_parse
from kodaira.fields.residue import (
    ResCtx,
    ResElem,
    Unsolvable,
    is_irreducible,
    res_add,
    res_artin_schreier,
    res_inv,
    res_mul,
    res_sqrt,
    res_trace,
)

__all__ = [
    "EQUICHAR",
    "MIXED",
    "Elem",
    "FieldCtx",
    "ResCtx",
    "ResElem",
    "Unsolvable",
    "elem_add",
    "elem_div",
    "elem_mul",
    "elem_sqrt",
    "elem_sub",
    "is_irreducible",
    "is_square",
    "normalize_sqrt",
    "parse_elem",
    "parse_field",
    "res_add",
    "res_artin_schreier",
    "res_inv",
    "res_mul",
    "res_parse",
    "res_sqrt",
    "res_trace",
    "residue",
    "square_classes",
    "square_defect",
    "unit_sqrt",
    "valuation",
]
