#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import json
import math
from typing import Union

import attr

# v(0) = inf; every other valuation is a python int.
INFINITY = math.inf
Valuation = Union[int, float]


def not_none_validator(self, attribute, value):
    if value is None:
        raise ValueError(f"Argument '{attribute.name}' must be set")


def positive_validator(self, attribute, value):
    if value is None or value <= 0:
        raise ValueError(
            f"Argument '{attribute.name}' must be positive, got {value}"
        )


def is_finite(v: Valuation) -> bool:
    return v != INFINITY


def format_valuation(v: Valuation) -> str:
    return "inf" if v == INFINITY else str(int(v))


def parse_valuation(text: Union[str, int, float]) -> Valuation:
    r"""Inverse of :ref:`format_valuation`; accepts ``inf``/``oo``."""
    if isinstance(text, (int, float)):
        return INFINITY if text == INFINITY else int(text)
    text = text.strip().lower()
    if text in ("inf", "oo", "infinity", "∞"):
        return INFINITY
    return int(text)


def ceil_div(a: int, b: int) -> int:
    assert b > 0, "ceil_div expects a positive divisor"
    return -((-a) // b)


def two_adic_valuation(n: int) -> Valuation:
    if n == 0:
        return INFINITY
    return (n & -n).bit_length() - 1


class Singleton(type):
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(
                *args, **kwargs
            )
        return cls._instances[cls]


class KodairaJSONEncoder(json.JSONEncoder):
    r"""JSON Encoder for records of the library. attrs records are
    flattened through their ``to_dict`` when present, infinite valuations are
    written as the string ``"inf"`` and everything else with a ``__str__``
    canonical form (Kodaira types, field elements) as that string.
    """

    def default(self, object):
        if hasattr(object, "to_dict"):
            return object.to_dict()
        if attr.has(type(object)):
            return attr.asdict(object, recurse=False)
        if isinstance(object, (set, frozenset)):
            return sorted(object, key=str)
        return str(object)

    def encode(self, o):
        return super().encode(replace_infinities(o))


def replace_infinities(o):
    if isinstance(o, float) and math.isinf(o):
        return "inf" if o > 0 else "-inf"
    if isinstance(o, dict):
        return {k: replace_infinities(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [replace_infinities(v) for v in o]
    return o
