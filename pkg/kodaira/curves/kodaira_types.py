#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import re

import attr

from kodaira.core.errors import ParseError

_SYMBOLS = ("I", "II", "III", "IV", "I*", "IV*", "III*", "II*")
_INDEXED = ("I", "I*")
_PATTERN = re.compile(r"^(I|II|III|IV|I\*|IV\*|III\*|II\*)(\d*)$")

# irreducible components of the special fiber, unindexed symbols
_COMPONENTS = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}


@attr.s(auto_attribs=True, frozen=True, repr=False, order=False)
class KodairaType:
    r"""Kodaira symbol: ``symbol`` is one of ``I, II, III, IV, I*, IV*, III*,
    II*`` and ``n`` the index of ``I``/``I*`` (0 otherwise).
    """

    symbol: str = attr.ib(validator=attr.validators.in_(_SYMBOLS))
    n: int = 0

    def __attrs_post_init__(self):
        if self.symbol not in _INDEXED and self.n != 0:
            raise ValueError("{} takes no index".format(self.symbol))
        if self.n < 0:
            raise ValueError("negative index {}".format(self.n))

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        match = _PATTERN.match(text.strip().replace("_", ""))
        if match is None:
            raise ParseError("not a Kodaira symbol: {!r}".format(text))
        symbol, index = match.groups()
        if symbol in _INDEXED:
            if not index:
                raise ParseError("{!r} needs an index".format(text))
            return cls(symbol, int(index))
        if index:
            raise ParseError("{!r} takes no index".format(text))
        return cls(symbol)

    @property
    def is_additive(self) -> bool:
        return self.symbol != "I"

    @property
    def components(self) -> int:
        if self.symbol == "I":
            return max(self.n, 1)
        if self.symbol == "I*":
            return self.n + 5
        return _COMPONENTS[self.symbol]

    def __str__(self):
        return kodaira_format(self)

    __repr__ = __str__

    def to_dict(self) -> str:
        return str(self)


def kodaira_format(t: KodairaType) -> str:
    if t.symbol in _INDEXED:
        return "{}{}".format(t.symbol, t.n)
    return t.symbol


def In(n: int) -> KodairaType:
    return KodairaType("I", n)


def IStarN(n: int) -> KodairaType:
    return KodairaType("I*", n)


I0 = In(0)
II = KodairaType("II")
III = KodairaType("III")
IV = KodairaType("IV")
IStar0 = IStarN(0)
IVStar = KodairaType("IV*")
IIIStar = KodairaType("III*")
IIStar = KodairaType("II*")
