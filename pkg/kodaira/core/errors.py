#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Exceptions raised by kodaira.

Every user-facing precondition of the library raises a subclass of
:ref:`KodairaError` so that the command line front end can map failures to
exit codes in one place.
"""

from typing import Optional


class KodairaError(Exception):
    r"""Base class of all library errors."""


class CtxMismatch(KodairaError):
    r"""Operands live in different residue or local field contexts."""


class DivisionByZero(KodairaError, ZeroDivisionError):
    pass


class PrecisionLoss(KodairaError):
    r"""A valuation or residue was demanded from an element whose visible
    digits all vanish. Restarting at a higher working precision usually
    resolves it.
    """


class NegativeValuation(KodairaError):
    pass


class NoSquareRoot(KodairaError):
    pass


class ParseError(KodairaError, ValueError):
    pass


class ReducibleExtension(KodairaError):
    r"""The quadratic polynomial splits over the base field."""


class InvalidBreak(KodairaError):
    pass


class NotANonSquareUnit(KodairaError):
    pass


class RegimeMismatch(KodairaError):
    pass


class RegimeUnsupported(KodairaError):
    pass


class InvalidU(KodairaError):
    pass


class InconsistentInput(KodairaError):
    pass


class NotTwoTorsion(KodairaError):
    pass


class ResidueFieldTooSmall(KodairaError):
    r"""A residue root lives in a larger finite field.

    :property required_degree: residue degree at which the computation
        should be restarted.
    """

    def __init__(self, required_degree: int, message: Optional[str] = None):
        self.required_degree = required_degree
        super().__init__(
            message
            or "residue field too small, restart at degree {}".format(
                required_degree
            )
        )


class TateError(KodairaError):
    r"""Tate's algorithm reached a state its invariants rule out."""


class NetworkError(KodairaError):
    pass


class UnknownLabel(KodairaError):
    pass


class UnsupportedNumberField(KodairaError):
    pass


# failures that survive the precision and residue-degree restarts; every other
# KodairaError is a problem with the input
COMPUTATIONAL_FAILURES = (
    PrecisionLoss,
    ResidueFieldTooSmall,
    TateError,
    NetworkError,
)
