#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse
import sys
from typing import (
    Callable,
    ClassVar,
    Dict,
    Iterable,
    Sequence,
    TextIO,
    TypeVar,
)

from kodaira import Config
from kodaira.curves.tate import with_retries
from kodaira.fields.local import FieldCtx
from kodaira.fields.parsing import parse_field
from kodaira_cli.common.output import write_records

T = TypeVar("T")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3


class BaseCommand:
    r"""Generic subcommand class. A subcommand declares its arguments, reads
    the run config and delegates every computation to the library.
    """

    help: ClassVar[str] = ""

    def __init__(self, config: Config, stream: TextIO = None) -> None:
        self.config = config
        self.stream = stream if stream is not None else sys.stdout

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        pass

    def run(self, args: argparse.Namespace) -> int:
        r"""Execute the subcommand.

        :return: the process exit code.
        """
        raise NotImplementedError

    @property
    def ctx(self) -> FieldCtx:
        core = self.config.CORE
        return parse_field(core.FIELD, core.PRECISION)

    def compute(self, fn: Callable[[FieldCtx], T]) -> T:
        r"""Run :p:`fn` under the configured precision and residue-degree
        restart caps; :p:`fn` must rebuild its inputs from text.
        """
        retry = self.config.CORE.RETRY
        return with_retries(
            fn,
            self.ctx,
            max_precision_doublings=retry.MAX_PRECISION_DOUBLINGS,
            max_residue_doublings=retry.MAX_RESIDUE_DOUBLINGS,
        )

    def emit(self, records: Iterable[dict]) -> None:
        write_records(records, self.config.CORE.OUTPUT.FORMAT, self.stream)

    def emit_trace(self, trace: Iterable) -> None:
        if not self.config.CORE.OUTPUT.TRACE:
            return
        for step in trace:
            self.stream.write("  {}\n".format(step))


def keyword_values(
    tokens: Sequence[str], names: Sequence[str]
) -> Dict[str, str]:
    r"""Assign positional tokens written as ``name=value`` or bare values.

    Bare values fill the :p:`names` not given by keyword, in order, e.g.
    ``vj=12 s=7``, ``s=7 vj=12`` and ``12 7`` all give
    :py:`{"vj": "12", "s": "7"}`.
    """
    values = {}
    bare = []
    for token in tokens:
        name, sep, value = token.partition("=")
        if not sep:
            bare.append(token)
            continue
        name = name.strip()
        if name not in names:
            raise ValueError(
                "unknown argument {!r}, expected one of {}".format(
                    name, ", ".join(names)
                )
            )
        if name in values:
            raise ValueError("{} given twice".format(name))
        values[name] = value.strip()
    for name in names:
        if name not in values and bare:
            values[name] = bare.pop(0)
    if bare:
        raise ValueError("unexpected arguments {}".format(" ".join(bare)))
    return values
