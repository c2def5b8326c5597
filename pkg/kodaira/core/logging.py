#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging
import os
import sys
from typing import Optional, TextIO

LOG_FORMAT = "%(asctime)-15s %(message)s"


class KodairaLogger(logging.Logger):
    r"""Library logger. Records go to stderr so that the records a command
    writes to stdout stay machine readable.
    """

    def __init__(
        self,
        name: str,
        level: int,
        stream: Optional[TextIO] = None,
        format: Optional[str] = None,
        dateformat: Optional[str] = None,
    ) -> None:
        super().__init__(name, level)
        self._formatter = logging.Formatter(format, dateformat)
        handler = logging.StreamHandler(
            stream if stream is not None else sys.stderr
        )
        handler.setFormatter(self._formatter)
        self.addHandler(handler)
        self._log_files = set()

    def add_filehandler(self, log_filename: str) -> None:
        path = os.path.abspath(log_filename)
        if path in self._log_files:
            return
        filehandler = logging.FileHandler(path)
        filehandler.setFormatter(self._formatter)
        self.addHandler(filehandler)
        self._log_files.add(path)

    def set_verbosity(self, verbose: bool) -> None:
        r"""DEBUG when :p:`verbose`, which includes every step of Tate's
        algorithm; INFO otherwise.
        """
        self.setLevel(logging.DEBUG if verbose else logging.INFO)

    def restart(self, reason: str, ctx) -> None:
        r"""Record a computation restarted from its inputs in :p:`ctx`."""
        self.info("{}, restarting with {}".format(reason, ctx))


logger = KodairaLogger(name="kodaira", level=logging.INFO, format=LOG_FORMAT)
