#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira_cli.commands.catalog import CatalogCommand, LmfdbCommand
from kodaira_cli.commands.curves import SlkCommand, TateCommand, TwistCommand
from kodaira_cli.commands.isogeny import Isogeny2Command, Phi2Command
from kodaira_cli.commands.scan import ScanCommand
from kodaira_cli.commands.theory import PredictCommand, VerifyCommand

__all__ = [
    "CatalogCommand",
    "Isogeny2Command",
    "LmfdbCommand",
    "Phi2Command",
    "PredictCommand",
    "ScanCommand",
    "SlkCommand",
    "TateCommand",
    "TwistCommand",
    "VerifyCommand",
]
