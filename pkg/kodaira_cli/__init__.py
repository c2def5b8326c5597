#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira_cli.common.base_command import BaseCommand
from kodaira_cli.common.command_registry import command_registry

__all__ = ["BaseCommand", "command_registry"]
