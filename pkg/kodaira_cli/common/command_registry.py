#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""CommandRegistry is extended from kodaira.Registry to provide
registration for command line subcommands, while keeping Registry
in kodaira core intact.

Import the command registry object using

.. code:: py

    from kodaira_cli.common.command_registry import command_registry

Register a subcommand with @command_registry.register_command.
"""

from typing import List, Optional

from kodaira.core.registry import Registry


class CommandRegistry(Registry):
    @classmethod
    def register_command(cls, to_register=None, *, name: Optional[str] = None):
        r"""Register a subcommand to registry with key :p:`name`, which is
        also the subcommand name on the command line.

        :param name: Key with which the command will be registered.
            If :py:`None` will use the name of the class
        """
        from kodaira_cli.common.base_command import BaseCommand

        return cls._register_impl(
            "command", to_register, name, assert_type=BaseCommand
        )

    @classmethod
    def get_command(cls, name):
        return cls._get_impl("command", name)

    @classmethod
    def command_names(cls) -> List[str]:
        return sorted(cls.mapping["command"])


command_registry = CommandRegistry()
