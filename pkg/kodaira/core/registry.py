#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Registry is central source of truth in kodaira.

Registry maintains mappings of various information to unique keys. Special
functions in registry can be used as decorators to register different kind of
classes.

Import the global registry object using

.. code:: py

    from kodaira.core.registry import registry

Various decorators for registry different kind of classes with unique keys

-   Register a catalog dataset: ``@registry.register_catalog``
-   Register a quadratic extension presentation:
    ``@registry.register_extension``
"""

import collections
from typing import Optional

from kodaira.core.utils import Singleton


class Registry(metaclass=Singleton):
    mapping = collections.defaultdict(dict)

    @classmethod
    def _register_impl(cls, _type, to_register, name, assert_type=None):
        def wrap(to_register):
            if assert_type is not None:
                assert issubclass(
                    to_register, assert_type
                ), "{} must be a subclass of {}".format(
                    to_register, assert_type
                )
            register_name = to_register.__name__ if name is None else name

            cls.mapping[_type][register_name] = to_register
            return to_register

        if to_register is None:
            return wrap
        else:
            return wrap(to_register)

    @classmethod
    def register_catalog(cls, to_register=None, *, name: Optional[str] = None):
        r"""Register a catalog dataset to registry with key :p:`name`

        :param name: Key with which the catalog will be registered.
            If :py:`None` will use the name of the class

        .. code:: py

            from kodaira.core.registry import registry
            from kodaira.core.dataset import Dataset

            @registry.register_catalog(name="MyCatalog-v1")
            class MyCatalog(Dataset):
                pass

        """
        from kodaira.core.dataset import Dataset

        return cls._register_impl(
            "catalog", to_register, name, assert_type=Dataset
        )

    @classmethod
    def register_extension(
        cls, to_register=None, *, name: Optional[str] = None
    ):
        r"""Register a quadratic extension presentation with key :p:`name`.
        The key is the keyword of the extension grammar (``as``, ``sqrt``,
        ``eis``).

        :param name: Key with which the presentation will be registered.
            If :py:`None` will use the name of the class
        """
        from kodaira.extensions.quadratic import ExtensionSpec

        return cls._register_impl(
            "extension", to_register, name, assert_type=ExtensionSpec
        )

    @classmethod
    def _get_impl(cls, _type, name):
        return cls.mapping[_type].get(name, None)

    @classmethod
    def get_catalog(cls, name):
        return cls._get_impl("catalog", name)

    @classmethod
    def get_extension(cls, name):
        return cls._get_impl("extension", name)


registry = Registry()
