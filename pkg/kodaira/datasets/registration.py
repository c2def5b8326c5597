#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.core.logging import logger
from kodaira.core.registry import registry
from kodaira.datasets.catalog import _try_register_catalogdatasetv1


def make_catalog(id_catalog, **kwargs):
    logger.info("Initializing catalog {}".format(id_catalog))
    _catalog = registry.get_catalog(id_catalog)
    assert _catalog is not None, "Could not find catalog {}".format(id_catalog)

    return _catalog(**kwargs)


_try_register_catalogdatasetv1()
