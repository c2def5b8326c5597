#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.core.dataset import Dataset
from kodaira.core.registry import registry


def _try_register_catalogdatasetv1():
    try:
        from kodaira.datasets.catalog.catalog_dataset import (  # noqa: F401
            CatalogDatasetV1,
        )

    except ImportError as e:
        catalog_import_error = e

        @registry.register_catalog(name="Catalog-v1")
        class CatalogDatasetImportError(Dataset):
            def __init__(self, *args, **kwargs):
                raise catalog_import_error
