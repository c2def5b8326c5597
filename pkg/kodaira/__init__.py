#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from kodaira.config import Config, get_config
from kodaira.core.dataset import CatalogEntry, Dataset
from kodaira.core.logging import logger
from kodaira.core.registry import registry  # noqa : F401
from kodaira.curves import KodairaType, WeierstrassEq, tate_run
from kodaira.datasets import make_catalog
from kodaira.extensions import compute_s, parse_extension, twist
from kodaira.fields import FieldCtx, parse_field
from kodaira.theory import predicted_type, verify
from kodaira.version import VERSION as __version__  # noqa

__all__ = [
    "CatalogEntry",
    "Config",
    "Dataset",
    "FieldCtx",
    "KodairaType",
    "WeierstrassEq",
    "compute_s",
    "get_config",
    "logger",
    "make_catalog",
    "parse_extension",
    "parse_field",
    "predicted_type",
    "tate_run",
    "twist",
    "verify",
]
