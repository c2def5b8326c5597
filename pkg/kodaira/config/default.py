#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import os
from typing import List, Optional, Union

import yacs.config


# Default kodaira config node
class Config(yacs.config.CfgNode):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs, new_allowed=True)


CN = Config

DEFAULT_CONFIG_DIR = "configs/"
CONFIG_FILE_SEPARATOR = ","
LMFDB_URL_ENV_VAR = "KODAIRA_LMFDB_URL"

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------
_C = CN()
_C.SEED = 100
# field descriptor, see kodaira.fields.parsing.parse_field
_C.FIELD = "equichar(k=1,prec=64)"
# overrides the prec= of FIELD when positive
_C.PRECISION = -1
_C.NUM_WORKERS = 1
# -----------------------------------------------------------------------------
# RESTARTS
# -----------------------------------------------------------------------------
_C.RETRY = CN()
_C.RETRY.MAX_PRECISION_DOUBLINGS = 4
_C.RETRY.MAX_RESIDUE_DOUBLINGS = 3
# -----------------------------------------------------------------------------
# OUTPUT
# -----------------------------------------------------------------------------
_C.OUTPUT = CN()
_C.OUTPUT.FORMAT = "table"
_C.OUTPUT.TRACE = False
_C.OUTPUT.PROGRESS = True
# -----------------------------------------------------------------------------
# SCAN
# -----------------------------------------------------------------------------
_C.SCAN = CN()
_C.SCAN.REGIME = "equichar"
# residue degrees of the equicharacteristic sweep
_C.SCAN.RESIDUE_DEGREES = [1, 2, 4]
# Eisenstein polynomials of the mixed sweep, one tower per entry
_C.SCAN.TOWERS = ["z-2", "z^2-2", "z^3-2"]
# empty list means every admissible break of the tower
_C.SCAN.S_VALUES = [1, 3, 5, 7, 9, 11]
# empty list means every admissible u of the tower
_C.SCAN.U_VALUES = [1, 2, 3, 4, 5, 6]
_C.SCAN.INCLUDE_J_ZERO = True
# -----------------------------------------------------------------------------
# CATALOG
# -----------------------------------------------------------------------------
_C.CATALOG = CN()
_C.CATALOG.TYPE = "Catalog-v1"
_C.CATALOG.DATA_PATH = "data/catalog/{split}.json"
_C.CATALOG.SPLIT = "curves"
# -----------------------------------------------------------------------------
# LMFDB
# -----------------------------------------------------------------------------
_C.LMFDB = CN()
_C.LMFDB.BASE_URL = "https://www.lmfdb.org"
_C.LMFDB.TIMEOUT = 30.0


MAX_PRECISION_DOUBLINGS = 4
MAX_RESIDUE_DOUBLINGS = 3


def validate_config(config: CN) -> None:
    r"""Raise :py:`ValueError` on out-of-range retry caps, precision, worker
    count or output format.
    """
    retry = config.RETRY
    if not 0 <= retry.MAX_PRECISION_DOUBLINGS <= MAX_PRECISION_DOUBLINGS:
        raise ValueError(
            "RETRY.MAX_PRECISION_DOUBLINGS must lie in [0, {}]".format(
                MAX_PRECISION_DOUBLINGS
            )
        )
    if not 0 <= retry.MAX_RESIDUE_DOUBLINGS <= MAX_RESIDUE_DOUBLINGS:
        raise ValueError(
            "RETRY.MAX_RESIDUE_DOUBLINGS must lie in [0, {}]".format(
                MAX_RESIDUE_DOUBLINGS
            )
        )
    if config.PRECISION == 0 or config.PRECISION < -1:
        raise ValueError("PRECISION must be positive (or -1 for the field's)")
    if config.NUM_WORKERS < 1:
        raise ValueError("NUM_WORKERS must be at least 1")
    if config.OUTPUT.FORMAT not in ("table", "jsonl", "csv"):
        raise ValueError(
            "OUTPUT.FORMAT must be one of table, jsonl, csv; got {}".format(
                config.OUTPUT.FORMAT
            )
        )


def get_config(
    config_paths: Optional[Union[List[str], str]] = None,
    opts: Optional[list] = None,
) -> CN:
    r"""Create a unified config with default values overwritten by values from
    :p:`config_paths` and overwritten by options from :p:`opts`.

    :param config_paths: List of config paths or string that contains comma
        separated list of config paths.
    :param opts: Config options (keys, values) in a list (e.g., passed from
        command line into the config. For example,
        :py:`opts = ['RETRY.MAX_PRECISION_DOUBLINGS', 2]`. Argument can be
        used for parameter sweeping or quick tests.
    """
    config = _C.clone()
    if config_paths:
        if isinstance(config_paths, str):
            if CONFIG_FILE_SEPARATOR in config_paths:
                config_paths = config_paths.split(CONFIG_FILE_SEPARATOR)
            else:
                config_paths = [config_paths]

        for config_path in config_paths:
            config.merge_from_file(config_path)

    if opts:
        config.merge_from_list(opts)

    if os.environ.get(LMFDB_URL_ENV_VAR):
        config.LMFDB.BASE_URL = os.environ[LMFDB_URL_ENV_VAR]

    validate_config(config)
    config.freeze()
    return config
