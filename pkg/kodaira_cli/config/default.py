#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import List, Optional, Union

from kodaira import get_config as get_core_config
from kodaira.config import Config as CN
from kodaira.config.default import CONFIG_FILE_SEPARATOR, validate_config

# -----------------------------------------------------------------------------
# RUN CONFIG
# -----------------------------------------------------------------------------
_C = CN()
# core config can be a list of configs like "A.yaml,B.yaml"
_C.BASE_CORE_CONFIG_PATH = ""
_C.CORE = CN()  # core config will be stored as a config node
_C.CMD_TRAILING_OPTS = []  # store command line options as list of strings
_C.LOG_FILE = ""
_C.VERBOSE = False


def get_config(
    config_paths: Optional[Union[List[str], str]] = None,
    opts: Optional[list] = None,
) -> CN:
    r"""Create a unified run config: the core config built from
    :p:`config_paths` is stored under ``CORE`` and :p:`opts` override both
    layers (core keys are addressed as ``CORE.<KEY>``).

    :param config_paths: List of core config paths or string that contains
        comma separated list of core config paths.
    :param opts: Config options (keys, values) in a list (e.g., passed from
        command line into the config. For example,
        :py:`opts = ['CORE.FIELD', 'equichar(k=2,prec=64)']`.
    """
    config = _C.clone()
    if config_paths:
        if not isinstance(config_paths, str):
            config_paths = CONFIG_FILE_SEPARATOR.join(config_paths)
        config.BASE_CORE_CONFIG_PATH = config_paths

    if opts:
        for k, v in zip(opts[0::2], opts[1::2]):
            if k == "BASE_CORE_CONFIG_PATH":
                config.BASE_CORE_CONFIG_PATH = v

    config.CORE = get_core_config(config.BASE_CORE_CONFIG_PATH or None)
    config.CORE.defrost()
    if opts:
        config.CMD_TRAILING_OPTS = config.CMD_TRAILING_OPTS + list(opts)
        config.merge_from_list(config.CMD_TRAILING_OPTS)

    validate_config(config.CORE)
    config.freeze()
    return config
