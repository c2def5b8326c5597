#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import pytest

from kodaira.config.default import LMFDB_URL_ENV_VAR, get_config
from kodaira.core.utils import INFINITY
from kodaira.fields import parse_field
from kodaira_cli.config.default import get_config as get_run_config

CFG_TEST = "configs/test/kodaira_test.yaml"
CFG_MIXED = "configs/test/mixed_test.yaml"
CFG_NEW_KEYS = "configs/test/new_keys_test.yaml"
MAX_TEST_DOUBLINGS = 3


def test_default_config():
    config = get_config()
    assert config.PRECISION == -1
    assert config.OUTPUT.FORMAT == "table"
    assert parse_field(config.FIELD, config.PRECISION).precision == 64


def test_merged_configs():
    test_config = get_config(CFG_TEST)
    mixed_config = get_config(CFG_MIXED)
    merged_config = get_config("{},{}".format(CFG_TEST, CFG_MIXED))
    assert merged_config.FIELD == mixed_config.FIELD
    assert merged_config.SCAN.REGIME == mixed_config.SCAN.REGIME
    assert merged_config.SCAN.S_VALUES == []
    assert merged_config.NUM_WORKERS == test_config.NUM_WORKERS
    assert merged_config.OUTPUT.FORMAT == test_config.OUTPUT.FORMAT
    assert merged_config == get_config([CFG_TEST, CFG_MIXED])


def test_new_keys_merged_configs():
    test_config = get_config(CFG_TEST)
    new_keys_config = get_config(CFG_NEW_KEYS)
    merged_config = get_config("{},{}".format(CFG_TEST, CFG_NEW_KEYS))
    assert (
        merged_config.SCAN.OPTIONS.MY_PARAM
        == new_keys_config.SCAN.OPTIONS.MY_PARAM
    )
    assert merged_config.LMFDB.MY_NEW_PARAM == "test"
    assert merged_config.SCAN.S_VALUES == test_config.SCAN.S_VALUES


def test_overwrite_options():
    for doublings in range(MAX_TEST_DOUBLINGS):
        config = get_config(
            config_paths=CFG_TEST,
            opts=["RETRY.MAX_PRECISION_DOUBLINGS", doublings],
        )
        assert (
            config.RETRY.MAX_PRECISION_DOUBLINGS == doublings
        ), "Overwriting of config options failed."


@pytest.mark.parametrize(
    "opts",
    [
        ["RETRY.MAX_PRECISION_DOUBLINGS", 5],
        ["RETRY.MAX_RESIDUE_DOUBLINGS", -1],
        ["PRECISION", 0],
        ["PRECISION", -7],
        ["NUM_WORKERS", 0],
        ["OUTPUT.FORMAT", "xml"],
    ],
)
def test_invalid_values(opts):
    with pytest.raises(ValueError):
        get_config(CFG_TEST, opts)


def test_unknown_option():
    with pytest.raises(AssertionError):
        get_config(CFG_TEST, ["SCAN.NOT_A_KEY", 1])


def test_lmfdb_url_from_environment(monkeypatch):
    monkeypatch.setenv(LMFDB_URL_ENV_VAR, "http://localhost:8080")
    assert get_config(CFG_TEST).LMFDB.BASE_URL == "http://localhost:8080"
    monkeypatch.delenv(LMFDB_URL_ENV_VAR)
    assert get_config(CFG_TEST).LMFDB.BASE_URL == "https://www.lmfdb.org"


def test_run_config_layers():
    opts = ["CORE.NUM_WORKERS", "4", "CORE.OUTPUT.TRACE", "True"]
    config = get_run_config(CFG_TEST, opts + ["VERBOSE", "True"])
    assert config.BASE_CORE_CONFIG_PATH == CFG_TEST
    assert config.CORE.NUM_WORKERS == 4
    assert config.CORE.OUTPUT.TRACE
    assert config.CORE.SEED == 7
    assert config.VERBOSE
    assert config.CMD_TRAILING_OPTS[:4] == opts
    assert config.is_frozen()


def test_run_config_base_path_option():
    config = get_run_config(opts=["BASE_CORE_CONFIG_PATH", CFG_MIXED])
    assert config.CORE.SCAN.REGIME == "mixed"
    assert config.CORE.PRECISION == 48


def test_run_config_validates_core():
    with pytest.raises(ValueError):
        get_run_config(CFG_TEST, ["CORE.PRECISION", "0"])


@pytest.mark.parametrize(
    "path,v2",
    [
        ("configs/fields/equichar_f2.yaml", INFINITY),
        ("configs/fields/equichar_f4.yaml", INFINITY),
        ("configs/fields/q2.yaml", 1),
        ("configs/fields/q2_sqrt2.yaml", 2),
        ("configs/fields/q2_i.yaml", 2),
        ("configs/fields/q2_cuberoot2.yaml", 3),
        ("configs/fields/q2_fourthroot2.yaml", 4),
    ],
)
def test_field_configs(path, v2):
    config = get_config(path)
    assert parse_field(config.FIELD, config.PRECISION).v2 == v2


@pytest.mark.parametrize(
    "path,regime",
    [
        ("configs/scans/equichar_sweep.yaml", "equichar"),
        ("configs/scans/mixed_sweep.yaml", "mixed"),
        ("configs/scans/converse_sweep.yaml", "converse"),
        ("configs/scans/equichar_converse.yaml", "equichar-converse"),
    ],
)
def test_scan_configs(path, regime):
    config = get_config(path)
    assert config.SCAN.REGIME == regime
    assert config.OUTPUT.FORMAT == "jsonl"
