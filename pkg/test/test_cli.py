#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import io
import json

import pytest

from kodaira.core.errors import PrecisionLoss
from kodaira.datasets.catalog.catalog_dataset import CatalogDatasetV1
from kodaira.theory import VerificationRecord
from kodaira.theory.supersingular import STATUS_MISMATCH
from kodaira_cli.common.base_command import (
    EXIT_FAILURE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
)
from kodaira_cli.common.vector_runner import ThreadedGridRunner
from kodaira_cli.run import (
    main,
    protect_negative_values,
    split_trailing_opts,
)

CFG_TEST = "configs/test/kodaira_test.yaml"
Z3_FIELD = 'mixed(k=1,eis="z^3-2",prec=64)'


def _run(*argv):
    stream = io.StringIO()
    code = main(["--config", CFG_TEST] + list(argv), stream=stream)
    return code, stream.getvalue().splitlines()


def _records(*argv):
    code, lines = _run(*argv)
    return code, [json.loads(line) for line in lines]


def test_split_trailing_opts():
    argv = ["scan", "mixed", "--", "CORE.NUM_WORKERS", "4"]
    assert split_trailing_opts(argv) == (
        ["scan", "mixed"],
        ["CORE.NUM_WORKERS", "4"],
    )
    assert split_trailing_opts(["tate", "[0,0,1,0,0]"]) == (
        ["tate", "[0,0,1,0,0]"],
        [],
    )


def test_protect_negative_values():
    argv = ["isogeny2", "[0,0,0,0,pi^3]", "-pi", "--s", "6", "-h", "-16"]
    assert protect_negative_values(argv) == [
        "isogeny2",
        "[0,0,0,0,pi^3]",
        "(-pi)",
        "--s",
        "6",
        "-h",
        "-16",
    ]
    assert protect_negative_values(["-1+pi", "-1/4"]) == ["(-1+pi)", "-1/4"]


@pytest.mark.parametrize(
    "vj,s,kodaira,f",
    [("12", "4", "I*4", None), ("inf", "1", "II*", 5)],
)
def test_predict(vj, s, kodaira, f):
    code, records = _records("predict", vj, s)
    assert code == EXIT_OK
    assert records[0]["kodaira"] == kodaira
    assert records[0]["f"] == f


@pytest.mark.parametrize(
    "argv",
    [
        ("predict", "vj=12", "s=7"),
        ("predict", "s=7", "vj=12"),
        ("predict", "vj=12", "7"),
    ],
)
def test_predict_keyword_arguments(argv):
    code, records = _records(*argv)
    assert code == EXIT_OK
    assert records[0]["kodaira"] == "I*16"


def test_tate():
    code, records = _records("tate", "[0,0,1,0,pi^-3]")
    assert code == EXIT_OK
    assert records[0]["kodaira"] == "I*0"
    assert records[0]["v_delta_min"] == 12
    assert "trace" not in records[0]


def test_tate_trace():
    code, lines = _run("--trace", "tate", "[0,0,1,0,pi^-3]")
    assert code == EXIT_OK
    assert json.loads(lines[0])["kodaira"] == "I*0"
    assert len(lines) > 1
    assert all(line.startswith("  ") for line in lines[1:])


def test_table_output():
    code, lines = _run("--format", "table", "predict", "12", "4")
    assert code == EXIT_OK
    assert lines[0].split() == ["kodaira", "f", "case"]
    assert lines[1].split() == ["I*4", "-", "A"]


def test_slk():
    code, records = _records("slk", "as(pi^-3)")
    assert code == EXIT_OK
    assert records[0]["s"] == 3
    assert records[0]["different"] == 4
    assert records[0]["oracle_agrees"]


def test_twist():
    code, records = _records("twist", "[0,0,1,0,0]", "as(pi^-3)")
    assert code == EXIT_OK
    assert records[0]["vj"] == "inf"


def test_verify():
    code, records = _records("verify", "[pi,pi^-5,1,0,pi^-7]", "as(pi^-7)")
    assert code == EXIT_OK
    assert records[0]["status"] == "match"
    assert records[0]["computed"] == "I*16"
    assert records[0]["predicted"] == "I*16"


def test_verify_mismatch_exit_code(mocker):
    mocker.patch(
        "kodaira_cli.commands.theory.verify",
        return_value=VerificationRecord(
            field="f", curve="c", ext="e", s=1, vj=6, status=STATUS_MISMATCH
        ),
    )
    code, records = _records("verify", "[0,0,1,0,pi^-1]", "as(pi^-1)")
    assert code == EXIT_MISMATCH
    assert records[0]["status"] == STATUS_MISMATCH


def test_precision_failure_exit_code(mocker):
    tate_run = mocker.patch(
        "kodaira_cli.commands.curves.tate_run",
        side_effect=PrecisionLoss("cancellation"),
    )
    code, lines = _run("--max-retries", "1", "tate", "[0,0,1,0,pi^-1]")
    assert code == EXIT_FAILURE
    assert tate_run.call_count == 2
    assert lines == []


def test_internal_errors_are_not_usage_errors(mocker):
    mocker.patch(
        "kodaira_cli.commands.curves.tate_run",
        side_effect=AssertionError("broken invariant"),
    )
    with pytest.raises(AssertionError):
        _run("tate", "[0,0,1,0,pi^-1]")


@pytest.mark.parametrize(
    "argv",
    [
        ["nope"],
        ["tate"],
        ["slk", "foo(1)"],
        ["tate", "[0,0,1,0]"],
        ["predict", "0", "3"],
        ["predict", "vk=12", "s=7"],
        ["predict", "12"],
        ["phi2", "t=-16", "x=1"],
        ["phi2", "1"],
        ["scan", "equichar", "t=1..3"],
        ["catalog", "432."],
        ["--field", "equichar(k=5)", "tate", "[0,0,1,0,pi]"],
        ["tate", "[0,0,1,0,pi]", "--", "CORE.PRECISION", "0"],
        ["tate", "[0,0,1,0,pi]", "--", "CORE.NOT_A_KEY", "1"],
        ["tate", "[0,0,1,0,pi]", "--", "CORE.NUM_WORKERS", "0"],
    ],
)
def test_usage_errors(argv):
    code, _ = _run(*argv)
    assert code == EXIT_USAGE


def test_phi2():
    code, records = _records("phi2", "--t", "64")
    assert code == EXIT_OK
    assert (records[0]["x"], records[0]["y"]) == ("8000", "8000")

    code, records = _records("phi2", "t=-16")
    assert code == EXIT_OK
    assert (records[0]["x"], records[0]["y"]) == ("0", "54000")

    code, records = _records("phi2", "1728", "1728")
    assert code == EXIT_OK
    assert records[0]["phi2"] == "0"

    code, records = _records("phi2", "x=0", "y=54000")
    assert code == EXIT_OK
    assert records[0]["phi2"] == "0"


@pytest.mark.parametrize("x0", ["-pi", "(-pi)"])
def test_isogeny2(x0):
    code, records = _records(
        "--field", Z3_FIELD, "isogeny2", "[0,0,0,0,pi^3]", x0, "--s", "6"
    )
    assert code == EXIT_OK
    record = records[0]
    assert record["kodaira_source"] == "I*0"
    assert record["kodaira_target"] == "I*12"
    assert record["vj_source"] == "inf"
    assert record["vj_target"] == 12
    assert record["phi2_vanishes"]
    assert not record["same_type_predicted"]


def test_scan_config_grid():
    code, records = _records("scan")
    assert code == EXIT_OK
    assert len(records) == 12
    assert all(r["status"] == "match" for r in records)
    assert all(r["twist_back_good"] for r in records)


def test_scan_maps_the_whole_grid_at_once(mocker):
    grid_map = mocker.spy(ThreadedGridRunner, "map")
    code, records = _records("scan", "--", "CORE.NUM_WORKERS", "2")
    assert code == EXIT_OK
    assert grid_map.call_count == 1
    assert len(grid_map.call_args[0][1]) == len(records) == 12


def test_scan_ranges():
    code, records = _records(
        "scan",
        "equichar",
        "s=1..5:odd",
        "u=1,inf",
        "--",
        "CORE.NUM_WORKERS",
        "1",
    )
    assert code == EXIT_OK
    assert [(r["s"], r["u"]) for r in records] == [
        (1, 1),
        (1, "inf"),
        (3, 1),
        (3, "inf"),
        (5, 1),
        (5, "inf"),
    ]


def test_catalog():
    code, records = _records("catalog", "velu-z3")
    assert code == EXIT_OK
    assert [r["label"] for r in records] == ["velu-z3-E1", "velu-z3-E2"]
    assert all(r["match"] for r in records)


def test_lmfdb_command(mocker, tmp_path):
    response = mocker.MagicMock()
    response.json.return_value = {"data": [{"ainvs": [0, -1, 1, -10, -20]}]}
    mocker.patch(
        "kodaira_cli.common.lmfdb_client.requests.get", return_value=response
    )
    output = tmp_path / "entry.json"
    code, records = _records("lmfdb", "11.a2", "--output", str(output))
    assert code == EXIT_OK
    assert records[0]["expected"] == "I0"

    catalog = CatalogDatasetV1()
    catalog.from_json(output.read_text())
    assert catalog.labels == ["11.a2"]
    assert catalog.entries[0].provenance.endswith("computed locally")


def test_log_file(tmp_path):
    log_file = tmp_path / "kodaira.log"
    code, records = _records(
        "catalog", "velu-z3-E1", "--", "LOG_FILE", str(log_file)
    )
    assert code == EXIT_OK
    assert len(records) == 1
    assert "Initializing catalog Catalog-v1" in log_file.read_text()
