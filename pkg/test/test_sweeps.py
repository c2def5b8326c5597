#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import pytest

from kodaira.config.default import get_config
from kodaira.core.errors import ParseError
from kodaira.core.utils import INFINITY
from kodaira.fields import parse_field
from kodaira.theory import allowed_types
from kodaira_cli.common.sweeps import (
    SweepPoint,
    build_grid,
    parse_range,
    run_point,
    summarize,
)
from kodaira_cli.common.vector_runner import ThreadedGridRunner

CFG_TEST = "configs/test/kodaira_test.yaml"
CFG_MIXED = "configs/test/mixed_test.yaml"
NUM_WORKERS = 3


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1..11:odd", [1, 3, 5, 7, 9, 11]),
        ("2..8:even", [2, 4, 6, 8]),
        ("1..3,inf", [1, 2, 3, INFINITY]),
        ("5", [5]),
        (" 4 , 2 ", [4, 2]),
        ("", []),
    ],
)
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["a", "1..x", "1..5:prime", "..3"])
def test_parse_range_rejects(text):
    with pytest.raises(ParseError):
        parse_range(text)


def test_default_grid():
    grid = build_grid(get_config())
    assert len(grid) == 3 * 6 * 7
    assert grid[0] == SweepPoint("equichar(k=1,prec=64)", 1, 1)
    assert grid[6].u == INFINITY


def test_test_config_grid():
    grid = build_grid(get_config(CFG_TEST))
    assert [(p.s, p.u) for p in grid[:3]] == [(1, 1), (1, 2), (1, INFINITY)]
    assert len(grid) == 12


def test_unknown_regime():
    config = get_config(CFG_TEST, ["SCAN.REGIME", "bogus"])
    with pytest.raises(ValueError):
        build_grid(config)


def test_runner_keeps_grid_order():
    points = list(range(10))
    with ThreadedGridRunner(lambda x: x * x, NUM_WORKERS) as runner:
        assert runner.num_workers == NUM_WORKERS
        assert runner.map(points) == [x * x for x in points]
        assert runner.map([]) == []


def test_runner_reports_progress_per_batch():
    batches = []
    with ThreadedGridRunner(lambda x: x, 4) as runner:
        assert runner.map(list(range(10)), progress=batches.append) == list(
            range(10)
        )
    assert batches == [4, 4, 2]


def test_runner_propagates_errors():
    def job_fn(x):
        if x == 4:
            raise ValueError("bad point")
        return x

    runner = ThreadedGridRunner(job_fn, NUM_WORKERS)
    with pytest.raises(ValueError):
        runner.map(list(range(6)))
    assert runner.map([1, 2]) == [1, 2]
    runner.close()


def test_run_point():
    point = SweepPoint("equichar(k=1,prec=48)", 7, 1)
    result = run_point(point)
    assert result.ok
    assert str(result.record.computed) == "I*16"
    record = result.to_dict()
    assert record["u"] == 1
    assert record["twist_back_good"]
    assert str(point) == "equichar(k=1,prec=48) s=7 u=1"


def test_mixed_sweep_realizes_the_allowed_types():
    config = get_config(CFG_MIXED)
    grid = build_grid(config)
    assert len(grid) == 2 + 6
    with ThreadedGridRunner(run_point, NUM_WORKERS) as runner:
        summary = summarize(runner.map(grid))
    assert summary.all_match
    for tower in config.SCAN.TOWERS:
        ctx = parse_field('mixed(eis="{}")'.format(tower), 48)
        assert summary.types[str(ctx)] == allowed_types(ctx.v2)


def test_converse_sweep():
    config = get_config(CFG_MIXED, ["SCAN.REGIME", "converse"])
    grid = build_grid(config)
    assert [(p.s, p.u) for p in grid] == [(4, 1)]
    summary = summarize([run_point(p) for p in grid])
    assert summary.all_match
    assert summary.istar_multiples(grid[0].field) == {1}


def test_equichar_converse_sweep():
    config = get_config(CFG_TEST, ["SCAN.REGIME", "equichar-converse"])
    grid = build_grid(config)
    assert len(grid) == 4 + 3
    summary = summarize([run_point(p) for p in grid])
    assert summary.all_match
    field = grid[0].field
    assert summary.istar_multiples(field) == {1, 2, 3, 4}
    assert summary.types[field] == allowed_types(INFINITY, max_multiple=4)
    assert summary.to_dict()["total"] == 7


def _sweep(config_path):
    config = get_config(config_path)
    grid = build_grid(config)
    with ThreadedGridRunner(run_point, config.NUM_WORKERS) as runner:
        return config, grid, summarize(runner.map(grid))


@pytest.mark.slow
def test_full_mixed_sweep():
    config, grid, summary = _sweep("configs/scans/mixed_sweep.yaml")
    assert summary.total == len(grid) == 2 + 6 + 12
    assert summary.all_match
    for tower in config.SCAN.TOWERS:
        ctx = parse_field('mixed(eis="{}")'.format(tower), config.PRECISION)
        assert summary.types[str(ctx)] == allowed_types(ctx.v2)


@pytest.mark.slow
def test_full_converse_sweep():
    config, grid, summary = _sweep("configs/scans/converse_sweep.yaml")
    assert summary.total == len(grid) == 1 + 2 + 4
    assert summary.all_match
    expected = {1: {1}, 2: {2, 3}, 3: {1, 2, 4, 5}}
    for index, tower in enumerate(config.SCAN.TOWERS, start=1):
        ctx = parse_field('mixed(eis="{}")'.format(tower), config.PRECISION)
        assert summary.istar_multiples(str(ctx)) == expected[index]


@pytest.mark.slow
def test_full_equichar_sweep():
    config, grid, summary = _sweep("configs/scans/equichar_sweep.yaml")
    assert summary.total == len(grid) == 3 * 6 * 7
    assert summary.all_match
    assert len(summary.types) == len(config.SCAN.RESIDUE_DEGREES)
    for types in summary.types.values():
        assert types <= allowed_types(INFINITY, max_multiple=11)


@pytest.mark.slow
def test_full_equichar_converse_sweep():
    config, grid, summary = _sweep("configs/scans/equichar_converse.yaml")
    assert summary.total == len(grid) == 2 * 7
    assert summary.all_match
    for field, types in summary.types.items():
        assert summary.istar_multiples(field) == {1, 2, 3, 4}
        assert types == allowed_types(INFINITY, max_multiple=4)
