#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import json

import pytest

from kodaira.config.default import get_config
from kodaira.core.dataset import CatalogEntry, Dataset, dumps_entries
from kodaira.datasets.catalog.catalog_dataset import (
    CatalogDatasetV1,
    entry_curve_text,
    localize,
    reproduce_entry,
)
from kodaira.datasets.registration import make_catalog
from kodaira.fields import parse_elem, parse_field

CFG_TEST = "configs/test/kodaira_test.yaml"
NUM_CATALOG_ENTRIES = 8


def _construct_dataset(num_entries, num_fields=2):
    entries = []
    for i in range(num_entries):
        entry = CatalogEntry(
            label="curve-" + str(i),
            field="equichar(k={},prec=32)".format(i % num_fields + 1),
            ainvs=["0", "0", "1", "0", "pi^-{}".format(2 * i + 1)],
            expected="II",
        )
        entries.append(entry)
    dataset = Dataset()
    dataset.entries = entries
    return dataset


def _vendored_catalog():
    config = get_config(CFG_TEST)
    return CatalogDatasetV1(config=config.CATALOG)


def test_labels():
    dataset = _construct_dataset(10)
    assert dataset.num_entries == 10
    assert dataset.labels == ["curve-" + str(i) for i in range(10)]


def test_get_entry():
    dataset = _construct_dataset(10)
    entry = dataset.get_entry("curve-3")
    assert entry.ainvs[-1] == "pi^-7"
    assert dataset.get_entry("curve-10") is None
    assert [e.label for e in dataset.get_entries([0, 5])] == [
        "curve-0",
        "curve-5",
    ]


def test_filter_entries():
    dataset = _construct_dataset(10)

    def filter_fn(entry: CatalogEntry) -> bool:
        return entry.field.startswith("equichar(k=2")

    filtered_dataset = dataset.filter_entries(filter_fn)
    assert filtered_dataset.num_entries == 5
    for entry in filtered_dataset.entries:
        assert filter_fn(entry)
    assert dataset.num_entries == 10


def test_entry_requires_mandatory_fields():
    with pytest.raises(ValueError):
        CatalogEntry(label="x", field="equichar()", ainvs=["0"] * 5)


def test_to_json():
    dataset = _construct_dataset(3)
    deserialized = json.loads(dataset.to_json())
    assert [e["label"] for e in deserialized["entries"]] == [
        "curve-0",
        "curve-1",
        "curve-2",
    ]
    assert deserialized["entries"][0]["embedding"] is None


def test_vendored_catalog():
    config = get_config(CFG_TEST)
    assert CatalogDatasetV1.check_config_paths_exist(config.CATALOG)
    catalog = make_catalog(config.CATALOG.TYPE, config=config.CATALOG)
    assert catalog.num_entries == NUM_CATALOG_ENTRIES
    assert len(catalog.entries_matching("equichar")) == 4
    assert catalog.entries_matching("velu-z3") == [
        catalog.get_entry("velu-z3-E1"),
        catalog.get_entry("velu-z3-E2"),
    ]
    assert catalog.entries_matching(None) == catalog.entries
    assert catalog.entries_matching("432.") == []


def test_empty_catalog():
    assert CatalogDatasetV1().num_entries == 0
    with pytest.raises(AssertionError):
        make_catalog("Catalog-v0")


def test_dumps_entries_reloads():
    catalog = _vendored_catalog()
    reloaded = CatalogDatasetV1()
    reloaded.from_json(dumps_entries(catalog.entries))
    assert reloaded.labels == catalog.labels
    assert reloaded.get_entry("velu-z3-E2") == catalog.get_entry("velu-z3-E2")


def test_localize():
    embedding = {"a": "pi-1"}
    assert localize("a^2+a", embedding) == "(pi-1)^2+(pi-1)"
    assert localize("pi+a", embedding) == "pi+(pi-1)"
    assert localize("3*pi", None) == "3*pi"

    entry = CatalogEntry(
        label="nf-curve",
        field='mixed(k=1,eis="z^2-2*z+2",prec=32)',
        ainvs=["0", "a", "0", "2*a", "1"],
        expected="I0",
        embedding=embedding,
    )
    assert entry_curve_text(entry) == "[0,(pi-1),0,2*(pi-1),1]"

    ctx = parse_field(entry.field)
    i = parse_elem(ctx, localize("a", embedding))
    assert (i * i + 1).is_zero()


@pytest.mark.parametrize(
    "label,expected",
    [
        ("velu-z3-E1", "I*0"),
        ("velu-z3-E2", "I*12"),
        ("equichar-istar16", "I*16"),
        ("equichar-j0-IIstar", "II*"),
        ("equichar-j0-Istar0", "I*0"),
        ("equichar-j0-II", "II"),
        ("2.2.8.1-128.1-a1", "I*5"),
        ("2.0.4.1-4096.1-a2", "I*2"),
    ],
)
def test_reproduce_entry(label, expected):
    entry = _vendored_catalog().get_entry(label)
    result = reproduce_entry(entry)
    assert result.match
    record = result.to_dict()
    assert record["expected"] == expected
    assert record["computed"] == expected


def test_reproduce_entry_reports_mismatch():
    entry = CatalogEntry(
        label="wrong",
        field="equichar(k=1,prec=32)",
        ainvs=["0", "0", "1", "0", "pi^-1"],
        expected="II",
    )
    result = reproduce_entry(entry)
    assert not result.match
    assert result.to_dict()["computed"] == "II*"
