#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import json
import os
import re
from typing import List, Optional

import attr

from kodaira.config import Config
from kodaira.core.dataset import CatalogEntry, Dataset
from kodaira.core.logging import logger
from kodaira.core.registry import registry
from kodaira.curves.kodaira_types import KodairaType
from kodaira.curves.tate import tate_run, with_retries
from kodaira.curves.weierstrass import WeierstrassEq
from kodaira.fields.parsing import parse_field


def localize(expression: str, embedding: Optional[dict]) -> str:
    r"""Substitute the local images of number field generators."""
    for name, image in (embedding or {}).items():
        expression = re.sub(
            r"\b{}\b".format(re.escape(name)), "({})".format(image), expression
        )
    return expression


def entry_curve_text(entry: CatalogEntry) -> str:
    return "[{}]".format(
        ",".join(localize(a, entry.embedding) for a in entry.ainvs)
    )


@attr.s(auto_attribs=True, kw_only=True)
class EntryResult:
    label: str
    expected: KodairaType
    computed: Optional[KodairaType] = None
    match: bool = False

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "expected": str(self.expected),
            "computed": str(self.computed),
            "match": self.match,
        }


def reproduce_entry(
    entry: CatalogEntry,
    max_precision_doublings: int = 4,
    max_residue_doublings: int = 3,
) -> EntryResult:
    r"""Run Tate's algorithm on the vendored model of the entry and compare
    with the expected type.
    """
    ctx = parse_field(entry.field)
    curve_text = entry_curve_text(entry)
    report = with_retries(
        lambda c: tate_run(WeierstrassEq.parse(c, curve_text)),
        ctx,
        max_precision_doublings=max_precision_doublings,
        max_residue_doublings=max_residue_doublings,
    )
    logger.debug(
        "catalog {}: {} has type {}".format(
            entry.label, curve_text, report.kodaira
        )
    )
    expected = KodairaType.parse(entry.expected)
    return EntryResult(
        label=entry.label,
        expected=expected,
        computed=report.kodaira,
        match=report.kodaira == expected,
    )


@registry.register_catalog(name="Catalog-v1")
class CatalogDatasetV1(Dataset):
    r"""Class inherited from Dataset that loads the vendored curve catalog."""

    entries: List[CatalogEntry]

    @staticmethod
    def check_config_paths_exist(config: Config) -> bool:
        return os.path.exists(config.DATA_PATH.format(split=config.SPLIT))

    def __init__(self, config: Optional[Config] = None) -> None:
        self.entries = []

        if config is None:
            return

        datasetfile_path = config.DATA_PATH.format(split=config.SPLIT)
        with open(datasetfile_path, "rt") as f:
            self.from_json(f.read())

    def from_json(self, json_str: str) -> None:
        deserialized = json.loads(json_str)
        for entry in deserialized["entries"]:
            self.entries.append(CatalogEntry(**entry))

    def entries_matching(self, label: Optional[str]) -> List[CatalogEntry]:
        r"""Entries whose label equals :p:`label` or starts with it; every
        entry for :py:`None`.
        """
        if label is None:
            return list(self.entries)
        return [e for e in self.entries if e.label.startswith(label)]
