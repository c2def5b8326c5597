#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import csv
from typing import Iterable, List, TextIO

from kodaira.core.utils import KodairaJSONEncoder, replace_infinities

FORMATS = ("table", "jsonl", "csv")


def _columns(records: List[dict]) -> List[str]:
    columns = []
    for record in records:
        for key in record:
            if key not in columns:
                columns.append(key)
    return columns


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (list, tuple, set)):
        return " ".join(str(v) for v in value)
    return str(value)


def write_records(
    records: Iterable[dict], fmt: str, stream: TextIO
) -> None:
    r"""Write flat records as an aligned table, JSON lines or CSV."""
    assert fmt in FORMATS, "unknown output format {}".format(fmt)
    if fmt == "jsonl":
        encoder = KodairaJSONEncoder()
        for record in records:
            stream.write(encoder.encode(record) + "\n")
        return

    records = [replace_infinities(record) for record in records]
    columns = _columns(records)
    if fmt == "csv":
        writer = csv.DictWriter(stream, fieldnames=columns)
        writer.writeheader()
        for record in records:
            writer.writerow({k: _cell(record.get(k)) for k in columns})
        return

    rows = [[_cell(record.get(k)) for k in columns] for record in records]
    widths = [
        max([len(column)] + [len(row[i]) for row in rows])
        for i, column in enumerate(columns)
    ]
    stream.write(
        "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n"
    )
    for row in rows:
        stream.write(
            "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n"
        )
