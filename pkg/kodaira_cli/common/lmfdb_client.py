#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Minimal client of the LMFDB public JSON API.

Curves over :math:`\mathbb{Q}` come from ``/api/ec_curvedata/`` and curves
over number fields from ``/api/ec_nfcurves/``. Only the number fields with a
shipped embedding into a 2-adic completion are supported.
"""

import re
from typing import Dict, List, Optional

import requests

from kodaira.core.dataset import CatalogEntry
from kodaira.core.errors import (
    NetworkError,
    UnknownLabel,
    UnsupportedNumberField,
)
from kodaira.core.logging import logger

NF_LABEL = re.compile(r"^(\d+\.\d+\.\d+\.\d+)-")
RATIONAL_FIELD = "1.1.1.1"

# number field label -> (completion at the prime over 2, generator image)
EMBEDDINGS: Dict[str, Dict[str, object]] = {
    RATIONAL_FIELD: {
        "field": 'mixed(k=1,eis="z-2",prec=64)',
        "embedding": {},
    },
    # sqrt(2) -> pi, pi^2 = 2
    "2.2.8.1": {
        "field": 'mixed(k=1,eis="z^2-2",prec=64)',
        "embedding": {"a": "pi"},
    },
    # i -> pi - 1, (pi - 1)^2 = -1 when pi^2 = 2pi - 2
    "2.0.4.1": {
        "field": 'mixed(k=1,eis="z^2-2*z+2",prec=64)',
        "embedding": {"a": "pi-1"},
    },
}


def field_label(curve_label: str) -> str:
    match = NF_LABEL.match(curve_label)
    return match.group(1) if match else RATIONAL_FIELD


def _nf_coefficient(text: str) -> str:
    r"""``c0,c1,...`` in the power basis of the generator ``a``."""
    terms = []
    for i, c in enumerate(text.split(",")):
        c = c.strip()
        if c in ("0", ""):
            continue
        terms.append("({})*a^{}".format(c, i) if i else "({})".format(c))
    return "+".join(terms) or "0"


def parse_ainvs(raw) -> List[str]:
    r"""The five coefficients from either API: a list of integers
    (``ec_curvedata``) or ``"c0,c1;c0,c1;..."`` (``ec_nfcurves``).
    """
    if isinstance(raw, str):
        parts = raw.split(";")
        if len(parts) == 1:
            return [p.strip() for p in raw.strip("[]").split(",")]
        return [_nf_coefficient(p) for p in parts]
    if isinstance(raw, list) and raw and isinstance(raw[0], list):
        return [_nf_coefficient(",".join(str(c) for c in a)) for a in raw]
    return [str(a) for a in raw]


class LMFDBClient:
    def __init__(self, base_url: str, timeout: float = 30.0) -> None:
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    def _query(self, table: str, label: str) -> dict:
        url = "{}/api/{}/".format(self.base_url, table)
        params = {"label": label, "_format": "json"}
        logger.info("Fetching {} from {}".format(label, url))
        try:
            response = requests.get(url, params=params, timeout=self.timeout)
            response.raise_for_status()
            payload = response.json()
        except (requests.RequestException, ValueError) as e:
            raise NetworkError("LMFDB request failed: {}".format(e)) from e
        data = payload.get("data") or []
        if not data:
            raise UnknownLabel("LMFDB has no curve labelled {}".format(label))
        return data[0]

    def fetch(
        self, label: str, expected: Optional[str] = None
    ) -> CatalogEntry:
        r"""Fetch the curve :p:`label` and localize it at the prime over 2.

        :param expected: expected Kodaira symbol stored on the entry; left
            empty when unknown.
        :raise UnsupportedNumberField: no embedding is shipped for the field.
        """
        nf = field_label(label)
        if nf not in EMBEDDINGS:
            raise UnsupportedNumberField(
                "no 2-adic embedding shipped for number field {}".format(nf)
            )
        table = "ec_curvedata" if nf == RATIONAL_FIELD else "ec_nfcurves"
        record = self._query(table, label)
        if "ainvs" not in record:
            raise UnknownLabel("LMFDB record {} has no ainvs".format(label))
        embedding = EMBEDDINGS[nf]
        return CatalogEntry(
            label=label,
            field=embedding["field"],
            ainvs=parse_ainvs(record["ainvs"]),
            expected=expected or "",
            provenance="LMFDB {}, localized at the prime over 2".format(
                label
            ),
            embedding=dict(embedding["embedding"]) or None,
        )
