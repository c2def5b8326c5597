#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""Implements catalog functionality. ``kodaira.core.dataset`` abstracts over
a collection of labelled curves, each an instance of :ref:`CatalogEntry`:
a Weierstrass equation over a named local field together with the Kodaira
type it is known to have.
"""
import copy
import json
from typing import Callable, Dict, Generic, List, Optional, TypeVar

import attr

from kodaira.core.utils import KodairaJSONEncoder, not_none_validator


@attr.s(auto_attribs=True, kw_only=True)
class CatalogEntry:
    r"""Base class of catalog entries.

    :property label: unique label of the entry.
    :property field: field descriptor, see ``parse_field``.
    :property ainvs: the five coefficients :math:`a_1, a_2, a_3, a_4, a_6`
        as element expressions.
    :property expected: expected Kodaira symbol.
    :property provenance: where the curve comes from.
    :property embedding: number field generator names mapped to the local
        elements substituted for them in ``ainvs``.
    """

    label: str = attr.ib(default=None, validator=not_none_validator)
    field: str = attr.ib(default=None, validator=not_none_validator)
    ainvs: List[str] = attr.ib(default=None, validator=not_none_validator)
    expected: str = attr.ib(default=None, validator=not_none_validator)
    provenance: str = ""
    embedding: Optional[Dict[str, str]] = None


T = TypeVar("T", bound=CatalogEntry)


class Dataset(Generic[T]):
    r"""Base class of curve catalogs."""
    entries: List[T]

    @property
    def num_entries(self) -> int:
        r"""number of entries in the catalog"""
        return len(self.entries)

    @property
    def labels(self) -> List[str]:
        return [entry.label for entry in self.entries]

    def get_entry(self, label: str) -> Optional[T]:
        r"""..

        :param label: label of the entry.
        :return: the entry, or :py:`None` when no entry has the label.
        """
        for entry in self.entries:
            if entry.label == label:
                return entry
        return None

    def get_entries(self, indexes: List[int]) -> List[T]:
        return [self.entries[index] for index in indexes]

    def to_json(self) -> str:
        return KodairaJSONEncoder().encode(
            {"entries": [attr.asdict(entry) for entry in self.entries]}
        )

    def from_json(self, json_str: str) -> None:
        r"""Creates catalog from :p:`json_str`."""
        raise NotImplementedError

    def filter_entries(self, filter_fn: Callable[[T], bool]) -> "Dataset":
        r"""Returns a new catalog with only the filtered entries from the
        original catalog.

        :param filter_fn: function used to filter the entries.
        :return: the new catalog.
        """
        new_dataset = copy.copy(self)
        new_dataset.entries = [e for e in self.entries if filter_fn(e)]
        return new_dataset


def dumps_entries(entries: List[CatalogEntry]) -> str:
    return json.dumps(
        {"entries": [attr.asdict(entry) for entry in entries]}, indent=2
    )
