"""Catalog of small groups (all 14 of order 16 plus sanity cases of order <= 8).

Entries are stored in ``data/order16.json`` as right-regular permutation
generators; ``tools/build_catalog.py`` regenerates the file. Every entry is
rebuilt and its order and fingerprint re-checked when the catalog loads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .finitegroup import FiniteGroup, GroupFingerprint, fingerprint, isomorphism


class CatalogError(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: tuple[int, int]
    name: str
    description: str
    generators: tuple[tuple[int, ...], ...]
    fingerprint: GroupFingerprint

    def group(self) -> FiniteGroup:
        return _group(self.id)

    def label(self) -> str:
        return f"<{self.id[0]},{self.id[1]}>"


# Structural pins for the labels that matter downstream: (abelian?, |center|, invariants).
PINNED = {
    (16, 10): (True, 16, (2, 2, 4)),
    (16, 12): (False, 4, (2, 2, 2)),
    (16, 13): (False, 4, (2, 2, 2)),
}


@lru_cache(maxsize=None)
def load_catalog() -> tuple[CatalogEntry, ...]:
    raw = json.loads(resources.files("burniat.data").joinpath("order16.json").read_text())
    entries = []
    for e in raw["entries"]:
        entry = CatalogEntry(
            id=tuple(e["id"]),
            name=e["name"],
            description=e["description"],
            generators=tuple(tuple(p) for p in e["generators"]),
            fingerprint=GroupFingerprint.from_dict(e["fingerprint"]),
        )
        g = FiniteGroup.from_permutations(entry.generators)
        if g.order != entry.id[0]:
            raise CatalogError(f"{entry.label()} generates a group of order {g.order}")
        if fingerprint(g) != entry.fingerprint:
            raise CatalogError(f"{entry.label()} does not match its stored fingerprint")
        entries.append(entry)
    for gid, (abelian, center, inv) in PINNED.items():
        fp = get_entry(gid, entries).fingerprint
        if ((fp.derived == 1) != abelian) or fp.center != center or fp.abelian_invariants != inv:
            raise CatalogError(f"<{gid[0]},{gid[1]}> does not have its expected structure")
    return tuple(entries)


def get_entry(gid: tuple[int, int], entries=None) -> CatalogEntry:
    for e in entries if entries is not None else load_catalog():
        if e.id == tuple(gid):
            return e
    raise KeyError(gid)


@lru_cache(maxsize=None)
def _group(gid: tuple[int, int]) -> FiniteGroup:
    return FiniteGroup.from_permutations(get_entry(gid).generators)


@dataclass(frozen=True)
class Identification:
    entry: CatalogEntry
    witness: dict[int, int]  # index in the input group -> index in the catalog group


def identify(g: FiniteGroup) -> Identification:
    """The unique catalog entry isomorphic to g, with an explicit isomorphism."""
    fp = fingerprint(g)
    matches = []
    for entry in load_catalog():
        if entry.fingerprint != fp:
            continue
        phi = isomorphism(g, entry.group())
        if phi is not None:
            matches.append(Identification(entry, phi))
    if len(matches) != 1:
        raise CatalogError(f"{len(matches)} catalog matches for a group with fingerprint {fp}")
    return matches[0]
