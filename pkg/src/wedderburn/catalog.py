"""The built-in group catalog and name resolution.

The catalog holds every group of order <= 31 (bundled Cayley tables, one per
isomorphism class) followed by larger family members: cyclic groups up to
order 60, dihedral and dicyclic groups up to order 60, and A5, S5, A6, S6.
Entries are ordered by (order, position), which is the tie-breaking order the
completion search relies on. WEDDERBURN_CATALOG may name a directory of extra
group JSON files; they are appended sorted by filename.
"""

from __future__ import annotations

import functools
import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

from . import group as gr
from .errors import NotAGroup, OutOfRange

ENV_CATALOG = "WEDDERBURN_CATALOG"

CYCLIC_FAMILY_MAX = 60
DIHEDRAL_FAMILY_MAX_M = 30
DICYCLIC_FAMILY_MAX_M = 15

ALIASES = {
    "sl23": "SL(2,3)",
    "sl(2,3)": "SL(2,3)",
    "sl_2_3": "SL(2,3)",
    "dic2": "Q8",
    "dic4": "Q16",
    "d3": "S3",
    "v4": "C2xC2",
    "k4": "C2xC2",
}


@dataclass
class CatalogEntry:
    name: str
    order: int
    builder: Callable[[], gr.Group]
    index: int = -1
    _group: gr.Group | None = field(default=None, repr=False)

    def group(self) -> gr.Group:
        if self._group is None:
            g = self.builder()
            if g.order != self.order:
                raise NotAGroup(
                    f"catalog entry {self.name}: expected order {self.order}, got {g.order}"
                )
            self._group = g
        return self._group

    def is_abelian(self) -> bool:
        return self.group().is_abelian()

    def exponent(self) -> int:
        return self.group().exponent()


def _data_builder(record: dict) -> Callable[[], gr.Group]:
    return lambda: gr.from_cayley_table(record["table"], record["name"])


@functools.lru_cache(maxsize=1)
def _bundled_records() -> tuple[dict, ...]:
    text = resources.files("wedderburn").joinpath("data/groups_leq31.json").read_text(
        encoding="utf-8"
    )
    records = json.loads(text)
    return tuple(records)


def _family_entries() -> list[CatalogEntry]:
    entries = []
    for n in range(32, CYCLIC_FAMILY_MAX + 1):
        entries.append(CatalogEntry(f"C{n}", n, functools.partial(gr.cyclic, n)))
    for m in range(16, DIHEDRAL_FAMILY_MAX_M + 1):
        entries.append(CatalogEntry(f"D{m}", 2 * m, functools.partial(gr.dihedral, m)))
    for m in range(8, DICYCLIC_FAMILY_MAX_M + 1):
        entries.append(CatalogEntry(f"Dic{m}", 4 * m, functools.partial(gr.dicyclic, m)))
    entries.append(CatalogEntry("A5", 60, functools.partial(gr.alternating, 5)))
    entries.append(CatalogEntry("S5", 120, functools.partial(gr.symmetric, 5)))
    entries.append(CatalogEntry("A6", 360, functools.partial(gr.alternating, 6)))
    entries.append(CatalogEntry("S6", 720, functools.partial(gr.symmetric, 6)))
    return entries


def load_group_file(path: str | Path, trusted: bool = False) -> gr.Group:
    """Read the external group JSON format; element 0 must be the identity."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    for key in ("name", "order", "table"):
        if key not in data:
            raise NotAGroup(f"group file {path}: missing key {key!r}")
    g = gr.from_cayley_table(data["table"], str(data["name"]), trusted=trusted)
    if g.order != int(data["order"]):
        raise NotAGroup(f"group file {path}: order field disagrees with the table")
    if g.identity != 0:
        raise NotAGroup(f"group file {path}: element 0 must be the identity")
    return g


def _env_entries(directory: str) -> list[CatalogEntry]:
    base = Path(directory)
    if not base.is_dir():
        raise NotAGroup(f"{ENV_CATALOG} does not name a directory: {directory}")
    entries = []
    for path in sorted(base.glob("*.json")):
        g = load_group_file(path)
        entries.append(CatalogEntry(g.name, g.order, (lambda gg=g: gg)))
    return entries


@functools.lru_cache(maxsize=8)
def _catalog_cached(extra_dir: str | None) -> tuple[CatalogEntry, ...]:
    keyed = []
    for pos, record in enumerate(_bundled_records()):
        entry = CatalogEntry(record["name"], int(record["order"]), _data_builder(record))
        keyed.append(((entry.order, 0, pos), entry))
    for entry in _family_entries():
        keyed.append(((entry.order, 1, entry.name), entry))
    keyed.sort(key=lambda t: t[0])
    entries = [e for _, e in keyed]
    if extra_dir:
        entries.extend(_env_entries(extra_dir))
    for i, entry in enumerate(entries):
        entry.index = i
    return tuple(entries)


def load_catalog(extra_dir: str | None = None, use_env: bool = True) -> tuple[CatalogEntry, ...]:
    """The full catalog in search order: (order, bundled position / name)."""
    if extra_dir is None and use_env:
        extra_dir = os.environ.get(ENV_CATALOG) or None
    return _catalog_cached(extra_dir)


_CYCLIC_RE = re.compile(r"^c(\d+)$")
_DIHEDRAL_RE = re.compile(r"^d(\d+)$")
_DICYCLIC_RE = re.compile(r"^dic(\d+)$")
_QUATERNION_RE = re.compile(r"^q(\d+)$")
_SYMMETRIC_RE = re.compile(r"^s(\d+)$")
_ALTERNATING_RE = re.compile(r"^a(\d+)$")
_ABELIAN_RE = re.compile(r"^c(\d+)(x\s*c\d+)+$")


def resolve_group(
    spec: str,
    catalog: tuple[CatalogEntry, ...] | None = None,
    trusted: bool = False,
) -> gr.Group:
    """Resolve a group name: catalog entry, alias, @file.json, or family pattern."""
    spec = spec.strip()
    if spec.startswith("@"):
        return load_group_file(spec[1:], trusted=trusted)
    if catalog is None:
        catalog = load_catalog()
    key = spec.casefold()
    key = ALIASES.get(key, key)
    by_name = {entry.name.casefold(): entry for entry in catalog}
    if key.casefold() in by_name:
        return by_name[key.casefold()].group()

    m = _CYCLIC_RE.match(key)
    if m:
        return gr.cyclic(int(m.group(1)))
    m = _DICYCLIC_RE.match(key)
    if m:
        return gr.dicyclic(int(m.group(1)))
    m = _DIHEDRAL_RE.match(key)
    if m:
        return gr.dihedral(int(m.group(1)))
    m = _QUATERNION_RE.match(key)
    if m:
        n = int(m.group(1))
        if n >= 8 and n % 4 == 0 and (n & (n - 1)) == 0:
            return gr.dicyclic(n // 4, f"Q{n}")
        raise OutOfRange(f"Q{n}: generalized quaternion groups have 2-power order >= 8")
    m = _SYMMETRIC_RE.match(key)
    if m:
        return gr.symmetric(int(m.group(1)))
    m = _ALTERNATING_RE.match(key)
    if m:
        return gr.alternating(int(m.group(1)))
    if _ABELIAN_RE.match(key.replace(" ", "")):
        factors = [int(part[1:]) for part in key.replace(" ", "").split("x")]
        return gr.abelian(factors)
    raise NotAGroup(f"unknown group {spec!r}; see the catalog command for names")
