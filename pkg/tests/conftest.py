"""Shared fixtures: the catalog and the order <= 60 decomposition sweep."""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from wedderburn import algebra, catalog, cyclo

SWEEP_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]
SWEEP_MAX_ORDER = 60


@dataclass
class SweepRecord:
    group_name: str
    order: int
    p: int
    k: int
    q: int
    decomposition: algebra.Decomposition
    orbit_count: int
    predicted_degrees: tuple[int, ...]
    predicted_commutative: dict[int, int]


@pytest.fixture(scope="session")
def builtin_catalog():
    return catalog.load_catalog(use_env=False)


@pytest.fixture(scope="session")
def sweep(builtin_catalog):
    """Every (catalog group of order <= 60, field) pair with p not dividing |G|."""
    from wedderburn.group import commutator_subgroup, quotient

    records = []
    start = time.monotonic()
    for entry in builtin_catalog:
        if entry.order > SWEEP_MAX_ORDER:
            continue
        group = entry.group()
        for p, k in SWEEP_FIELDS:
            if group.order % p == 0:
                continue
            q = p**k
            dec = algebra.wedderburn(group, p, k)
            orbits = cyclo.cyclotomic_classes(group, q, p)
            ab = cyclo.abelian_decomposition(
                quotient(group, commutator_subgroup(group)), q, p
            )
            records.append(
                SweepRecord(
                    group_name=entry.name,
                    order=group.order,
                    p=p,
                    k=k,
                    q=q,
                    decomposition=dec,
                    orbit_count=len(orbits),
                    predicted_degrees=cyclo.predicted_degree_multiset(orbits),
                    predicted_commutative=ab.degree_counter(),
                )
            )
    elapsed = time.monotonic() - start
    return records, elapsed
