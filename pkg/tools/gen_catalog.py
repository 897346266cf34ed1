#!/usr/bin/env python3
"""Regenerate the bundled Cayley tables for all groups of order <= 31.

Builds one representative per isomorphism class from explicit constructions,
verifies the per-order counts against the known classification, checks
pairwise non-isomorphism with a backtracking search, and writes the result to
src/wedderburn/data/groups_leq31.json (one JSON object per line).

Usage: PYTHONPATH=src python3 tools/gen_catalog.py
"""

from __future__ import annotations

import json
import sys
from collections import Counter, defaultdict
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wedderburn import group as gr

# Number of groups of each order 1..31, from the standard classification.
EXPECTED_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1,
    20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4,
    29: 1, 30: 4, 31: 1,
}


def semidirect_cyclic(n: int, m: int, r: int, name: str) -> gr.Group:
    """C_n : C_m where the C_m generator acts on C_n by x -> x^r."""
    assert pow(r, m, n) % n == 1 and np.gcd(r, n) == 1
    size = n * m
    table = np.zeros((size, size), dtype=np.int32)
    rp = [pow(r, j, n) for j in range(m)]
    for i1 in range(n):
        for j1 in range(m):
            a = i1 * m + j1
            for i2 in range(n):
                for j2 in range(m):
                    b = i2 * m + j2
                    table[a, b] = ((i1 + i2 * rp[j1]) % n) * m + (j1 + j2) % m
    return gr.from_cayley_table(table, name)


def semidirect_auto(base: gr.Group, m: int, phi: list[int], name: str) -> gr.Group:
    """base : C_m where the C_m generator acts by the automorphism phi."""
    n = base.order
    # Sanity: phi is an automorphism whose order divides m.
    assert phi[base.identity] == base.identity
    for a in range(n):
        for b in range(n):
            assert phi[base.mul(a, b)] == base.mul(phi[a], phi[b])
    powers = [list(range(n))]
    for _ in range(m - 1):
        powers.append([phi[x] for x in powers[-1]])
    assert [phi[x] for x in powers[-1]] == powers[0]
    size = n * m
    table = np.zeros((size, size), dtype=np.int32)
    for a in range(n):
        for j1 in range(m):
            for b in range(n):
                for j2 in range(m):
                    table[a * m + j1, b * m + j2] = (
                        base.mul(a, powers[j1][b]) * m + (j1 + j2) % m
                    )
    return gr.from_cayley_table(table, name)


def inversion_perm(g: gr.Group) -> list[int]:
    assert g.is_abelian()
    return [g.inv(a) for a in range(g.order)]


def heisenberg3(name: str = "He3") -> gr.Group:
    """Upper unitriangular 3x3 matrices over GF(3); exponent-3 group of order 27."""
    def mul(u, v):
        a, b, c = u
        d, e, f = v
        return ((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)

    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return gr.from_cayley_table(table, name)


def subgroup_as_group(ambient: gr.Group, gens: list[int], name: str) -> gr.Group:
    """Cayley table of the subgroup generated by gens inside ambient."""
    members = {ambient.identity}
    frontier = [ambient.identity]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = ambient.mul(a, g)
                if b not in members:
                    members.add(b)
                    new.append(b)
        frontier = new
    elems = sorted(members)
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[ambient.mul(a, b)] for b in elems] for a in elems]
    return gr.from_cayley_table(table, name)


def central_product_c4_d4(name: str = "C4oD4") -> gr.Group:
    """C4 o D4: quotient of C4 x D4 by the diagonal central C2."""
    c4 = gr.cyclic(4)
    d4 = gr.dihedral(4)
    prod = gr.direct_product(c4, d4)
    z = 2 * d4.order + 2  # (c^2, r^2), both central of order 2
    sub = gr.Subgroup(prod, (prod.identity, z))
    q = gr.quotient(prod, sub, name=name)
    assert q.order == 16
    return gr.from_cayley_table(q.table, name)


def c6xc2_semi_c2(name: str = "C6xC2:C2") -> gr.Group:
    """(C6 x C2) : C2, the involution inverting C3 and swapping the two C2s."""
    base = gr.abelian([3, 2, 2])
    # index of (a, b, c) in C3 x C2 x C2 is 4a + 2b + c
    phi = [4 * ((3 - a) % 3) + 2 * c + b
           for a in range(3) for b in range(2) for c in range(2)]
    g = semidirect_auto(base, 2, phi, name)
    assert g.order == 24
    return g


# ---------------------------------------------------------------------------
# Isomorphism testing (generator-only; the library itself never needs it).
# ---------------------------------------------------------------------------


def fingerprint(g: gr.Group):
    orders = sorted(g._element_orders())
    classes = gr.conjugacy_classes(g)
    class_sizes = sorted(len(c) for c in classes.classes)
    center = [
        a
        for a in range(g.order)
        if all(g.mul(a, b) == g.mul(b, a) for b in range(g.order))
    ]
    center_orders = sorted(g.element_order(a) for a in center)
    derived = gr.commutator_subgroup(g).order
    return (
        g.order,
        tuple(orders),
        tuple(class_sizes),
        tuple(center_orders),
        derived,
        g.exponent(),
        g.is_abelian(),
    )


def _closure_map(g: gr.Group, h: gr.Group, gens: list[int], imgs: list[int]):
    emap = {g.identity: h.identity}
    frontier = [g.identity]
    while frontier:
        new = []
        for a in frontier:
            fa = emap[a]
            for x, y in zip(gens, imgs):
                b = g.mul(a, x)
                fb = h.mul(fa, y)
                if b in emap:
                    if emap[b] != fb:
                        return None
                else:
                    emap[b] = fb
                    new.append(b)
        frontier = new
    if len(set(emap.values())) != len(emap):
        return None
    return emap


def generating_sequence(g: gr.Group) -> list[int]:
    gens: list[int] = []
    closed = {g.identity}
    while len(closed) < g.order:
        nxt = min(x for x in range(g.order) if x not in closed)
        gens.append(nxt)
        frontier = list(closed)
        closed = {g.identity}
        frontier = [g.identity]
        while frontier:
            new = []
            for a in frontier:
                for x in gens:
                    b = g.mul(a, x)
                    if b not in closed:
                        closed.add(b)
                        new.append(b)
            frontier = new
    return gens


def isomorphic(g: gr.Group, h: gr.Group) -> bool:
    if g.order != h.order:
        return False
    if fingerprint(g) != fingerprint(h):
        return False
    if g.is_abelian() and h.is_abelian():
        return True  # identical sorted element orders decide the abelian case
    gens = generating_sequence(g)
    by_order = defaultdict(list)
    for x in range(h.order):
        by_order[h.element_order(x)].append(x)

    def dfs(i: int, imgs: list[int]) -> bool:
        if i == len(gens):
            return _closure_map(g, h, gens, imgs) is not None
        for cand in by_order[g.element_order(gens[i])]:
            imgs.append(cand)
            if _closure_map(g, h, gens[: i + 1], imgs) is not None and dfs(i + 1, imgs):
                imgs.pop()
                return True
            imgs.pop()
        return False

    return dfs(0, [])


# ---------------------------------------------------------------------------
# The construction list: one entry per isomorphism class, order <= 31.
# ---------------------------------------------------------------------------


def build_all() -> list[gr.Group]:
    c, ab, dp = gr.cyclic, gr.abelian, gr.direct_product
    swap_c2c2 = [0, 2, 1, 3]  # (a, b) -> (b, a) on C2 x C2 with index 2a + b
    groups = [
        c(1), c(2), c(3),
        c(4), ab([2, 2], "C2xC2"),
        c(5),
        c(6), gr.symmetric(3),
        c(7),
        c(8), ab([4, 2], "C4xC2"), ab([2, 2, 2], "C2xC2xC2"),
        gr.dihedral(4), gr.dicyclic(2, "Q8"),
        c(9), ab([3, 3], "C3xC3"),
        c(10), gr.dihedral(5),
        c(11),
        c(12), ab([6, 2], "C6xC2"), gr.dihedral(6), gr.dicyclic(3), gr.alternating(4),
        c(13),
        c(14), gr.dihedral(7),
        c(15),
        c(16), ab([8, 2], "C8xC2"), ab([4, 4], "C4xC4"),
        ab([4, 2, 2], "C4xC2xC2"), ab([2, 2, 2, 2], "C2xC2xC2xC2"),
        gr.dihedral(8), gr.dicyclic(4, "Q16"),
        semidirect_cyclic(8, 2, 3, "SD16"),
        semidirect_cyclic(8, 2, 5, "M16"),
        dp(gr.dihedral(4), c(2), "D4xC2"),
        dp(gr.dicyclic(2, "Q8"), c(2), "Q8xC2"),
        semidirect_cyclic(4, 4, 3, "C4:C4"),
        semidirect_auto(ab([2, 2], "C2xC2"), 4, swap_c2c2, "C2xC2:C4"),
        central_product_c4_d4(),
        c(17),
        c(18), ab([6, 3], "C6xC3"), gr.dihedral(9),
        dp(gr.symmetric(3), c(3), "S3xC3"),
        semidirect_auto(ab([3, 3], "C3xC3"), 2, inversion_perm(ab([3, 3])), "C3xC3:C2"),
        c(19),
        c(20), ab([10, 2], "C10xC2"), gr.dihedral(10), gr.dicyclic(5),
        semidirect_cyclic(5, 4, 2, "F20"),
        c(21), semidirect_cyclic(7, 3, 2, "C7:C3"),
        c(22), gr.dihedral(11),
        c(23),
        c(24), ab([12, 2], "C12xC2"), ab([6, 2, 2], "C6xC2xC2"),
        gr.symmetric(4), gr.sl23(),
        dp(gr.alternating(4), c(2), "A4xC2"),
        gr.dihedral(12), gr.dicyclic(6),
        semidirect_cyclic(3, 8, 2, "C3:C8"),
        dp(c(3), gr.dihedral(4), "C3xD4"),
        dp(c(3), gr.dicyclic(2, "Q8"), "C3xQ8"),
        dp(c(4), gr.symmetric(3), "C4xS3"),
        dp(c(2), gr.dihedral(6), "C2xD6"),
        dp(c(2), gr.dicyclic(3), "C2xDic3"),
        c6xc2_semi_c2(),
        c(25), ab([5, 5], "C5xC5"),
        c(26), gr.dihedral(13),
        c(27), ab([9, 3], "C9xC3"), ab([3, 3, 3], "C3xC3xC3"),
        heisenberg3(),
        semidirect_cyclic(9, 3, 4, "C9:C3"),
        c(28), ab([14, 2], "C14xC2"), gr.dihedral(14), gr.dicyclic(7),
        c(29),
        c(30), gr.dihedral(15),
        dp(c(3), gr.dihedral(5), "C3xD5"),
        dp(c(5), gr.symmetric(3), "C5xS3"),
        c(31),
    ]
    return groups


def main() -> int:
    groups = build_all()
    by_order = defaultdict(list)
    for g in groups:
        by_order[g.order].append(g)

    counts = {n: len(gs) for n, gs in sorted(by_order.items())}
    assert counts == EXPECTED_COUNTS, (
        "count mismatch: "
        + str({n: (counts.get(n), EXPECTED_COUNTS[n]) for n in EXPECTED_COUNTS
               if counts.get(n) != EXPECTED_COUNTS[n]})
    )

    names = [g.name for g in groups]
    assert len(set(names)) == len(names), "duplicate names"

    for order, gs in sorted(by_order.items()):
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                if isomorphic(gs[i], gs[j]):
                    raise SystemExit(
                        f"constructions {gs[i].name} and {gs[j].name} are isomorphic"
                    )
        print(f"order {order}: {len(gs)} classes verified pairwise distinct")

    fp_counter = Counter()
    for g in groups:
        fp_counter[fingerprint(g)] += 1

    out_path = Path(__file__).resolve().parent.parent / "src" / "wedderburn" / "data"
    out_path.mkdir(parents=True, exist_ok=True)
    target = out_path / "groups_leq31.json"
    lines = [
        json.dumps(gr.serialize(g), separators=(",", ":"), sort_keys=True)
        for g in groups
    ]
    target.write_text("[\n" + ",\n".join(lines) + "\n]\n", encoding="utf-8")
    print(f"wrote {len(groups)} groups to {target}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
