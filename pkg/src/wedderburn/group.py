"""Finite groups as validated Cayley tables, plus the structure they carry.

Elements are opaque indices 0..n-1. Construction validates closure, identity
and inverses always, and associativity in full for orders up to
FULL_CHECK_MAX; larger tables must be marked trusted (the built-in family
constructors are, since their tables come from associative operations).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotAGroup, NotNormal, OutOfRange

# Full O(n^3) associativity checking is instant at catalog scale.
FULL_CHECK_MAX = 256

# Family constructors refuse anything past this order.
MAX_ORDER = 2000


class Group:
    """Immutable finite group on indices 0..order-1 with a Cayley table."""

    __slots__ = (
        "name",
        "order",
        "table",
        "identity",
        "inverse",
        "_orders",
        "_exponent",
        "_abelian",
        "_classes",
        "_commutator",
    )

    def __init__(self, name: str, table: np.ndarray, identity: int, inverse: np.ndarray):
        self.name = name
        self.order = int(table.shape[0])
        self.table = table
        self.identity = identity
        self.inverse = inverse
        self._orders = None
        self._exponent = None
        self._abelian = None
        self._classes = None
        self._commutator = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, g: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(g), -e)
        e %= self.element_order(g)
        acc = self.identity
        base = g
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def element_order(self, g: int) -> int:
        orders = self._element_orders()
        return orders[g]

    def _element_orders(self) -> list[int]:
        if self._orders is None:
            out = []
            for g in range(self.order):
                t = 1
                x = g
                while x != self.identity:
                    x = self.mul(x, g)
                    t += 1
                out.append(t)
            self._orders = out
        return self._orders

    def exponent(self) -> int:
        if self._exponent is None:
            e = 1
            for t in set(self._element_orders()):
                e = math.lcm(e, t)
            self._exponent = e
        return self._exponent

    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def is_p_regular(self, g: int, p: int) -> bool:
        """True iff the element order is coprime to p."""
        return math.gcd(self.element_order(g), p) == 1

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ConjClassPartition:
    """Conjugacy classes ordered by smallest member; class_of maps elements."""

    classes: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


def _freeze(table: np.ndarray, inverse: np.ndarray) -> None:
    table.setflags(write=False)
    inverse.setflags(write=False)


def from_cayley_table(raw, name: str = "G", trusted: bool = False) -> Group:
    """Validate a multiplication table and wrap it as a Group.

    Entries must lie in [0, n). Identity and two-sided inverses are always
    verified; associativity is verified in full for n <= FULL_CHECK_MAX.
    Larger tables are rejected unless trusted=True.
    """
    table = np.array(raw, dtype=np.int32)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup("table is not a square array")
    n = table.shape[0]
    if n == 0:
        raise NotAGroup("table is empty")
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotAGroup(f"entry at ({bad[0]}, {bad[1]}) is out of range [0, {n})")

    idx = np.arange(n, dtype=np.int32)
    identity = None
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity element")

    inverse = np.full(n, -1, dtype=np.int32)
    for a in range(n):
        hits = np.nonzero(table[a] == identity)[0]
        found = False
        for b in hits:
            if table[b, a] == identity:
                inverse[a] = b
                found = True
                break
        if not found:
            raise NotAGroup(f"no two-sided inverse for element {a}")

    if n <= FULL_CHECK_MAX:
        for a in range(n):
            # (a*b)*c vs a*(b*c), vectorized over b, c.
            lhs = table[table[a]]
            rhs = table[a][table]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise NotAGroup(
                    f"associativity fails at ({a}, {b}, {c}): "
                    f"({a}*{b})*{c} = {lhs[b, c]} but {a}*({b}*{c}) = {rhs[b, c]}"
                )
    elif not trusted:
        raise NotAGroup(
            f"order {n} exceeds the full-validation threshold {FULL_CHECK_MAX}; "
            "pass trusted=True (or --trusted) for tables from a trusted source"
        )

    _freeze(table, inverse)
    return Group(name, table, identity, inverse)


def serialize(group: Group) -> dict:
    """JSON-ready form; from_cayley_table(serialize(G)['table']) reproduces G."""
    return {
        "name": group.name,
        "order": group.order,
        "table": group.table.tolist(),
    }


# ---------------------------------------------------------------------------
# Constructors for the built-in families.
# ---------------------------------------------------------------------------


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise OutOfRange(f"order {n} exceeds the supported bound {MAX_ORDER}")


def cyclic(n: int, name: str | None = None) -> Group:
    if n < 1:
        raise OutOfRange("cyclic group order must be positive")
    _check_order(n)
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return from_cayley_table(table, name or f"C{n}", trusted=True)


def abelian(factors: Sequence[int], name: str | None = None) -> Group:
    """Direct product of cyclic groups with the given orders."""
    factors = [int(f) for f in factors]
    if not factors:
        return cyclic(1, name)
    if any(f < 1 for f in factors):
        raise OutOfRange("cyclic factors must be positive")
    n = math.prod(factors)
    _check_order(n)
    g = cyclic(factors[0], name=f"C{factors[0]}")
    for f in factors[1:]:
        g = direct_product(g, cyclic(f, name=f"C{f}"))
    default = "x".join(f"C{f}" for f in factors)
    return from_cayley_table(g.table, name or default, trusted=True)


def dihedral(m: int, name: str | None = None) -> Group:
    """Dihedral group of order 2m: indices i < m are r^i, m+i are s*r^i."""
    if m < 1:
        raise OutOfRange("dihedral parameter must be positive")
    _check_order(2 * m)
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int32)
    for i in range(m):
        for j in range(m):
            table[i, j] = (i + j) % m
            table[i, m + j] = m + (j - i) % m
            table[m + i, j] = m + (i + j) % m
            table[m + i, m + j] = (j - i) % m
    return from_cayley_table(table, name or f"D{m}", trusted=True)


def dicyclic(m: int, name: str | None = None) -> Group:
    """Dicyclic group of order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1.

    dicyclic(2) is the quaternion group Q8.
    """
    if m < 1:
        raise OutOfRange("dicyclic parameter must be positive")
    _check_order(4 * m)
    mm = 2 * m
    n = 4 * m
    table = np.zeros((n, n), dtype=np.int32)
    for i in range(mm):
        for j in range(mm):
            table[i, j] = (i + j) % mm
            table[i, mm + j] = mm + (i + j) % mm
            table[mm + i, j] = mm + (i - j) % mm
            table[mm + i, mm + j] = (i - j + m) % mm
    return from_cayley_table(table, name or f"Dic{m}", trusted=True)


def _perm_group(perms: list[tuple[int, ...]], name: str) -> Group:
    index = {perm: i for i, perm in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int32)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            table[i, j] = index[tuple(a[x] for x in b)]
    return from_cayley_table(table, name, trusted=True)


def symmetric(n: int, name: str | None = None) -> Group:
    """Symmetric group on n <= 6 points; elements in lexicographic order."""
    if not 1 <= n <= 6:
        raise OutOfRange("symmetric(n) supports 1 <= n <= 6")
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    return _perm_group(perms, name or f"S{n}")


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternating(n: int, name: str | None = None) -> Group:
    """Alternating group on n <= 6 points; even permutations in lex order."""
    if not 1 <= n <= 6:
        raise OutOfRange("alternating(n) supports 1 <= n <= 6")
    perms = [
        tuple(p) for p in itertools.permutations(range(n)) if _perm_sign(tuple(p)) == 1
    ]
    return _perm_group(perms, name or f"A{n}")


def direct_product(g: Group, h: Group, name: str | None = None) -> Group:
    """Direct product with index (a, b) -> a * |H| + b."""
    n1, n2 = g.order, h.order
    _check_order(n1 * n2)
    a = np.repeat(np.arange(n1, dtype=np.int32), n2)
    b = np.tile(np.arange(n2, dtype=np.int32), n1)
    table = g.table[np.ix_(a, a)] * n2 + h.table[np.ix_(b, b)]
    return from_cayley_table(
        table.astype(np.int32), name or f"{g.name}x{h.name}", trusted=True
    )


def sl23(name: str = "SL(2,3)") -> Group:
    """2x2 matrices of determinant 1 over GF(3), identity first then lex order."""
    mats = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 == 1:
            mats.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    index = {m: i for i, m in enumerate(mats)}
    n = len(mats)
    table = np.zeros((n, n), dtype=np.int32)
    for i, (a, b, c, d) in enumerate(mats):
        for j, (e, f, g, h) in enumerate(mats):
            prod = (
                (a * e + b * g) % 3,
                (a * f + b * h) % 3,
                (c * e + d * g) % 3,
                (c * f + d * h) % 3,
            )
            table[i, j] = index[prod]
    return from_cayley_table(table, name, trusted=True)


# ---------------------------------------------------------------------------
# Structure computations.
# ---------------------------------------------------------------------------


def conjugacy_classes(group: Group) -> ConjClassPartition:
    """Orbits of conjugation, ordered by smallest member index."""
    if group._classes is not None:
        return group._classes
    n = group.order
    table = group.table
    inverse = group.inverse
    class_of = [-1] * n
    classes = []
    reps = []
    for x in range(n):
        if class_of[x] != -1:
            continue
        gx = table[:, x]
        conj = table[gx, inverse]
        members = np.unique(conj)
        idx = len(classes)
        for m in members:
            class_of[int(m)] = idx
        classes.append(tuple(int(m) for m in members))
        reps.append(x)
    part = ConjClassPartition(tuple(classes), tuple(reps), tuple(class_of))
    group._classes = part
    return part


def commutator_subgroup(group: Group) -> Subgroup:
    """Closure of all commutators g h g^-1 h^-1."""
    if group._commutator is not None:
        return group._commutator
    table = group.table
    inverse = group.inverse
    ginv = table[np.ix_(inverse, inverse)]
    comms = np.unique(table[table, ginv])
    members = set(int(c) for c in comms)
    members.add(group.identity)
    gens = sorted(members)
    frontier = list(members)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = int(table[a, g])
                if b not in members:
                    members.add(b)
                    new.append(b)
        frontier = new
    sub = Subgroup(group, tuple(sorted(members)))
    group._commutator = sub
    return sub


def is_normal(group: Group, sub: Subgroup) -> bool:
    elems = np.array(sub.elements, dtype=np.int32)
    target = set(sub.elements)
    table = group.table
    inverse = group.inverse
    for g in range(group.order):
        conj = table[table[g, elems], inverse[g]]
        if set(int(c) for c in conj) != target:
            return False
    return True


def quotient(group: Group, sub: Subgroup, name: str | None = None) -> Group:
    """Quotient by a normal subgroup; cosets labeled by their smallest member."""
    if sub.parent is not group:
        raise ValueError("subgroup belongs to a different group")
    if not is_normal(group, sub):
        raise NotNormal(f"{sub.elements} is not normal in {group.name}")
    table = group.table
    elems = np.array(sub.elements, dtype=np.int32)
    coset_of = {}
    labels = []
    for g in range(group.order):
        if g in coset_of:
            continue
        members = sorted(int(x) for x in table[g, elems])
        label = len(labels)
        for m in members:
            coset_of[m] = label
        labels.append(members[0])
    q = len(labels)
    qtable = np.zeros((q, q), dtype=np.int32)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            qtable[i, j] = coset_of[int(table[a, b])]
    return from_cayley_table(
        qtable, name or f"{group.name}/{sub.order}", trusted=True
    )


def power_class_map(group: Group, classes: ConjClassPartition, q: int) -> tuple[int, ...]:
    """Map each conjugacy class to the class of the q-th powers of its members."""
    out = []
    for idx, rep in enumerate(classes.reps):
        target = classes.class_of[group.power(rep, q)]
        assert all(
            classes.class_of[group.power(m, q)] == target
            for m in classes.classes[idx]
        ), "power map not constant on a conjugacy class"
        out.append(target)
    return tuple(out)
