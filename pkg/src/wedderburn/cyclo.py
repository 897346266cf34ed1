"""Structural predictions for group-algebra decompositions.

Three independent computations that the decomposition engine is checked
against: orbits of the q-power map on conjugacy classes (whose count is the
number of simple components and whose sizes are the component field degrees),
and the explicit decomposition of an abelian group algebra via element-order
counts (the commutative part of the general case).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariant, NotAbelian, NotSemisimple
from .gf import mult_order
from .group import ConjClassPartition, Group, conjugacy_classes, power_class_map


@dataclass(frozen=True)
class CyclotomicClass:
    """An orbit of the q-power map on p-regular conjugacy classes."""

    member_classes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.member_classes)


@dataclass(frozen=True)
class AbelianDecomposition:
    """Field components of an abelian group algebra: (multiplicity, degree)."""

    components: tuple[tuple[int, int], ...]

    def total_dimension(self) -> int:
        return sum(mult * d for mult, d in self.components)

    def degree_counter(self) -> dict[int, int]:
        return {d: mult for mult, d in self.components}


def _check_semisimple(group: Group, q: int, p: int) -> None:
    if p < 2 or q < 2 or q % p != 0:
        raise ValueError(f"q = {q} is not a power of p = {p}")
    if group.order % p == 0:
        raise NotSemisimple(f"{p} divides |{group.name}| = {group.order}")


def cyclotomic_classes(group: Group, q: int, p: int) -> tuple[CyclotomicClass, ...]:
    """Orbits of class(g) -> class(g^q) on the p-regular conjugacy classes.

    Ordered by the smallest contained conjugacy-class index. The number of
    orbits equals the number of simple components of the group algebra over
    the q-element field.
    """
    _check_semisimple(group, q, p)
    classes = conjugacy_classes(group)
    regular = [
        i for i, rep in enumerate(classes.reps) if group.is_p_regular(rep, p)
    ]
    if len(regular) != len(classes):
        # Unreachable in the semisimple case: every element is p-regular.
        raise InternalInvariant("non-p-regular class despite p not dividing |G|")
    step = power_class_map(group, classes, q)
    seen = set()
    orbits = []
    for start in regular:
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = step[cur]
        orbits.append(CyclotomicClass(tuple(sorted(orbit))))
    return tuple(orbits)


def predicted_degree_multiset(classes: tuple[CyclotomicClass, ...]) -> tuple[int, ...]:
    """Sorted orbit sizes; equals the multiset of component field degrees."""
    return tuple(sorted(c.size for c in classes))


def abelian_decomposition(group: Group, q: int, p: int) -> AbelianDecomposition:
    """Decompose an abelian group algebra into field components.

    For each divisor d of the exponent, the c_d elements of order d contribute
    c_d / ord_d(q) components of degree ord_d(q). The division is exact; a
    remainder indicates a bug upstream and raises InternalInvariant.
    """
    if not group.is_abelian():
        raise NotAbelian(f"{group.name} is not abelian")
    _check_semisimple(group, q, p)
    order_counts: dict[int, int] = {}
    for g in range(group.order):
        t = group.element_order(g)
        order_counts[t] = order_counts.get(t, 0) + 1
    by_degree: dict[int, int] = {}
    for d in sorted(order_counts):
        o = mult_order(q, d)
        c = order_counts[d]
        if c % o != 0:
            raise InternalInvariant(
                f"element count {c} for order {d} not divisible by ord_{d}({q}) = {o}"
            )
        by_degree[o] = by_degree.get(o, 0) + c // o
    components = tuple((by_degree[d], d) for d in sorted(by_degree))
    result = AbelianDecomposition(components)
    if result.total_dimension() != group.order:
        raise InternalInvariant("abelian decomposition dimension mismatch")
    return result
