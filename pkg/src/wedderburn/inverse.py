"""The inverse problem: find a group algebra whose decomposition contains a
target sum of matrix rings, reporting the components that had to be added.

Targets are written in a small grammar (see parse_ring_spec). The search
enumerates the catalog in the fixed total order (group order ascending, then
catalog index, then base-field degree k ascending) and returns the first
candidate whose decomposition contains the converted target. A not_found
result carries the bounds that were searched; it is evidence about those
bounds only, never a claim that no witness exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Decomposition, SimpleComponent, gl_order, wedderburn
from .catalog import CatalogEntry, load_catalog
from .errors import (
    InadmissibleBase,
    MixedCharacteristic,
    NotAPrimePower,
    ParseError,
)
from .gf import factor_prime_power


@dataclass(frozen=True)
class RingSpec:
    """A target ring: characteristic p and a multiset of (n, m) pairs, each
    meaning n x n matrices over the field of p^m elements (m absolute)."""

    p: int
    targets: tuple[tuple[int, int], ...]

    def render(self) -> str:
        parts = []
        grouped: list[tuple[tuple[int, int], int]] = []
        for t in self.targets:
            if grouped and grouped[-1][0] == t:
                grouped[-1] = (t, grouped[-1][1] + 1)
            else:
                grouped.append((t, 1))
        for (n, m), mult in grouped:
            label = f"F{self.p ** m}"
            term = label if n == 1 else f"M{n}({label})"
            if mult > 1:
                term += f"^{mult}"
            parts.append(term)
        return " + ".join(parts)

    def relative(self, k: int) -> tuple[tuple[int, int], ...]:
        """Convert absolute field degrees to degrees over GF(p^k)."""
        for n, m in self.targets:
            if m % k != 0:
                raise InadmissibleBase(f"k = {k} does not divide the degree {m}")
        return tuple((n, m // k) for n, m in self.targets)


@dataclass(frozen=True)
class SearchBounds:
    max_order: int
    max_k: int

    def json_dict(self) -> dict:
        return {"max_order": self.max_order, "max_k": self.max_k}


@dataclass(frozen=True)
class CompletionResult:
    status: str  # exact | completed | not_found
    p: int
    bounds: SearchBounds
    group: str | None = None
    k: int | None = None
    decomposition: Decomposition | None = None
    added: tuple[SimpleComponent, ...] = ()

    def json_dict(self) -> dict:
        out: dict = {"status": self.status, "p": self.p}
        if self.status != "not_found":
            out["group"] = self.group
            out["k"] = self.k
            out["added"] = _component_json(self.added)
            out["decomposition"] = self.decomposition.json_dict()["components"]
        out["bounds"] = self.bounds.json_dict()
        return out


def _component_json(components: tuple[SimpleComponent, ...]) -> list[dict]:
    grouped: list[list] = []
    for c in sorted(components):
        if grouped and grouped[-1][0] == c:
            grouped[-1][1] += 1
        else:
            grouped.append([c, 1])
    return [{"n": c.n, "d": c.d, "mult": mult} for c, mult in grouped]


# --- parsing ----------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(self.pos, f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "expected an integer")
        return int(self.text[start : self.pos])


def _parse_field(sc: _Scanner, allow_caret: bool) -> int:
    """Parse F INT [^ INT] and return the field size as an integer.

    The caret form is only allowed where it cannot mean repetition, i.e.
    inside the parentheses of a matrix term.
    """
    if sc.peek() not in ("F", "f"):
        raise ParseError(sc.pos, "expected a field (F...)")
    sc.pos += 1
    size = sc.integer()
    if allow_caret and sc.peek() == "^":
        sc.pos += 1
        exp = sc.integer()
        size = size**exp
    return size


def _field_degrees(size: int, pos: int) -> tuple[int, int]:
    if size < 2:
        raise NotAPrimePower(f"field size {size} at position {pos} is not a prime power")
    return factor_prime_power(size)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a target ring such as "F7^3 + M2(F7)^3 + M3(F7)".

    Terms are fields "F<size>" or matrix rings "M<n>(F<size>)", joined by "+",
    each optionally followed by "^<count>" for repetition. Field sizes may be
    composite prime powers ("F8"); inside a matrix term the explicit form
    "Fp^m" is also accepted, since no repetition can occur there. A caret
    after a bare field term always means repetition. All fields must share
    one characteristic.
    """
    sc = _Scanner(text)
    p: int | None = None
    targets: list[tuple[int, int]] = []
    while True:
        sc.skip_ws()
        start = sc.pos
        ch = sc.peek()
        if ch in ("M", "m"):
            sc.pos += 1
            n = sc.integer()
            if n < 1:
                raise ParseError(start, "matrix degree must be positive")
            sc.expect("(")
            size = _parse_field(sc, allow_caret=True)
            sc.expect(")")
        elif ch in ("F", "f"):
            n = 1
            size = _parse_field(sc, allow_caret=False)
        else:
            raise ParseError(sc.pos, "expected a term (F... or M...(F...))")
        fp, fm = _field_degrees(size, start)
        if p is None:
            p = fp
        elif p != fp:
            raise MixedCharacteristic(
                f"field of characteristic {fp} at position {start}; expected {p}"
            )
        count = 1
        if sc.peek() == "^":
            sc.pos += 1
            count = sc.integer()
            if count < 1:
                raise ParseError(sc.pos, "repetition count must be positive")
        targets.extend([(n, fm)] * count)
        if sc.peek() == "+":
            sc.pos += 1
            continue
        sc.skip_ws()
        if sc.pos != len(sc.text):
            raise ParseError(sc.pos, "unexpected trailing input")
        break
    return RingSpec(p, tuple(sorted(targets)))


# --- search -----------------------------------------------------------------


def admissible_base_degrees(spec: RingSpec, max_k: int) -> tuple[int, ...]:
    """All k <= max_k such that every target field extends GF(p^k)."""
    if max_k < 1:
        return ()
    g = 0
    for _, m in spec.targets:
        g = math.gcd(g, m)
    return tuple(k for k in range(1, max_k + 1) if g % k == 0)


def contains_target(dec: Decomposition, spec: RingSpec, k: int) -> bool:
    """True iff the converted target multiset is contained in the decomposition."""
    need: dict[SimpleComponent, int] = {}
    for n, d in spec.relative(k):
        comp = SimpleComponent(n, d)
        need[comp] = need.get(comp, 0) + 1
    have = dec.counter()
    return all(have.get(comp, 0) >= mult for comp, mult in need.items())


def _subtract(dec: Decomposition, spec: RingSpec, k: int) -> tuple[SimpleComponent, ...]:
    need: dict[SimpleComponent, int] = {}
    for n, d in spec.relative(k):
        comp = SimpleComponent(n, d)
        need[comp] = need.get(comp, 0) + 1
    out = []
    for comp in dec.components:
        if need.get(comp, 0) > 0:
            need[comp] -= 1
        else:
            out.append(comp)
    return tuple(out)


def find_all_completions(
    spec: RingSpec,
    max_order: int,
    max_k: int,
    seed: int = 0,
    prefilter_degree_divides: bool = False,
    catalog: tuple[CatalogEntry, ...] | None = None,
    stop_after_first: bool = False,
) -> list[CompletionResult]:
    """Every witness within bounds, in the canonical enumeration order."""
    if max_order < 1 or max_k < 1:
        raise ValueError("bounds must be positive")
    if catalog is None:
        catalog = load_catalog()
    bounds = SearchBounds(max_order, max_k)
    p = spec.p
    ks = admissible_base_degrees(spec, max_k)
    exact_possible_k = {k for k in ks if (1, k) in spec.targets}
    results: list[CompletionResult] = []
    if ks:
        for entry in catalog:
            if entry.order > max_order:
                continue
            if entry.order % p == 0:
                continue
            if prefilter_degree_divides and any(
                entry.order % n != 0 for n, _ in spec.targets
            ):
                continue
            group = entry.group()
            for k in ks:
                dec = wedderburn(group, p, k, seed=seed)
                if not contains_target(dec, spec, k):
                    continue
                added = _subtract(dec, spec, k)
                status = "exact" if not added else "completed"
                if status == "exact" and k not in exact_possible_k:
                    raise AssertionError(
                        "exact match without the mandatory trivial component"
                    )
                results.append(
                    CompletionResult(
                        status=status,
                        p=p,
                        bounds=bounds,
                        group=entry.name,
                        k=k,
                        decomposition=dec,
                        added=added,
                    )
                )
                if stop_after_first:
                    return results
    return results


def find_completion(
    spec: RingSpec,
    max_order: int,
    max_k: int,
    seed: int = 0,
    prefilter_degree_divides: bool = False,
    catalog: tuple[CatalogEntry, ...] | None = None,
) -> CompletionResult:
    """First witness under the total order, or a not_found result with bounds."""
    hits = find_all_completions(
        spec,
        max_order,
        max_k,
        seed=seed,
        prefilter_degree_divides=prefilter_degree_divides,
        catalog=catalog,
        stop_after_first=True,
    )
    if hits:
        return hits[0]
    return CompletionResult(
        status="not_found", p=spec.p, bounds=SearchBounds(max_order, max_k)
    )


def unit_order_of_spec(spec: RingSpec, k: int) -> int:
    """Product of the unit-group orders of the target components."""
    if k not in admissible_base_degrees(spec, k):
        raise InadmissibleBase(
            f"k = {k} does not divide every target field degree"
        )
    total = 1
    for n, m in spec.targets:
        total *= gl_order(n, spec.p**m)
    return total
