"""The decomposition engine for semisimple group algebras over finite fields.

The center of the group algebra is spanned by conjugacy-class sums, with
integer structure constants. The engine splits the center into field blocks
by factoring minimal polynomials of center elements and evaluating the
partial-fraction idempotents, then recovers each matrix degree by an exact
rank computation of the corresponding two-sided ideal. Every decomposition is
cross-checked against the independent predictions in the cyclo module before
it is returned; a mismatch raises InternalInvariant rather than preferring
either path.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .cyclo import abelian_decomposition, cyclotomic_classes, predicted_degree_multiset
from .errors import InternalInvariant, NotSemisimple
from .gf import FieldElement, FieldSpec, Polynomial, make_field, poly_factor, poly_gcdext
from .group import (
    ConjClassPartition,
    Group,
    commutator_subgroup,
    conjugacy_classes,
    quotient,
)

_SPLIT_ATTEMPT_LIMIT = 4096


@dataclass(frozen=True, order=True)
class SimpleComponent:
    """One matrix-ring summand: n x n matrices over the degree-d extension."""

    n: int
    d: int

    @property
    def dim(self) -> int:
        return self.n * self.n * self.d


@dataclass(frozen=True)
class Decomposition:
    p: int
    k: int
    group: str
    components: tuple[SimpleComponent, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def j(self) -> int:
        return len(self.components)

    def total_dimension(self) -> int:
        return sum(c.dim for c in self.components)

    def counter(self) -> dict[SimpleComponent, int]:
        out: dict[SimpleComponent, int] = {}
        for c in self.components:
            out[c] = out.get(c, 0) + 1
        return out

    def grouped(self) -> list[tuple[SimpleComponent, int]]:
        return [(c, len(list(g))) for c, g in itertools.groupby(self.components)]

    def text(self) -> str:
        """Canonical form like "F_7^3 + M2(F_7)^3 + M3(F_7)"."""
        parts = []
        for comp, mult in self.grouped():
            label = field_label(self.q, comp.d)
            term = label if comp.n == 1 else f"M{comp.n}({label})"
            if mult > 1:
                term += f"^{mult}"
            parts.append(term)
        return " + ".join(parts)

    def json_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "group": self.group,
            "components": [
                {"n": comp.n, "d": comp.d, "mult": mult}
                for comp, mult in self.grouped()
            ],
        }


def field_label(q: int, d: int) -> str:
    return f"F_{q}" if d == 1 else f"F_{{{q}^{d}}}"


@dataclass(frozen=True)
class AlgebraElement:
    """A group-algebra element: one field coefficient per group element."""

    field: FieldSpec
    coeffs: tuple[FieldElement, ...]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )


def algebra_identity(group: Group, fs: FieldSpec) -> AlgebraElement:
    coeffs = [fs.zero()] * group.order
    coeffs[group.identity] = fs.one()
    return AlgebraElement(fs, tuple(coeffs))


def algebra_mul(group: Group, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Full group-algebra product, O(|G|^2); the brute-force reference."""
    fs = a.field
    out = [fs.zero()] * group.order
    for g, cg in enumerate(a.coeffs):
        if cg.is_zero():
            continue
        for h, ch in enumerate(b.coeffs):
            if ch.is_zero():
                continue
            t = group.mul(g, h)
            out[t] = out[t] + cg * ch
    return AlgebraElement(fs, tuple(out))


@dataclass(frozen=True)
class CenterBasis:
    """Class sums, the canonical basis of the center of the group algebra."""

    group: Group
    field: FieldSpec
    classes: ConjClassPartition
    class_sums: tuple[AlgebraElement, ...]


def center_basis(group: Group, fs: FieldSpec) -> CenterBasis:
    classes = conjugacy_classes(group)
    sums = []
    one, zero = fs.one(), fs.zero()
    for members in classes.classes:
        coeffs = [zero] * group.order
        for g in members:
            coeffs[g] = one
        sums.append(AlgebraElement(fs, tuple(coeffs)))
    return CenterBasis(group, fs, classes, tuple(sums))


def check_semisimple(group: Group, p: int) -> bool:
    """Maschke criterion: the group algebra is semisimple iff p does not divide |G|."""
    return group.order % p != 0


def structure_constants(group: Group, classes: ConjClassPartition) -> np.ndarray:
    """Integer counts cst[i, j, l] = #{(x, y) in K_i x K_j : x*y = rep_l}."""
    n = group.order
    m = len(classes)
    cls_of = np.array(classes.class_of, dtype=np.int64)
    table = group.table
    inverse = group.inverse
    cst = np.zeros((m, m, m), dtype=np.int64)
    xs = np.arange(n)
    for l, rep in enumerate(classes.reps):
        ys = table[inverse, rep]
        np.add.at(cst, (cls_of[xs], cls_of[ys], l), 1)
    return cst


def center_multiply(
    fs: FieldSpec,
    a: Sequence[FieldElement],
    b: Sequence[FieldElement],
    constants: np.ndarray,
) -> tuple[FieldElement, ...]:
    """Product of two center elements given in class-sum coordinates."""
    av = np.array([e.coeffs for e in a], dtype=np.int64)
    bv = np.array([e.coeffs for e in b], dtype=np.int64)
    out = _center_mul(fs, constants % fs.p, av, bv)
    return tuple(linalg.vec_to_elem(fs, row) for row in out)


# --- engine internals in class-sum coordinates ------------------------------


def _mult_matrices(fs: FieldSpec, cstp: np.ndarray, z: np.ndarray) -> list[np.ndarray]:
    """Matrices M_c with (z * w)_(c+d) accumulating M_c @ w[:, d]."""
    mats = []
    for c in range(fs.k):
        a = np.tensordot(z[:, c] % fs.p, cstp, axes=([0], [0]))  # (j, l)
        mats.append(a.T % fs.p)
    return mats


def _apply(fs: FieldSpec, mats: list[np.ndarray], w: np.ndarray) -> np.ndarray:
    k = fs.k
    acc = np.zeros((w.shape[0], 2 * k - 1), dtype=np.int64)
    for c in range(k):
        for d in range(k):
            acc[:, c + d] += mats[c] @ w[:, d]
    return linalg.conv_reduce(fs, acc)


def _apply_many(fs: FieldSpec, mats: list[np.ndarray], rows: np.ndarray) -> np.ndarray:
    k = fs.k
    acc = np.zeros((rows.shape[0], rows.shape[1], 2 * k - 1), dtype=np.int64)
    for c in range(k):
        for d in range(k):
            acc[:, :, c + d] += rows[:, :, d] @ mats[c].T
    return linalg.conv_reduce(fs, acc)


def _center_mul(fs: FieldSpec, cstp: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _apply(fs, _mult_matrices(fs, cstp, a), b)


def _min_poly(fs: FieldSpec, mats: list[np.ndarray], e_b: np.ndarray) -> Polynomial:
    """Minimal polynomial of a block element via its Krylov sequence from e_b."""
    ech = linalg.FqEchelon(fs, e_b.shape[0], track_combos=True)
    w = e_b
    while True:
        combo = ech.add(w)
        if combo is not None:
            coeffs = [linalg.vec_to_elem(fs, row) for row in combo]
            poly = Polynomial.from_elements(fs, coeffs)
            return poly.monic()
        w = _apply(fs, mats, w)


def _poly_at(
    fs: FieldSpec, mats: list[np.ndarray], poly: Polynomial, e_b: np.ndarray
) -> np.ndarray:
    """Evaluate poly at the block element with matrices mats; constant = e_b."""
    out = np.zeros_like(e_b)
    for coeff in reversed(poly.coeffs):
        out = _apply(fs, mats, out)
        out = (out + linalg.fq_scale(fs, linalg.elem_to_vec(coeff), e_b)) % fs.p
    return out


def _split_blocks(
    fs: FieldSpec, cstp: np.ndarray, ident_cls: int, seed: int
) -> list[tuple[int, np.ndarray]]:
    """Decompose the center into field blocks: returns (dimension, idempotent)."""
    m = cstp.shape[0]
    rng = random.Random(seed)
    ident = np.zeros((m, fs.k), dtype=np.int64)
    ident[ident_cls, 0] = 1
    start_basis = np.zeros((m, m, fs.k), dtype=np.int64)
    for i in range(m):
        start_basis[i, i, 0] = 1
    final: list[tuple[int, np.ndarray]] = []
    work: list[tuple[np.ndarray, np.ndarray]] = [(start_basis, ident)]
    while work:
        basis, e_b = work.pop()
        dim = basis.shape[0]
        if dim == 1:
            final.append((1, e_b))
            continue
        e_mats = _mult_matrices(fs, cstp, e_b)
        done = False
        for attempt in range(_SPLIT_ATTEMPT_LIMIT):
            if attempt < m:
                direction = np.zeros((m, fs.k), dtype=np.int64)
                direction[attempt, 0] = 1
            else:
                direction = np.zeros((m, fs.k), dtype=np.int64)
                direction[:, 0] = [rng.randrange(fs.p) for _ in range(m)]
            z = _apply(fs, e_mats, direction)
            if not z.any():
                continue
            z_mats = _mult_matrices(fs, cstp, z)
            minpoly = _min_poly(fs, z_mats, e_b)
            factors = poly_factor(minpoly, seed=rng.getrandbits(63))
            if any(mult != 1 for _, mult in factors):
                raise InternalInvariant(
                    "minimal polynomial on a semisimple block is not squarefree"
                )
            if len(factors) == 1:
                if int(minpoly.degree) == dim:
                    final.append((dim, e_b))
                    done = True
                    break
                continue
            pieces = []
            total = 0
            for fac, _ in factors:
                u, rem = _poly_div(minpoly, fac)
                if not rem.is_zero():
                    raise InternalInvariant("factor does not divide the minimal polynomial")
                g, s, _ = poly_gcdext(u, fac)
                if int(g.degree) != 0:
                    raise InternalInvariant("cofactors of a squarefree split not coprime")
                h = _poly_mod(u * s.scale(g.coeffs[0].inverse()), minpoly)
                eps = _poly_at(fs, z_mats, h, e_b)
                eps_mats = _mult_matrices(fs, cstp, eps)
                if not np.array_equal(_apply(fs, eps_mats, eps), eps):
                    raise InternalInvariant("split produced a non-idempotent")
                sub = linalg.FqEchelon(fs, m)
                for row in _apply_many(fs, eps_mats, basis):
                    sub.add(row)
                sub_dim = sub.rank
                total += sub_dim
                pieces.append((sub_dim, sub.basis(), eps, int(fac.degree)))
            if total != dim:
                raise InternalInvariant("block split dimensions do not sum")
            check = np.zeros_like(e_b)
            for _, _, eps, _ in pieces:
                check = (check + eps) % fs.p
            if not np.array_equal(check, e_b):
                raise InternalInvariant("split idempotents do not sum to the block identity")
            for sub_dim, sub_basis, eps, fac_deg in pieces:
                if sub_dim == fac_deg:
                    final.append((sub_dim, eps))
                else:
                    work.append((sub_basis, eps))
            done = True
            break
        if not done:
            raise InternalInvariant("center splitting did not converge")
    return final


def _poly_div(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    from .gf import poly_divmod

    return poly_divmod(a, b)


def _poly_mod(a: Polynomial, b: Polynomial) -> Polynomial:
    return _poly_div(a, b)[1]


def _idempotent_suite(
    fs: FieldSpec, cstp: np.ndarray, blocks: list[tuple[int, np.ndarray]], ident_cls: int
) -> None:
    m = cstp.shape[0]
    stack = np.stack([coords for _, coords in blocks])
    ident = np.zeros((m, fs.k), dtype=np.int64)
    ident[ident_cls, 0] = 1
    if not np.array_equal(stack.sum(axis=0) % fs.p, ident):
        raise InternalInvariant("idempotents do not sum to the identity")
    for t, (_, coords) in enumerate(blocks):
        mats = _mult_matrices(fs, cstp, coords)
        prods = _apply_many(fs, mats, stack)
        expect = np.zeros_like(prods)
        expect[t] = coords
        if not np.array_equal(prods, expect):
            raise InternalInvariant("idempotents are not pairwise orthogonal")


def _expand(fs: FieldSpec, coords: np.ndarray, classes: ConjClassPartition) -> np.ndarray:
    cls_of = np.array(classes.class_of, dtype=np.int64)
    return coords[cls_of]


def _coords_to_element(
    fs: FieldSpec, coords: np.ndarray, classes: ConjClassPartition
) -> AlgebraElement:
    vec = _expand(fs, coords, classes)
    return AlgebraElement(fs, tuple(linalg.vec_to_elem(fs, row) for row in vec))


def split_center(center: CenterBasis, seed: int = 0) -> tuple[AlgebraElement, ...]:
    """The primitive central idempotents, as group-algebra elements.

    Sorted by block dimension, then by coefficient sequence; the set itself is
    unique, so the output does not depend on the seed.
    """
    fs = center.field
    group = center.group
    if not check_semisimple(group, fs.p):
        raise NotSemisimple(f"{fs.p} divides |{group.name}| = {group.order}")
    classes = center.classes
    cstp = structure_constants(group, classes) % fs.p
    ident_cls = classes.class_of[group.identity]
    blocks = _split_blocks(fs, cstp, ident_cls, seed)
    _idempotent_suite(fs, cstp, blocks, ident_cls)
    keyed = []
    for dim, coords in blocks:
        vec = _expand(fs, coords, classes)
        keyed.append(((dim, tuple(int(v) for v in vec.ravel())), dim, coords))
    keyed.sort(key=lambda t: t[0])
    return tuple(_coords_to_element(fs, coords, classes) for _, _, coords in keyed)


def _right_ideal_dimension(
    fs: FieldSpec, group: Group, elem_vec: np.ndarray, idx: np.ndarray
) -> int:
    rows = elem_vec[idx]
    flat = linalg.restrict_scalars(fs, rows)
    rank = linalg.fp_rank(flat, fs.p)
    if rank % fs.k != 0:
        raise InternalInvariant("ideal rank not divisible by the field degree")
    return rank // fs.k


def _ideal_index_table(group: Group) -> np.ndarray:
    # (e * g) has coefficient e[h * g^-1] at h; idx[g, h] = h * g^-1.
    return group.table[:, group.inverse].T


def component_params(e: AlgebraElement, group: Group, fs: FieldSpec) -> SimpleComponent:
    """Matrix degree and field degree of the block cut out by a primitive
    central idempotent: d from the center block, n from the ideal dimension."""
    classes = conjugacy_classes(group)
    vec = np.array([c.coeffs for c in e.coeffs], dtype=np.int64)
    for members in classes.classes:
        first = vec[members[0]]
        if any(not np.array_equal(vec[g], first) for g in members[1:]):
            raise InternalInvariant("idempotent is not a class function")
    coords = np.stack([vec[members[0]] for members in classes.classes])
    cstp = structure_constants(group, classes) % fs.p
    mats = _mult_matrices(fs, cstp, coords)
    span = np.stack([np.stack([mat[:, j] for mat in mats], axis=-1) for j in range(len(classes))])
    d = linalg.fq_rank(fs, span)
    idx = _ideal_index_table(group)
    big = _right_ideal_dimension(fs, group, vec, idx)
    if big % d != 0:
        raise InternalInvariant("ideal dimension not divisible by the field degree")
    n = math.isqrt(big // d)
    if n * n != big // d:
        raise InternalInvariant("ideal dimension over field degree is not a square")
    return SimpleComponent(n, d)


def wedderburn(group: Group, p: int, k: int = 1, seed: int = 0) -> Decomposition:
    """Decompose the group algebra over GF(p^k) into matrix-ring components.

    Runs the center-splitting engine, then validates the result against the
    independently computed predictions (component count, field degrees,
    commutative part, and dimension count) before returning it.
    """
    fs = make_field(p, k)
    if not check_semisimple(group, p):
        raise NotSemisimple(f"{p} divides |{group.name}| = {group.order}")
    q = fs.q
    classes = conjugacy_classes(group)
    cstp = structure_constants(group, classes) % p
    ident_cls = classes.class_of[group.identity]
    blocks = _split_blocks(fs, cstp, ident_cls, seed)
    _idempotent_suite(fs, cstp, blocks, ident_cls)

    idx = _ideal_index_table(group)
    comps = []
    for d, coords in blocks:
        vec = _expand(fs, coords, classes)
        big = _right_ideal_dimension(fs, group, vec, idx)
        if big % d != 0:
            raise InternalInvariant("ideal dimension not divisible by the field degree")
        n = math.isqrt(big // d)
        if n * n != big // d:
            raise InternalInvariant("ideal dimension over field degree is not a square")
        comps.append(SimpleComponent(n, d))
    comps.sort()
    dec = Decomposition(p, k, group.name, tuple(comps))

    if dec.total_dimension() != group.order:
        raise InternalInvariant(
            f"dimension count {dec.total_dimension()} != |G| = {group.order}"
        )
    if SimpleComponent(1, 1) not in comps:
        raise InternalInvariant("decomposition lacks the mandatory trivial component")
    cyc = cyclotomic_classes(group, q, p)
    if len(cyc) != dec.j:
        raise InternalInvariant(
            f"component count {dec.j} != {len(cyc)} orbit classes"
        )
    degrees = tuple(sorted(c.d for c in comps))
    if degrees != predicted_degree_multiset(cyc):
        raise InternalInvariant(
            f"degree multiset {degrees} != predicted {predicted_degree_multiset(cyc)}"
        )
    commutative: dict[int, int] = {}
    for c in comps:
        if c.n == 1:
            commutative[c.d] = commutative.get(c.d, 0) + 1
    ab = abelian_decomposition(quotient(group, commutator_subgroup(group)), q, p)
    if commutative != ab.degree_counter():
        raise InternalInvariant(
            f"commutative part {commutative} != abelianization prediction {ab.degree_counter()}"
        )
    return dec


def gl_order(n: int, q: int) -> int:
    """Order of GL_n over the q-element field, exactly."""
    result = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        result *= q**i - 1
    return result


def unit_group_order(dec: Decomposition) -> int:
    """Order of the unit group: the product of the component GL orders."""
    total = 1
    for comp in dec.components:
        total *= gl_order(comp.n, dec.q**comp.d)
    return total
