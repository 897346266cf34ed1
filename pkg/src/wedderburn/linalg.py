"""Vectorized exact linear algebra over GF(p^k).

Vectors over GF(p^k) are int64 arrays with a trailing coefficient axis of
length k; a matrix over the field has shape (rows, cols, k). Prime-field
data (k = 1) flows through the same code paths. Everything here is exact
integer arithmetic reduced mod p.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero
from .gf import FieldElement, FieldSpec


def elem_to_vec(e: FieldElement) -> np.ndarray:
    return np.array(e.coeffs, dtype=np.int64)


def vec_to_elem(fs: FieldSpec, v: np.ndarray) -> FieldElement:
    return FieldElement(fs, tuple(int(c) % fs.p for c in v))


def embed_prime(fs: FieldSpec, values: np.ndarray) -> np.ndarray:
    """Lift an integer array (mod p) to field coordinates (..., k)."""
    out = np.zeros(values.shape + (fs.k,), dtype=np.int64)
    out[..., 0] = values % fs.p
    return out


def conv_reduce(fs: FieldSpec, acc: np.ndarray) -> np.ndarray:
    """Reduce a (..., 2k-1) convolution accumulator back to (..., k) mod p."""
    return acc @ fs._reduction % fs.p


def fq_scale(fs: FieldSpec, c: np.ndarray, arr: np.ndarray) -> np.ndarray:
    """Multiply every entry of arr (..., k) by the scalar c (k,)."""
    k = fs.k
    if k == 1:
        return arr * int(c[0]) % fs.p
    acc = np.zeros(arr.shape[:-1] + (2 * k - 1,), dtype=np.int64)
    for cc in range(k):
        if c[cc]:
            acc[..., cc : cc + k] += int(c[cc]) * arr
    return conv_reduce(fs, acc)


def fq_mul(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise field product with numpy broadcasting on the leading axes."""
    k = fs.k
    if k == 1:
        return a * b % fs.p
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    acc = np.zeros(shape + (2 * k - 1,), dtype=np.int64)
    for ca in range(k):
        for cb in range(k):
            acc[..., ca + cb] += a[..., ca] * b[..., cb]
    return conv_reduce(fs, acc)


def scalar_inverse(fs: FieldSpec, c: np.ndarray) -> np.ndarray:
    e = vec_to_elem(fs, c)
    if e.is_zero():
        raise DivisionByZero("cannot invert the zero scalar")
    return elem_to_vec(e.inverse())


class FqEchelon:
    """Incremental row echelon accumulator over GF(p^k).

    Stored rows are kept mutually reduced with distinct pivot columns, so a
    new vector reduces in a single pass. When combo tracking is on, add()
    returns the dependency coefficients (in terms of the added vectors) the
    first time a vector reduces to zero; independent adds return None.
    """

    def __init__(self, fs: FieldSpec, width: int, track_combos: bool = False):
        self.fs = fs
        self.width = width
        self.track = track_combos
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.combos: list[np.ndarray] = []
        self.added = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.width, self.fs.k), dtype=np.int64)
        return np.stack(self.rows)

    def add(self, vec: np.ndarray) -> np.ndarray | None:
        fs = self.fs
        v = vec.copy() % fs.p
        combo = None
        if self.track:
            combo = np.zeros((self.added + 1, fs.k), dtype=np.int64)
            combo[self.added, 0] = 1
        self.added += 1
        for row, piv, rcombo in zip(self.rows, self.pivots, self.combos):
            c = v[piv].copy()
            if not c.any():
                continue
            v = (v - fq_scale(fs, c, row)) % fs.p
            if self.track:
                combo[: rcombo.shape[0]] = (
                    combo[: rcombo.shape[0]] - fq_scale(fs, c, rcombo)
                ) % fs.p
        nz = np.nonzero(v.any(axis=1))[0]
        if len(nz) == 0:
            return combo if self.track else np.zeros((0, fs.k), dtype=np.int64)
        piv = int(nz[0])
        inv = scalar_inverse(fs, v[piv])
        v = fq_scale(fs, inv, v)
        if self.track:
            combo = fq_scale(fs, inv, combo)
        # Back-substitute into existing rows to keep the basis mutually reduced.
        for i, (row, rcombo) in enumerate(zip(self.rows, self.combos)):
            c = row[piv].copy()
            if not c.any():
                continue
            self.rows[i] = (row - fq_scale(fs, c, v)) % fs.p
            if self.track:
                padded = np.zeros_like(combo)
                padded[: rcombo.shape[0]] = rcombo
                self.combos[i] = (padded - fq_scale(fs, c, combo)) % fs.p
        self.rows.append(v)
        self.pivots.append(piv)
        if self.track:
            self.combos.append(combo)
        else:
            self.combos.append(np.zeros((0, fs.k), dtype=np.int64))
        return None


def fq_rank(fs: FieldSpec, rows: np.ndarray) -> int:
    ech = FqEchelon(fs, rows.shape[1])
    for r in rows:
        ech.add(r)
    return ech.rank


def fp_rank(matrix: np.ndarray, p: int) -> int:
    """Row-echelon rank of an integer matrix over GF(p)."""
    a = matrix % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        below = a[r + 1 :, c]
        mask = np.nonzero(below)[0]
        if len(mask):
            a[r + 1 + mask] = (a[r + 1 + mask] - np.outer(below[mask], a[r])) % p
        r += 1
    return r


def restrict_scalars(fs: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """Span-preserving scalar restriction from GF(p^k) to GF(p).

    Given rows (r, n, k) spanning a GF(p^k)-subspace of dimension D, returns
    a (r*k, n*k) integer matrix whose GF(p)-row space has dimension k*D.
    """
    r, n, k = rows.shape
    if k == 1:
        return rows.reshape(r, n)
    out = np.zeros((k, r, n, k), dtype=np.int64)
    for j in range(k):
        acc = np.zeros((r, n, 2 * k - 1), dtype=np.int64)
        acc[..., j : j + k] = rows
        out[j] = conv_reduce(fs, acc)
    return out.reshape(k * r, n * k)
