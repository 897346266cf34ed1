"""Exact arithmetic in GF(p^k): fields, dense polynomials, factorization.

Fields are built through :func:`make_field`, which selects a deterministic
modulus: the lexicographically smallest monic irreducible of the requested
degree, comparing coefficient sequences from the constant term up. Polynomial
factorization runs squarefree decomposition, then distinct-degree splitting,
then seeded equal-degree splitting. The returned factor multiset is sorted
canonically and is therefore identical for every seed.

Polynomials are dense coefficient sequences; every degree that occurs in this
package is bounded by the number of conjugacy classes of a small group, so no
sparse representation is needed. Factorization internals work on integer
coefficient arrays for speed; the public types are plain dataclasses.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InternalInvariant,
    NonPrime,
    NotAPrimePower,
    NotCoprime,
    UnsupportedSize,
    ZeroPolynomial,
)

# p must stay small enough for trial-division primality checks, and q = p^k
# must stay an exact machine-word integer.
MAX_PRIME = 2**31 - 1
MAX_Q = 2**63 - 1

NEG_INFINITY = float("-inf")


def is_prime(n: int) -> bool:
    """Trial-division primality test for machine-word integers."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field GF(p^k) with a fixed monic irreducible modulus.

    The modulus is stored as an integer coefficient tuple of length k+1, from
    the constant term up; for k = 1 it is the polynomial x, i.e. (0, 1).
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    @functools.cached_property
    def _reduction(self) -> np.ndarray:
        """Rows x^j mod modulus for j = 0 .. 2k-2, as a (2k-1, k) array."""
        p, k = self.p, self.k
        rows = [[0] * k for _ in range(2 * k - 1)]
        for j in range(min(k, 2 * k - 1)):
            rows[j][j] = 1
        if k > 1:
            top = [(-c) % p for c in self.modulus[:k]]
            cur = list(top)
            rows[k] = list(cur)
            for j in range(k + 1, 2 * k - 1):
                lead = cur[-1]
                cur = [0] + cur[:-1]
                for i in range(k):
                    cur[i] = (cur[i] + lead * top[i]) % p
                rows[j] = list(cur)
        arr = np.array(rows, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FieldElement":
        """The class of x, a root of the modulus (equals 0 for k = 1)."""
        if self.k == 1:
            return self.zero()
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def from_int(self, value: int) -> "FieldElement":
        """Decode the base-p integer representation sum(c_i * p^i)."""
        if not 0 <= value < self.q:
            raise ValueError(f"integer representation out of range [0, {self.q})")
        coeffs = []
        for _ in range(self.k):
            value, r = divmod(value, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterable["FieldElement"]:
        for v in range(self.q):
            yield self.from_int(v)

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^k), stored as k coefficients over GF(p)."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def to_int(self) -> int:
        """Base-p integer representation sum(c_i * p^i)."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        fs = self.field
        p, k = fs.p, fs.k
        if k == 1:
            return FieldElement(fs, ((self.coeffs[0] * other.coeffs[0]) % p,))
        conv = [0] * (2 * k - 1)
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        red = fs._reduction
        out = [0] * k
        for j, cj in enumerate(conv):
            if cj:
                row = red[j]
                for t in range(k):
                    out[t] += cj * int(row[t])
        return FieldElement(fs, tuple(v % p for v in out))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative inverse")
        fs = self.field
        if fs.k == 1:
            return FieldElement(fs, (pow(self.coeffs[0], fs.p - 2, fs.p),))
        return self ** (fs.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "FieldElement":
        """The p-power map, a generator of the automorphism group over GF(p)."""
        return self ** self.field.p

    def __str__(self) -> str:
        return str(self.to_int())


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over a FieldSpec, with no trailing zero coefficients.

    The zero polynomial has an empty coefficient tuple and degree -inf.
    """

    field: FieldSpec
    coeffs: tuple[FieldElement, ...]

    @classmethod
    def from_elements(cls, field: FieldSpec, coeffs: Sequence[FieldElement]) -> "Polynomial":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return cls(field, tuple(cs))

    @classmethod
    def from_ints(cls, field: FieldSpec, coeffs: Sequence[int]) -> "Polynomial":
        """Coefficients given as base-p integer representations, constant first."""
        return cls.from_elements(field, [field.from_int(c % field.q) for c in coeffs])

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (field.zero(), field.one()))

    @property
    def degree(self) -> int | float:
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        lc = self.leading()
        if lc == self.field.one():
            return self
        inv = lc.inverse()
        return Polynomial(self.field, tuple(c * inv for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        la, lb = len(self.coeffs), len(other.coeffs)
        zero = self.field.zero()
        out = []
        for i in range(max(la, lb)):
            a = self.coeffs[i] if i < la else zero
            b = other.coeffs[i] if i < lb else zero
            out.append(a + b)
        return Polynomial.from_elements(self.field, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial.from_elements(self.field, out)

    def scale(self, c: FieldElement) -> "Polynomial":
        return Polynomial.from_elements(self.field, [a * c for a in self.coeffs])

    def shift(self, n: int) -> "Polynomial":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return Polynomial(self.field, (self.field.zero(),) * n + self.coeffs)

    def derivative(self) -> "Polynomial":
        fs = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            mult = fs.from_int(i % fs.p)
            out.append(self.coeffs[i] * mult)
        return Polynomial.from_elements(fs, out)

    def __call__(self, point: FieldElement) -> FieldElement:
        return poly_eval(self, point)

    def int_coeffs(self) -> tuple[int, ...]:
        return tuple(c.to_int() for c in self.coeffs)

    def sort_key(self) -> tuple:
        """Degree first, then coefficients compared from the leading term down."""
        return (len(self.coeffs), tuple(reversed(self.int_coeffs())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i].to_int()
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)


# ---------------------------------------------------------------------------
# Internal coefficient-array layer.
#
# A polynomial over GF(p^k) is a (length, k) int64 array, constant term first,
# with any trailing zero rows trimmed; the zero polynomial has shape (0, k).
# All heavy loops (factorization, modular powers) run here so that numpy does
# the coefficient arithmetic.
# ---------------------------------------------------------------------------


def _pa_trim(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    while n > 0 and not arr[n - 1].any():
        n -= 1
    return arr[:n]


def _pa_zero(fs: FieldSpec) -> np.ndarray:
    return np.zeros((0, fs.k), dtype=np.int64)


def _pa_one(fs: FieldSpec) -> np.ndarray:
    out = np.zeros((1, fs.k), dtype=np.int64)
    out[0, 0] = 1
    return out


def _pa_x(fs: FieldSpec) -> np.ndarray:
    out = np.zeros((2, fs.k), dtype=np.int64)
    out[1, 0] = 1
    return out


def _pa_deg(arr: np.ndarray) -> int:
    return arr.shape[0] - 1


def _pa_is_zero(arr: np.ndarray) -> bool:
    return arr.shape[0] == 0


def _elem_to_arr(c: FieldElement) -> np.ndarray:
    return np.array(c.coeffs, dtype=np.int64)


def _arr_to_elem(fs: FieldSpec, a: np.ndarray) -> FieldElement:
    return FieldElement(fs, tuple(int(v) % fs.p for v in a))


def _pa_from_poly(f: Polynomial) -> np.ndarray:
    if not f.coeffs:
        return _pa_zero(f.field)
    return np.array([c.coeffs for c in f.coeffs], dtype=np.int64)


def _pa_to_poly(fs: FieldSpec, arr: np.ndarray) -> Polynomial:
    return Polynomial.from_elements(fs, [_arr_to_elem(fs, row) for row in arr])


def _pa_scal(fs: FieldSpec, c: np.ndarray, arr: np.ndarray) -> np.ndarray:
    """Multiply every coefficient of arr by the scalar c (shape (k,))."""
    if arr.shape[0] == 0:
        return arr
    k = fs.k
    if k == 1:
        return (arr * int(c[0])) % fs.p
    acc = np.zeros((arr.shape[0], 2 * k - 1), dtype=np.int64)
    for ca in range(k):
        if c[ca] == 0:
            continue
        acc[:, ca : ca + k] += int(c[ca]) * arr
    return acc @ fs._reduction % fs.p


def _pa_mul(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if _pa_is_zero(a) or _pa_is_zero(b):
        return _pa_zero(fs)
    k = fs.k
    out_len = a.shape[0] + b.shape[0] - 1
    acc = np.zeros((out_len, 2 * k - 1), dtype=np.int64)
    for ca in range(k):
        col_a = a[:, ca]
        if not col_a.any():
            continue
        for cb in range(k):
            col_b = b[:, cb]
            if not col_b.any():
                continue
            acc[:, ca + cb] += np.convolve(col_a, col_b)
    return _pa_trim(acc @ fs._reduction % fs.p)


def _pa_add(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = a.shape[0], b.shape[0]
    n = max(la, lb)
    out = np.zeros((n, fs.k), dtype=np.int64)
    out[:la] += a
    out[:lb] += b
    return _pa_trim(out % fs.p)


def _pa_sub(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = a.shape[0], b.shape[0]
    n = max(la, lb)
    out = np.zeros((n, fs.k), dtype=np.int64)
    out[:la] += a
    out[:lb] -= b
    return _pa_trim(out % fs.p)


def _pa_divmod(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if _pa_is_zero(b):
        raise DivisionByZero("polynomial division by zero")
    if a.shape[0] < b.shape[0]:
        return _pa_zero(fs), a.copy()
    lc = b[-1]
    monic = int(lc[0]) == 1 and not lc[1:].any()
    if monic:
        bm, lc_inv = b, None
    else:
        lc_inv = _elem_to_arr(_arr_to_elem(fs, lc).inverse())
        bm = _pa_scal(fs, lc_inv, b)
    db = bm.shape[0] - 1
    rem = a.copy() % fs.p
    qlen = rem.shape[0] - db
    quot = np.zeros((qlen, fs.k), dtype=np.int64)
    for i in range(qlen - 1, -1, -1):
        c = rem[db + i]
        if not c.any():
            continue
        quot[i] = c
        rem[i : i + db] = (rem[i : i + db] - _pa_scal(fs, c, bm[:db])) % fs.p
        rem[db + i] = 0
    if lc_inv is not None:
        quot = _pa_scal(fs, lc_inv, quot)
    return _pa_trim(quot), _pa_trim(rem[:db])


def _pa_mod(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _pa_divmod(fs, a, b)[1]


def _pa_monic(fs: FieldSpec, a: np.ndarray) -> np.ndarray:
    if _pa_is_zero(a):
        return a
    lc = a[-1]
    if int(lc[0]) == 1 and not lc[1:].any():
        return a
    inv = _elem_to_arr(_arr_to_elem(fs, lc).inverse())
    return _pa_scal(fs, inv, a)


def _pa_gcd(fs: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    while not _pa_is_zero(b):
        a, b = b, _pa_mod(fs, a, b)
    return _pa_monic(fs, a)


def _pa_powmod(fs: FieldSpec, a: np.ndarray, e: int, m: np.ndarray) -> np.ndarray:
    result = _pa_mod(fs, _pa_one(fs), m)
    base = _pa_mod(fs, a, m)
    while e:
        if e & 1:
            result = _pa_mod(fs, _pa_mul(fs, result, base), m)
        base = _pa_mod(fs, _pa_mul(fs, base, base), m)
        e >>= 1
    return result


def _pa_derivative(fs: FieldSpec, a: np.ndarray) -> np.ndarray:
    if a.shape[0] <= 1:
        return _pa_zero(fs)
    mult = (np.arange(1, a.shape[0]) % fs.p).reshape(-1, 1)
    return _pa_trim(a[1:] * mult % fs.p)


def _pa_pth_root(fs: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Inverse of the p-power map on polynomials with zero derivative."""
    p = fs.p
    rows = a[::p]
    if fs.k == 1:
        return _pa_trim(rows.copy())
    e = fs.p ** (fs.k - 1)
    out = np.array(
        [(_arr_to_elem(fs, row) ** e).coeffs for row in rows], dtype=np.int64
    )
    return _pa_trim(out)


def _pa_is_irreducible(fs: FieldSpec, f: np.ndarray) -> bool:
    n = _pa_deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = fs.q
    x = _pa_x(fs)
    marks = {n // r for r in _prime_factors(n)}
    h = _pa_mod(fs, x, f)
    powers = {}
    for j in range(1, n + 1):
        h = _pa_powmod(fs, h, q, f)
        if j in marks or j == n:
            powers[j] = h
    if not np.array_equal(powers[n], _pa_mod(fs, x, f)):
        return False
    for j in marks:
        g = _pa_gcd(fs, _pa_sub(fs, powers[j], x), f)
        if _pa_deg(g) > 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _pa_squarefree(fs: FieldSpec, a: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Decompose a monic polynomial into squarefree parts with multiplicities."""
    out: list[tuple[np.ndarray, int]] = []
    stack = [(a, 1)]
    while stack:
        f, mult = stack.pop()
        if _pa_deg(f) < 1:
            continue
        df = _pa_derivative(fs, f)
        if _pa_is_zero(df):
            stack.append((_pa_pth_root(fs, f), mult * fs.p))
            continue
        g = _pa_gcd(fs, f, df)
        w = _pa_divmod(fs, f, g)[0]
        i = 1
        while _pa_deg(w) > 0:
            y = _pa_gcd(fs, w, g)
            z = _pa_divmod(fs, w, y)[0]
            if _pa_deg(z) > 0:
                out.append((z, mult * i))
            w = y
            g = _pa_divmod(fs, g, y)[0]
            i += 1
        if _pa_deg(g) > 0:
            stack.append((_pa_pth_root(fs, g), mult * fs.p))
    return out


def _pa_distinct_degree(fs: FieldSpec, a: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Split a monic squarefree polynomial by irreducible factor degree."""
    out = []
    f = a
    q = fs.q
    x = _pa_x(fs)
    h = _pa_mod(fs, x, f)
    d = 0
    while _pa_deg(f) >= 2 * (d + 1):
        d += 1
        h = _pa_powmod(fs, h, q, f)
        g = _pa_gcd(fs, _pa_sub(fs, h, x), f)
        if _pa_deg(g) > 0:
            out.append((g, d))
            f = _pa_divmod(fs, f, g)[0]
            h = _pa_mod(fs, h, f)
    if _pa_deg(f) > 0:
        out.append((f, _pa_deg(f)))
    return out


def _pa_equal_degree(
    fs: FieldSpec, a: np.ndarray, d: int, rng: random.Random
) -> list[np.ndarray]:
    """Split a monic product of degree-d irreducibles into its factors."""
    n = _pa_deg(a)
    if n == d:
        return [a]
    p, k, q = fs.p, fs.k, fs.q
    while True:
        r = np.array(
            [[rng.randrange(p) for _ in range(k)] for _ in range(n)], dtype=np.int64
        )
        r = _pa_trim(r)
        if _pa_deg(r) < 1:
            continue
        if p == 2:
            # Trace map sum r^(2^i) over the degree-d extension of GF(2^k).
            t = _pa_mod(fs, r, a)
            acc = t
            for _ in range(k * d - 1):
                t = _pa_mod(fs, _pa_mul(fs, t, t), a)
                acc = _pa_add(fs, acc, t)
            g = _pa_gcd(fs, acc, a)
        else:
            u = _pa_powmod(fs, r, (q**d - 1) // 2, a)
            g = _pa_gcd(fs, _pa_sub(fs, u, _pa_one(fs)), a)
        if 0 < _pa_deg(g) < n:
            rest = _pa_divmod(fs, a, g)[0]
            return _pa_equal_degree(fs, g, d, rng) + _pa_equal_degree(fs, rest, d, rng)


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldSpec:
    """Construct GF(p^k) with the canonical deterministic modulus.

    The modulus is the lexicographically smallest monic irreducible of degree
    k over GF(p) (coefficient sequences compared from the constant term up);
    for k = 1 it is the polynomial x. Repeated calls return the same object.
    """
    if not isinstance(p, int) or not isinstance(k, int):
        raise TypeError("p and k must be integers")
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    if p > MAX_PRIME:
        raise UnsupportedSize(f"prime {p} exceeds the supported bound {MAX_PRIME}")
    if not is_prime(p):
        raise NonPrime(p)
    if p**k > MAX_Q:
        raise UnsupportedSize(f"{p}^{k} exceeds the supported bound {MAX_Q}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    base = make_field(p, 1)
    # Candidates ordered by the integer value sum(c_i * p^i) of the lower
    # coefficients; a degree >= 2 irreducible has a nonzero constant term.
    for value in range(1, p**k):
        if value % p == 0:
            continue
        v = value
        coeffs = []
        for _ in range(k):
            v, r = divmod(v, p)
            coeffs.append(r)
        coeffs = tuple(coeffs) + (1,)
        cand = np.array([[c] for c in coeffs], dtype=np.int64)
        if _pa_is_irreducible(base, cand):
            return FieldSpec(p, k, coeffs)
    raise InternalInvariant("no irreducible modulus found")  # pragma: no cover


def mult_order(q: int, n: int) -> int:
    """Smallest t >= 1 with q^t = 1 (mod n); requires gcd(q, n) = 1."""
    if n < 1 or q < 1:
        raise ValueError("arguments must be positive")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    t = 1
    acc = q % n
    while acc != 1:
        acc = (acc * q) % n
        t += 1
    return t


def factor_prime_power(n: int) -> tuple[int, int]:
    """Write n as p^k with p prime, or raise NotAPrimePower."""
    if n < 2:
        raise NotAPrimePower(f"{n} is not a prime power")
    p = n
    for f in range(2, n + 1):
        if f * f > n:
            break
        if n % f == 0:
            p = f
            break
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise NotAPrimePower(f"{n} is not a prime power")
    return p, k


def _same_field(*polys: Polynomial) -> FieldSpec:
    fs = polys[0].field
    for f in polys[1:]:
        if f.field != fs:
            raise FieldMismatch("polynomials over different fields")
    return fs


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    fs = _same_field(a, b)
    q, r = _pa_divmod(fs, _pa_from_poly(a), _pa_from_poly(b))
    return _pa_to_poly(fs, q), _pa_to_poly(fs, r)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    fs = _same_field(a, b)
    return _pa_to_poly(fs, _pa_gcd(fs, _pa_from_poly(a), _pa_from_poly(b)))


def poly_gcdext(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Extended Euclid: returns monic g and s, t with s*a + t*b = g."""
    fs = _same_field(a, b)
    r0, r1 = a, b
    s0, s1 = Polynomial.one(fs), Polynomial.zero(fs)
    t0, t1 = Polynomial.zero(fs), Polynomial.one(fs)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc_inv = r0.leading().inverse()
    return r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)


def poly_eval(f: Polynomial, point: FieldElement) -> FieldElement:
    if point.field != f.field:
        raise FieldMismatch("evaluation point from a different field")
    acc = f.field.zero()
    for c in reversed(f.coeffs):
        acc = acc * point + c
    return acc


def poly_is_irreducible(f: Polynomial) -> bool:
    return _pa_is_irreducible(f.field, _pa_from_poly(f))


def poly_factor(f: Polynomial, seed: int = 0) -> tuple[tuple[Polynomial, int], ...]:
    """Factor into monic irreducibles with multiplicities.

    The product of factors^multiplicities times the leading coefficient equals
    the input. Equal-degree splitting draws randomness from the given seed;
    the result is sorted by (degree, coefficient sequence) and is the same for
    every seed since the factor multiset is unique.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    fs = f.field
    if f.degree == 0:
        return ()
    rng = random.Random(seed)
    work = _pa_monic(fs, _pa_from_poly(f))
    found: dict[tuple, tuple[Polynomial, int]] = {}
    for part, mult in _pa_squarefree(fs, work):
        for block, d in _pa_distinct_degree(fs, part):
            for irr in _pa_equal_degree(fs, block, d, rng):
                poly = _pa_to_poly(fs, irr)
                key = poly.sort_key()
                if key in found:
                    found[key] = (poly, found[key][1] + mult)
                else:
                    found[key] = (poly, mult)
    return tuple(found[key] for key in sorted(found))
