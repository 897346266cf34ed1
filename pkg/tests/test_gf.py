"""Field construction, element arithmetic, and polynomial factorization."""

import itertools
import random

import pytest

from wedderburn import gf
from wedderburn.errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrime,
    NotAPrimePower,
    NotCoprime,
    UnsupportedSize,
    ZeroPolynomial,
)


def all_monic_polys(field, degree):
    """Every monic polynomial of the given degree, brute force."""
    for tail in itertools.product(range(field.q), repeat=degree):
        yield gf.Polynomial.from_ints(field, list(tail) + [1])


def brute_irreducible(poly):
    """Trial division by every lower-degree monic polynomial."""
    deg = int(poly.degree)
    if deg < 1:
        return False
    for d in range(1, deg):
        for g in all_monic_polys(poly.field, d):
            if gf.poly_divmod(poly, g)[1].is_zero():
                return False
    return True


class TestMakeField:
    def test_prime_field_modulus_is_x(self):
        assert gf.make_field(7, 1).modulus == (0, 1)

    def test_f8_modulus_matches_exhaustive_scan(self):
        # Oracle: scan the 8 monic cubics over GF(2) in the canonical order.
        f2 = gf.make_field(2, 1)
        best = None
        for value in range(8):
            coeffs = [(value >> i) & 1 for i in range(3)] + [1]
            cand = gf.Polynomial.from_ints(f2, coeffs)
            if brute_irreducible(cand):
                best = tuple(coeffs)
                break
        assert best == (1, 1, 0, 1)  # x^3 + x + 1
        assert gf.make_field(2, 3).modulus == best

    def test_nonprime_rejected(self):
        with pytest.raises(NonPrime):
            gf.make_field(4, 1)

    def test_pure_function(self):
        assert gf.make_field(3, 2) is gf.make_field(3, 2)
        assert gf.make_field(5, 3).modulus == gf.make_field(5, 3).modulus

    def test_size_limits(self):
        with pytest.raises(UnsupportedSize):
            gf.make_field(2**31 + 11, 1)
        with pytest.raises(UnsupportedSize):
            gf.make_field(2, 64)

    @pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
    def test_modulus_divides_field_polynomial(self, p, k):
        fp = gf.make_field(p, 1)
        modulus = gf.Polynomial.from_ints(fp, list(gf.make_field(p, k).modulus))
        # x^(p^k) - x vanishes on the whole field, so the modulus divides it.
        big = gf.Polynomial.from_ints(fp, [0] * (p**k) + [1]) - gf.Polynomial.x(fp)
        assert gf.poly_divmod(big, modulus)[1].is_zero()
        for j in range(1, k):
            small = gf.Polynomial.from_ints(fp, [0] * (p**j) + [1]) - gf.Polynomial.x(fp)
            assert int(gf.poly_gcd(small, modulus).degree) == 0


class TestElements:
    def test_inverse_in_f7(self):
        f7 = gf.make_field(7, 1)
        assert f7.from_int(3).inverse() == f7.from_int(5)

    def test_zero_inverse_raises(self):
        with pytest.raises(DivisionByZero):
            gf.make_field(5, 1).zero().inverse()

    def test_field_mismatch(self):
        a = gf.make_field(5, 1).one()
        b = gf.make_field(7, 1).one()
        with pytest.raises(FieldMismatch):
            a * b

    def test_frobenius_fixed_points(self):
        for field in (gf.make_field(3, 1), gf.make_field(2, 3), gf.make_field(3, 2)):
            assert field.zero().frobenius() == field.zero()
            assert field.one().frobenius() == field.one()

    def test_f8_generator_product(self):
        f8 = gf.make_field(2, 3)
        x = f8.gen()
        assert (x * (x * x)).coeffs == (1, 1, 0)  # x^3 = x + 1

    @pytest.mark.parametrize("p,k", [(2, 1), (7, 1), (2, 3), (3, 2), (5, 2)])
    def test_division_and_frobenius_order(self, p, k):
        field = gf.make_field(p, k)
        rng = random.Random(p * 100 + k)
        for _ in range(50):
            a = field.from_int(rng.randrange(field.q))
            b = field.from_int(rng.randrange(1, field.q))
            assert (a * b) * b.inverse() == a
            fr = a
            for _ in range(k):
                fr = fr.frobenius()
            assert fr == a


class TestPolynomials:
    def test_gcd_common_factor(self):
        f7 = gf.make_field(7, 1)
        f = gf.Polynomial.from_ints(f7, [6, 0, 1])  # x^2 - 1
        g = gf.Polynomial.from_ints(f7, [6, 1])  # x - 1
        assert gf.poly_gcd(f, g) == g

    def test_divmod_exact(self):
        f5 = gf.make_field(5, 1)
        x3 = gf.Polynomial.from_ints(f5, [0, 0, 0, 1])
        q, r = gf.poly_divmod(x3, gf.Polynomial.x(f5))
        assert q == gf.Polynomial.from_ints(f5, [0, 0, 1])
        assert r.is_zero()

    def test_divide_by_zero(self):
        f5 = gf.make_field(5, 1)
        with pytest.raises(DivisionByZero):
            gf.poly_divmod(gf.Polynomial.x(f5), gf.Polynomial.zero(f5))

    def test_eval(self):
        f3 = gf.make_field(3, 1)
        f = gf.Polynomial.from_ints(f3, [1, 0, 1])  # x^2 + 1
        assert gf.poly_eval(f, f3.from_int(1)).to_int() == 2

    def test_gcdext_bezout(self):
        f7 = gf.make_field(7, 1)
        rng = random.Random(7)
        for _ in range(30):
            a = gf.Polynomial.from_ints(f7, [rng.randrange(7) for _ in range(4)] + [1])
            b = gf.Polynomial.from_ints(f7, [rng.randrange(7) for _ in range(2)] + [1])
            g, s, t = gf.poly_gcdext(a, b)
            assert s * a + t * b == g
            assert g.is_monic()

    def test_canonical_text(self):
        f2 = gf.make_field(2, 1)
        assert str(gf.Polynomial.from_ints(f2, [1, 1, 0, 1])) == "x^3+x+1"
        assert str(gf.Polynomial.zero(f2)) == "0"


class TestFactor:
    def test_difference_of_squares(self):
        f7 = gf.make_field(7, 1)
        f = gf.Polynomial.from_ints(f7, [6, 0, 1])
        factors = gf.poly_factor(f)
        assert [(str(p), m) for p, m in factors] == [("x+1", 1), ("x+6", 1)]

    def test_x7_minus_1_over_f2(self):
        f2 = gf.make_field(2, 1)
        f = gf.Polynomial.from_ints(f2, [1, 0, 0, 0, 0, 0, 0, 1])
        factors = gf.poly_factor(f)
        # Oracle: trial division by every monic irreducible of degree <= 3.
        expected = []
        rest = f
        for d in (1, 2, 3):
            for g in all_monic_polys(f2, d):
                if not brute_irreducible(g):
                    continue
                while gf.poly_divmod(rest, g)[1].is_zero():
                    expected.append(g)
                    rest = gf.poly_divmod(rest, g)[0]
        assert int(rest.degree) == 0
        assert sorted(p.sort_key() for p, m in factors for _ in range(m)) == sorted(
            p.sort_key() for p in expected
        )
        assert [str(p) for p, _ in factors] == ["x+1", "x^3+x+1", "x^3+x^2+1"]

    def test_irreducible_cubic(self):
        f2 = gf.make_field(2, 1)
        f = gf.Polynomial.from_ints(f2, [1, 1, 0, 1])
        assert gf.poly_factor(f) == ((f, 1),)
        assert gf.poly_is_irreducible(f)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomial):
            gf.poly_factor(gf.Polynomial.zero(gf.make_field(3, 1)))

    def test_repeated_factors(self):
        f3 = gf.make_field(3, 1)
        x_plus_1 = gf.Polynomial.from_ints(f3, [1, 1])
        f = x_plus_1 * x_plus_1 * x_plus_1 * gf.Polynomial.x(f3)
        factors = dict((str(p), m) for p, m in gf.poly_factor(f))
        assert factors == {"x": 1, "x+1": 3}

    @pytest.mark.parametrize("p,k", [(2, 1), (5, 1), (2, 2), (3, 2)])
    def test_remultiply_500_random(self, p, k):
        field = gf.make_field(p, k)
        rng = random.Random(1000 * p + k)
        for trial in range(500):
            deg = rng.randrange(1, 9)
            ints = [rng.randrange(field.q) for _ in range(deg)]
            ints.append(rng.randrange(1, field.q))
            f = gf.Polynomial.from_ints(field, ints)
            prod = gf.Polynomial.one(field).scale(f.leading())
            for factor, mult in gf.poly_factor(f, seed=trial):
                assert factor.is_monic()
                assert gf.poly_is_irreducible(factor)
                for _ in range(mult):
                    prod = prod * factor
            assert prod == f

    def test_seed_independence(self):
        f5 = gf.make_field(5, 1)
        rng = random.Random(9)
        for _ in range(25):
            ints = [rng.randrange(5) for _ in range(10)] + [1]
            f = gf.Polynomial.from_ints(f5, ints)
            results = {gf.poly_factor(f, seed=s) for s in (0, 1, 42)}
            assert len(results) == 1


class TestIntegers:
    def test_mult_order_examples(self):
        assert gf.mult_order(2, 7) == 3
        assert gf.mult_order(11, 1) == 1
        assert gf.mult_order(7, 3) == 1

    def test_mult_order_not_coprime(self):
        with pytest.raises(NotCoprime):
            gf.mult_order(6, 9)

    def test_factor_prime_power(self):
        assert gf.factor_prime_power(8) == (2, 3)
        assert gf.factor_prime_power(49) == (7, 2)
        assert gf.factor_prime_power(13) == (13, 1)
        for bad in (1, 6, 12, 100):
            with pytest.raises(NotAPrimePower):
                gf.factor_prime_power(bad)
