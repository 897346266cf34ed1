"""Orbit classes, predicted degrees, and abelian group-algebra decompositions."""

import math

import pytest

from wedderburn import cyclo
from wedderburn import group as gr
from wedderburn.errors import NotAbelian, NotSemisimple
from wedderburn.gf import mult_order


def cyclotomic_cosets(q: int, n: int) -> list[tuple[int, ...]]:
    """Independent oracle: orbits of multiplication by q on Z/n."""
    seen = set()
    cosets = []
    for start in range(n):
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = (cur * q) % n
        cosets.append(tuple(sorted(orbit)))
    return cosets


class TestCyclotomicClasses:
    def test_c7_q2(self):
        classes = cyclo.cyclotomic_classes(gr.cyclic(7), 2, 2)
        assert sorted(c.size for c in classes) == [1, 3, 3]

    def test_s3_q5(self):
        classes = cyclo.cyclotomic_classes(gr.symmetric(3), 5, 5)
        assert [c.size for c in classes] == [1, 1, 1]

    def test_trivial_group(self):
        classes = cyclo.cyclotomic_classes(gr.cyclic(1), 4, 2)
        assert len(classes) == 1 and classes[0].size == 1

    def test_sl23_q7(self):
        classes = cyclo.cyclotomic_classes(gr.sl23(), 7, 7)
        assert cyclo.predicted_degree_multiset(classes) == (1,) * 7

    def test_not_semisimple(self):
        with pytest.raises(NotSemisimple):
            cyclo.cyclotomic_classes(gr.symmetric(3), 2, 2)

    def test_ordering_by_smallest_class(self):
        classes = cyclo.cyclotomic_classes(gr.cyclic(7), 2, 2)
        firsts = [c.member_classes[0] for c in classes]
        assert firsts == sorted(firsts)

    @pytest.mark.parametrize("n,q", [(7, 2), (15, 2), (9, 2), (11, 3), (21, 2), (13, 5)])
    def test_cyclic_orbits_match_cosets(self, n, q):
        classes = cyclo.cyclotomic_classes(gr.cyclic(n), q, q)
        sizes = sorted(c.size for c in classes)
        assert sizes == sorted(len(c) for c in cyclotomic_cosets(q, n))

    def test_identity_when_q_one_mod_exponent(self):
        g = gr.dihedral(6)  # exponent 12
        classes = cyclo.cyclotomic_classes(g, 13, 13)
        assert all(c.size == 1 for c in classes)

    def test_predicted_sums_to_class_count(self):
        for g, q, p in [(gr.sl23(), 5, 5), (gr.dihedral(7), 3, 3), (gr.cyclic(20), 3, 3)]:
            classes = cyclo.cyclotomic_classes(g, q, p)
            total = sum(cyclo.predicted_degree_multiset(classes))
            assert total == len(gr.conjugacy_classes(g))


class TestAbelianDecomposition:
    def test_trivial(self):
        dec = cyclo.abelian_decomposition(gr.cyclic(1), 2, 2)
        assert dec.components == ((1, 1),)

    def test_c7_q2(self):
        dec = cyclo.abelian_decomposition(gr.cyclic(7), 2, 2)
        assert dec.components == ((1, 1), (2, 3))

    def test_c3_q7(self):
        dec = cyclo.abelian_decomposition(gr.cyclic(3), 7, 7)
        assert dec.components == ((3, 1),)

    def test_not_abelian(self):
        with pytest.raises(NotAbelian):
            cyclo.abelian_decomposition(gr.symmetric(3), 5, 5)

    def test_not_semisimple(self):
        with pytest.raises(NotSemisimple):
            cyclo.abelian_decomposition(gr.cyclic(4), 2, 2)

    @pytest.mark.parametrize("q,p", [(2, 2), (4, 2), (3, 3), (9, 3), (7, 7)])
    def test_dimension_conservation(self, q, p, builtin_catalog):
        for entry in builtin_catalog:
            if entry.order > 31:
                continue
            g = entry.group()
            if not g.is_abelian() or g.order % p == 0:
                continue
            dec = cyclo.abelian_decomposition(g, q, p)
            assert dec.total_dimension() == g.order
            assert any(d == 1 for _, d in dec.components)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 15, 21, 33])
    def test_cyclic_degrees_match_coset_sizes(self, n):
        for q in (2, 4, 5, 8):
            if math.gcd(q, n) != 1:
                continue
            p = 2 if q in (2, 4, 8) else q
            dec = cyclo.abelian_decomposition(gr.cyclic(n), q, p)
            degrees = sorted(d for mult, d in dec.components for _ in range(mult))
            assert degrees == sorted(len(c) for c in cyclotomic_cosets(q, n))
            # degree of each component is the multiplicative order of q
            for _, d in dec.components:
                assert any(mult_order(q, t) == d for t in range(1, n + 1)
                           if math.gcd(t, q) == 1 and n % t == 0)
