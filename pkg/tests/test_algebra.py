"""The decomposition engine: center arithmetic, idempotents, components."""

import random

import pytest

from wedderburn import algebra as alg
from wedderburn import group as gr
from wedderburn.errors import NotSemisimple
from wedderburn.gf import make_field


def zero_element(group, fs):
    return alg.AlgebraElement(fs, tuple([fs.zero()] * group.order))


class TestSemisimplicity:
    def test_examples(self):
        assert alg.check_semisimple(gr.symmetric(3), 5)
        assert not alg.check_semisimple(gr.symmetric(3), 2)
        assert alg.check_semisimple(gr.cyclic(1), 2)

    def test_wedderburn_rejects(self):
        with pytest.raises(NotSemisimple):
            alg.wedderburn(gr.symmetric(3), 3, 1)


class TestCenterArithmetic:
    def test_identity_class_sum_is_identity(self):
        g = gr.dihedral(4)
        fs = make_field(3, 1)
        cb = alg.center_basis(g, fs)
        cst = alg.structure_constants(g, cb.classes)
        m = len(cb.classes)
        ident = [fs.zero()] * m
        ident[cb.classes.class_of[g.identity]] = fs.one()
        other = [fs.from_int(i % 3) for i in range(m)]
        assert alg.center_multiply(fs, ident, other, cst) == tuple(other)

    def test_c2_over_f3(self):
        g = gr.cyclic(2)
        fs = make_field(3, 1)
        cb = alg.center_basis(g, fs)
        cst = alg.structure_constants(g, cb.classes)
        gamma_g = [fs.zero(), fs.one()]
        out = alg.center_multiply(fs, gamma_g, gamma_g, cst)
        assert [c.to_int() for c in out] == [1, 0]  # g^2 = e

    def test_s3_transpositions_squared(self):
        g = gr.symmetric(3)
        fs = make_field(7, 1)
        cb = alg.center_basis(g, fs)
        cst = alg.structure_constants(g, cb.classes)
        sizes = [len(c) for c in cb.classes.classes]
        t_idx = sizes.index(3)
        e_idx = sizes.index(1)
        c_idx = sizes.index(2)
        coords = [fs.zero()] * 3
        coords[t_idx] = fs.one()
        out = alg.center_multiply(fs, coords, coords, cst)
        expected = [fs.zero()] * 3
        expected[e_idx] = fs.from_int(3)
        expected[c_idx] = fs.from_int(3)
        assert list(out) == expected
        # brute-force check in the full group algebra
        gamma_t = cb.class_sums[t_idx]
        brute = alg.algebra_mul(g, gamma_t, gamma_t)
        reference = alg.AlgebraElement(
            fs,
            tuple(
                fs.from_int(3)
                if x in cb.classes.classes[e_idx] + cb.classes.classes[c_idx]
                else fs.zero()
                for x in range(6)
            ),
        )
        assert brute == reference


class TestSplitCenter:
    def test_trivial_group(self):
        g = gr.cyclic(1)
        fs = make_field(5, 1)
        idems = alg.split_center(alg.center_basis(g, fs))
        assert len(idems) == 1
        assert idems[0] == alg.algebra_identity(g, fs)

    def test_c2_over_f7_frozen(self):
        g = gr.cyclic(2)
        fs = make_field(7, 1)
        idems = alg.split_center(alg.center_basis(g, fs))
        coords = [[c.to_int() for c in e.coeffs] for e in idems]
        # (1/2)(e - g) and (1/2)(e + g), with 1/2 = 4 mod 7
        assert coords == [[4, 3], [4, 4]]

    def test_c7_over_f2_block_dimensions(self):
        g = gr.cyclic(7)
        fs = make_field(2, 1)
        idems = alg.split_center(alg.center_basis(g, fs))
        dims = sorted(alg.component_params(e, g, fs).d for e in idems)
        assert dims == [1, 3, 3]

    @pytest.mark.parametrize("gname,p,k", [
        ("S3", 5, 1), ("C7", 2, 1), ("SL23", 7, 1), ("Q8", 3, 1), ("A4", 7, 1),
    ])
    def test_idempotent_suite_brute_force(self, gname, p, k):
        from wedderburn.catalog import resolve_group

        g = resolve_group(gname)
        fs = make_field(p, k)
        idems = alg.split_center(alg.center_basis(g, fs))
        total = zero_element(g, fs)
        for e in idems:
            total = total + e
        assert total == alg.algebra_identity(g, fs)
        for i, a in enumerate(idems):
            for j, b in enumerate(idems):
                prod = alg.algebra_mul(g, a, b)
                assert prod == (a if i == j else zero_element(g, fs))

    def test_seed_independence(self):
        g = gr.dihedral(6)
        fs = make_field(5, 1)
        cb = alg.center_basis(g, fs)
        results = {alg.split_center(cb, seed=s) for s in (0, 1, 42)}
        assert len(results) == 1


class TestComponentParams:
    def test_trivial_component(self):
        g = gr.symmetric(3)
        fs = make_field(5, 1)
        # averaging idempotent |G|^-1 * sum over the group
        inv6 = fs.from_int(6 % 5).inverse()
        e = alg.AlgebraElement(fs, tuple([inv6] * 6))
        assert alg.component_params(e, g, fs) == alg.SimpleComponent(1, 1)

    def test_c7_f2_degree3_block(self):
        g = gr.cyclic(7)
        fs = make_field(2, 1)
        idems = alg.split_center(alg.center_basis(g, fs))
        params = sorted(alg.component_params(e, g, fs) for e in idems)
        assert params == [
            alg.SimpleComponent(1, 1),
            alg.SimpleComponent(1, 3),
            alg.SimpleComponent(1, 3),
        ]

    def test_s3_f5_noncommutative_block(self):
        g = gr.symmetric(3)
        fs = make_field(5, 1)
        idems = alg.split_center(alg.center_basis(g, fs))
        params = sorted(alg.component_params(e, g, fs) for e in idems)
        assert params[-1] == alg.SimpleComponent(2, 1)


class TestWedderburn:
    def test_trivial_group(self):
        dec = alg.wedderburn(gr.cyclic(1), 11, 1)
        assert dec.components == (alg.SimpleComponent(1, 1),)

    def test_sl23_over_f7(self):
        dec = alg.wedderburn(gr.sl23(), 7, 1)
        assert dec.text() == "F_7^3 + M2(F_7)^3 + M3(F_7)"
        assert dec.counter() == {
            alg.SimpleComponent(1, 1): 3,
            alg.SimpleComponent(2, 1): 3,
            alg.SimpleComponent(3, 1): 1,
        }

    def test_sl23_over_f5(self):
        # Commutative part F_5 + F_25 is forced by the abelianization C3 with
        # ord_3(5) = 2; the remaining degrees {1, 1, 2} and dimension 21 force
        # n = 2, 3 on the d = 1 blocks and n = 2 on the d = 2 block.
        dec = alg.wedderburn(gr.sl23(), 5, 1)
        assert dec.counter() == {
            alg.SimpleComponent(1, 1): 1,
            alg.SimpleComponent(1, 2): 1,
            alg.SimpleComponent(2, 1): 1,
            alg.SimpleComponent(2, 2): 1,
            alg.SimpleComponent(3, 1): 1,
        }

    def test_c7_over_f2(self):
        dec = alg.wedderburn(gr.cyclic(7), 2, 1)
        assert dec.counter() == {
            alg.SimpleComponent(1, 1): 1,
            alg.SimpleComponent(1, 3): 2,
        }

    def test_text_rendering_extension_fields(self):
        dec = alg.wedderburn(gr.cyclic(7), 2, 1)
        assert dec.text() == "F_2 + F_{2^3}^2"

    def test_json_shape(self):
        dec = alg.wedderburn(gr.sl23(), 7, 1)
        assert dec.json_dict() == {
            "p": 7,
            "k": 1,
            "group": "SL(2,3)",
            "components": [
                {"n": 1, "d": 1, "mult": 3},
                {"n": 2, "d": 1, "mult": 3},
                {"n": 3, "d": 1, "mult": 1},
            ],
        }

    def test_seed_independence(self):
        for g, p, k in [(gr.sl23(), 7, 1), (gr.dihedral(9), 5, 1), (gr.cyclic(20), 3, 2)]:
            decs = {alg.wedderburn(g, p, k, seed=s) for s in (0, 1, 42)}
            assert len(decs) == 1

    def test_extension_base_field(self):
        dec = alg.wedderburn(gr.cyclic(7), 2, 3)  # 8 = 1 mod 7
        assert dec.counter() == {alg.SimpleComponent(1, 1): 7}

    @pytest.mark.parametrize("n,p", [(n, p) for n in range(1, 31) for p in (2, 3, 5, 7)
                                     if n % p != 0])
    def test_cyclic_oracle_small(self, n, p):
        from tests_support_cosets import cyclotomic_coset_sizes

        dec = alg.wedderburn(gr.cyclic(n), p, 1)
        assert all(c.n == 1 for c in dec.components)
        assert sorted(c.d for c in dec.components) == cyclotomic_coset_sizes(p, n)


class TestUnitGroupOrder:
    def test_gl1(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert alg.gl_order(1, q) == q - 1

    def test_gl2_f3_brute_force(self):
        count = 0
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        if (a * d - b * c) % 3 != 0:
                            count += 1
        assert count == 48
        assert alg.gl_order(2, 3) == 48

    def test_gl2_f2_brute_force(self):
        count = sum(
            1
            for a in range(2)
            for b in range(2)
            for c in range(2)
            for d in range(2)
            if (a * d - b * c) % 2 != 0
        )
        assert count == 6
        assert alg.gl_order(2, 2) == 6

    def test_c7_f2_unit_order(self):
        dec = alg.wedderburn(gr.cyclic(7), 2, 1)
        assert alg.unit_group_order(dec) == (2 - 1) * (8 - 1) * (8 - 1)

    def test_single_component_decomposition(self):
        dec = alg.Decomposition(3, 1, "test", (alg.SimpleComponent(2, 1),))
        assert alg.unit_group_order(dec) == 48
