"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. The order <= 60 sweep (criteria 3 and 4) is computed once by the
session fixture in conftest and shared.
"""

import itertools
import json
import math
import time

from wedderburn import algebra, gf, inverse
from wedderburn.catalog import load_catalog
from wedderburn.cli import main
from wedderburn.group import cyclic, sl23

from tests_support_cosets import cyclotomic_coset_sizes

SWEEP_BUDGET_SECONDS = 300.0


def test_criterion_1_direct_map_sl23(capsys):
    start = time.monotonic()
    code = main(["decompose", "--group", "SL23", "--q", "7"])
    elapsed = time.monotonic() - start
    out = capsys.readouterr().out
    assert code == 0
    assert "F_7^3 + M2(F_7)^3 + M3(F_7)" in out.splitlines()
    dec = algebra.wedderburn(sl23(), 7, 1)
    assert dec.counter() == {
        algebra.SimpleComponent(1, 1): 3,
        algebra.SimpleComponent(2, 1): 3,
        algebra.SimpleComponent(3, 1): 1,
    }
    assert elapsed < 1.0, f"decompose took {elapsed:.2f}s"
    print(f"criterion 1 PASS: SL(2,3) over F_7 decomposes to F_7^3 + M2(F_7)^3 + M3(F_7) ({elapsed:.2f}s)")


def test_criterion_2_completion_of_sl23_target():
    start = time.monotonic()
    spec = inverse.parse_ring_spec("M2(F7)^3 + M3(F7)")
    res = inverse.find_completion(spec, 24, 1)
    assert res.status == "completed"
    assert res.group == "SL(2,3)"
    assert res.k == 1 and res.decomposition.q == 7
    assert sorted(res.added) == [algebra.SimpleComponent(1, 1)] * 3

    # Exhaustive: no catalog group of smaller order yields containment at q = 7.
    for entry in load_catalog():
        if entry.order >= 24 or entry.order % 7 == 0:
            continue
        dec = algebra.wedderburn(entry.group(), 7, 1)
        assert not inverse.contains_target(dec, spec, 1), entry.name
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"completion search took {elapsed:.2f}s"
    print(f"criterion 2 PASS: completion is SL(2,3) with F_7^3 added, minimal in the catalog ({elapsed:.2f}s)")


def test_criterion_3_trivial_component_always_present(sweep):
    records, _ = sweep
    exceptions = [
        (r.group_name, r.q)
        for r in records
        if algebra.SimpleComponent(1, 1) not in r.decomposition.components
    ]
    assert exceptions == []
    print(
        f"criterion 3 PASS: all {len(records)} decompositions "
        "(order <= 60, q in {2,3,4,5,7,8,9,11,13}) contain the trivial component"
    )


def test_criterion_4_dual_path_suite(sweep):
    records, elapsed = sweep
    for r in records:
        dec = r.decomposition
        assert dec.j == r.orbit_count, (r.group_name, r.q)
        assert tuple(sorted(c.d for c in dec.components)) == r.predicted_degrees, (
            r.group_name,
            r.q,
        )
        commutative = {}
        for c in dec.components:
            if c.n == 1:
                commutative[c.d] = commutative.get(c.d, 0) + 1
        assert commutative == r.predicted_commutative, (r.group_name, r.q)
        assert dec.total_dimension() == r.order, (r.group_name, r.q)
    assert elapsed < SWEEP_BUDGET_SECONDS, f"sweep took {elapsed:.1f}s"
    print(
        f"criterion 4 PASS: dual-path checks agree on all {len(records)} pairs "
        f"(sweep {elapsed:.1f}s < {SWEEP_BUDGET_SECONDS:.0f}s)"
    )


def test_criterion_5_cyclic_oracle():
    checked = 0
    for n in range(1, 51):
        for q in (2, 3, 5, 7):
            if math.gcd(q, n) != 1:
                continue
            dec = algebra.wedderburn(cyclic(n), q, 1)
            assert all(c.n == 1 for c in dec.components), (n, q)
            assert sorted(c.d for c in dec.components) == cyclotomic_coset_sizes(q, n), (n, q)
            checked += 1
    print(f"criterion 5 PASS: cyclic decompositions equal coset sizes on {checked} cases")


def test_criterion_6_unit_group_brute_force():
    # GL_1 over every field of size <= 9: count invertible elements directly.
    for q in (2, 3, 4, 5, 7, 8, 9):
        p, k = gf.factor_prime_power(q)
        field = gf.make_field(p, k)
        brute = sum(1 for e in field.elements() if not e.is_zero())
        assert brute == q - 1
        dec = algebra.Decomposition(p, k, "unit-test", (algebra.SimpleComponent(1, 1),))
        assert algebra.unit_group_order(dec) == brute

    # GL_2 over the prime fields of sizes 2 and 3: count invertible matrices.
    for p, expected in ((2, 6), (3, 48)):
        brute = sum(
            1
            for a, b, c, d in itertools.product(range(p), repeat=4)
            if (a * d - b * c) % p != 0
        )
        assert brute == expected
        dec = algebra.Decomposition(p, 1, "unit-test", (algebra.SimpleComponent(2, 1),))
        assert algebra.unit_group_order(dec) == expected
    print("criterion 6 PASS: unit-group orders match exhaustive matrix counts")


def test_criterion_7_determinism_across_seeds(capsys, tmp_path):
    outputs = {}
    for seed in (0, 1, 42):
        dec_path = tmp_path / f"dec{seed}.json"
        comp_path = tmp_path / f"comp{seed}.json"
        assert main([
            "decompose", "--group", "SL23", "--q", "7",
            "--seed", str(seed), "--json", str(dec_path),
        ]) == 0
        assert main([
            "complete", "--spec", "M2(F7)^3 + M3(F7)",
            "--max-order", "24", "--max-k", "1",
            "--seed", str(seed), "--json", str(comp_path),
        ]) == 0
        outputs[seed] = (
            dec_path.read_bytes(),
            comp_path.read_bytes(),
            capsys.readouterr().out,
        )
    assert outputs[0] == outputs[1] == outputs[42]
    data = json.loads(outputs[0][0])
    assert data["group"] == "SL(2,3)"
    print("criterion 7 PASS: JSON reports are byte-identical for seeds 0, 1, 42")


def test_criterion_8_negative_evidence(capsys):
    code = main(["complete", "--spec", "M2(F2)", "--max-order", "50", "--max-k", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "status: not_found" in out
    assert "within bounds" in out
    print("criterion 8 PASS: unfruitful search reports not_found within bounds")
