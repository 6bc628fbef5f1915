import math
from fractions import Fraction

import numpy as np
import pytest

from numvar.arithmetic import (BudgetExceeded, DifferenceSet, additive_energy,
                               congruence_solution_count, difference_set,
                               divisibility_bound_check, divisor_lists,
                               energy_direct, energy_window, gcd_average,
                               gcd_sum, normalize_polynomial, rep_quadratic_divisor,
                               rep_table, sparse_u2_mass, tau_moment_sum,
                               tau_sieve)
from numvar.points import SequenceSpec, generate_terms

SQUARES = [k * k for k in range(1, 201)]
LINEAR = list(range(1, 201))


def test_rep_table_examples():
    table = rep_table(SQUARES, 1, 5)
    assert table.counts == {u: 1 for u in (3, 5, 7, 8, 9, 12, 15, 16, 21, 24)}
    assert table.pair_count == 10
    lin = rep_table(LINEAR, 1, 6)
    assert lin.counts == {1: 5, 2: 4, 3: 3, 4: 2, 5: 1}
    assert rep_table(SQUARES, 1, 1).counts == {}
    assert rep_table(SQUARES, 1, 1).pair_count == 0


def test_rep_table_validation_and_budget():
    with pytest.raises(ValueError):
        rep_table(SQUARES, 0, 5)
    with pytest.raises(ValueError):
        rep_table(SQUARES, 5, 3)
    with pytest.raises(BudgetExceeded, match="divisor"):
        rep_table(SQUARES, 1, 200, pair_budget=100)


def test_rep_table_merge_law():
    rng = np.random.default_rng(2)
    full = rep_table(SQUARES, 1, 100)
    for _ in range(100):
        k = int(rng.integers(1, 100))
        left = rep_table(SQUARES, 1, k)
        right = rep_table(SQUARES, k + 1, 100)
        merged = left.merge(right)
        assert merged.window == (1, 100)
        assert merged.counts == full.counts
        assert merged.pair_count == full.pair_count
    with pytest.raises(ValueError):
        rep_table(SQUARES, 1, 10).merge(rep_table(SQUARES, 12, 20))


def test_additive_energy_examples():
    assert additive_energy(LINEAR, 2) == 6
    assert additive_energy(LINEAR, 10) == 670
    # closed form for consecutive integers: N(2N^2 + 1)/3
    for n in (1, 5, 37):
        assert additive_energy(LINEAR, n) == n * (2 * n * n + 1) // 3
    with pytest.raises(BudgetExceeded):
        additive_energy(LINEAR, 100, pair_budget=50)


def test_energy_identity_with_rep_table():
    # for distinct terms, E(N) = N^2 + 2 sum Rep(u)^2
    for terms, n in ((SQUARES, 40), (LINEAR, 25)):
        table = rep_table(terms, 1, n)
        assert additive_energy(terms, n) == n * n + 2 * energy_window(table)


def test_energy_window_examples():
    assert energy_window(rep_table(SQUARES, 1, 5)) == 10
    assert energy_window(rep_table(SQUARES, 1, 1)) == 0
    assert energy_window(rep_table(LINEAR, 1, 4)) == 14


def test_energy_direct_matches_window():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n2 = int(rng.integers(2, 150))
        n1 = int(rng.integers(1, n2 + 1))
        expect = energy_window(rep_table(SQUARES, n1, n2))
        assert energy_direct(SQUARES, n1, n2) == expect
        # tiny budget forces the multi-bucket path
        assert energy_direct(SQUARES, n1, n2, mem_budget=256) == expect
    assert energy_direct(SQUARES, 1, 1) == 0
    with pytest.raises(OverflowError):
        energy_direct([0, 1 << 62], 1, 2)


def test_rep_quadratic_divisor_examples():
    p = (1, 0)  # x^2, coefficients (a, b) of a x^2 + b x
    assert rep_quadratic_divisor(p, 15, 10) == 2
    assert rep_quadratic_divisor(p, 2) == 0
    assert rep_quadratic_divisor(p, 24) == 2
    assert rep_quadratic_divisor(p, 24, 6) == 1  # drops 7^2 - 5^2
    with pytest.raises(ValueError):
        rep_quadratic_divisor((0, 1), 5)
    with pytest.raises(ValueError):
        rep_quadratic_divisor(p, 0)


def test_rep_quadratic_divisor_exhaustive():
    table = rep_table(SQUARES, 1, 200)
    for u in range(1, 10 ** 4 + 1):
        assert rep_quadratic_divisor((1, 0), u, 200) == table.counts.get(u, 0)


def test_rep_bounded_by_tau():
    lists = divisor_lists(10 ** 5)
    for u in range(1, 10 ** 5 + 1):
        r = rep_quadratic_divisor((1, 0), u, divisors=lists[u])
        assert r <= len(lists[u])


def test_tau_moment_examples():
    assert tau_moment_sum(10, 1) == 27
    assert tau_moment_sum(1, 1) == 1
    assert tau_moment_sum(12, 2) == 123
    tau = tau_sieve(1000)
    assert tau_moment_sum(1000, 1) == int(tau[1:].sum())
    assert tau_moment_sum(1000, 3) == int((tau[1:] ** 3).sum())
    with pytest.raises(ValueError):
        tau_moment_sum(0, 1)
    with pytest.raises(ValueError):
        tau_moment_sum(10, 0)
    with pytest.raises(BudgetExceeded):
        tau_moment_sum(10 ** 6, 1, mem_budget=1000)


def test_tau_moment_growth():
    # sum tau^2 grows like x log^3 x; the normalized ratio stays in a loose
    # band and moves slowly between decades
    r = []
    for x in (10 ** 5, 10 ** 6):
        r.append(tau_moment_sum(x, 2) / (x * math.log(x) ** 3))
    assert 0.01 < r[0] < 10 and 0.01 < r[1] < 10
    assert abs(r[1] - r[0]) < 0.5 * r[0]


def _table(counts):
    from numvar.arithmetic import RepTable
    return RepTable(window=(1, 2), counts=counts, pair_count=sum(counts.values()))


def test_gcd_sum_examples():
    assert gcd_sum(_table({1: 1, 2: 1}), "one_over_max") == pytest.approx(3.0)
    assert gcd_sum(_table({7: 3}), "squared") == pytest.approx(9.0)
    assert gcd_sum(_table({2: 1, 3: 1}), "half") == pytest.approx(2 + 2 / math.sqrt(6))
    assert gcd_sum(_table({}), "half") == 0.0
    with pytest.raises(ValueError):
        gcd_sum(_table({1: 1}), "cubed")


def brute_gcd_sum(counts, variant, threshold):
    total = 0.0
    for u1, r1 in counts.items():
        for u2, r2 in counts.items():
            g = math.gcd(u1, u2)
            if threshold is not None and (u1 // g) * (u2 // g) > threshold:
                continue
            if variant == "half":
                w = g / math.sqrt(u1 * u2)
            elif variant == "one_over_max":
                w = g / max(u1, u2)
            else:
                w = g * g / (u1 * u2)
            total += w * r1 * r2
    return total


def test_gcd_sum_strategies_agree_with_brute_force():
    rng = np.random.default_rng(6)
    for _ in range(15):
        k = int(rng.integers(1, 40))
        us = rng.choice(np.arange(1, 60), size=k, replace=False)
        counts = {int(u): int(rng.integers(1, 9)) for u in us}
        table = _table(counts)
        for variant in ("half", "one_over_max", "squared"):
            ref = brute_gcd_sum(counts, variant, None)
            assert gcd_sum(table, variant) == pytest.approx(ref, rel=1e-12)
            for t in (1, 6, 50, 4000):
                ref_t = brute_gcd_sum(counts, variant, t)
                dense = gcd_sum(table, variant, t, strategy="dense")
                classes = gcd_sum(table, variant, t, strategy="classes")
                assert dense == pytest.approx(ref_t, rel=1e-12)
                assert classes == pytest.approx(ref_t, rel=1e-12)


def test_gcd_sum_threshold_monotone():
    counts = {3: 2, 4: 1, 9: 1, 10: 3, 14: 1}
    table = _table(counts)
    prev = 0.0
    for t in (1, 2, 5, 12, 40, 200):
        cur = gcd_sum(table, "half", t)
        assert cur >= prev - 1e-12
        prev = cur
    # a threshold past every coprime product recovers the unfiltered sum
    assert gcd_sum(table, "half", 14 * 14) == pytest.approx(gcd_sum(table, "half"))


def test_gcd_sum_guards():
    with pytest.raises(ValueError):
        gcd_sum(_table({1: 1}), "half", strategy="classes")
    with pytest.raises(ValueError):
        gcd_sum(_table({1: 1}), "half", strategy="sparse")
    with pytest.raises(BudgetExceeded):
        gcd_sum(_table({u: 1 for u in range(1, 100)}), "half", cell_budget=10)
    with pytest.raises(OverflowError):
        gcd_sum(_table({1 << 32: 1}), "half", 1, strategy="dense")
    with pytest.raises(OverflowError):
        gcd_sum(_table({1 << 32: 1}), "half", 1 << 30, strategy="classes")
    assert gcd_sum(_table({5: 1}), "half", 0, strategy="classes") == 0.0


def test_gcd_average_examples():
    assert gcd_average(2) == pytest.approx(0.5)
    assert gcd_average(3) == pytest.approx(7 / 6)
    for x in (1, 10, 50):
        brute = sum(math.gcd(m, n) / n for n in range(1, x + 1) for m in range(1, n))
        assert gcd_average(x) == pytest.approx(brute, rel=1e-12)
    with pytest.raises(ValueError):
        gcd_average(0)
    with pytest.raises(ValueError):
        gcd_average(10 ** 7 + 1)


def test_difference_set_examples():
    d = difference_set((0, 0, 1), 3)
    assert d.values.tolist() == [-8, -5, -3, 3, 5, 8]
    assert len(d) == 6 and d.n == 3
    assert difference_set((0, 1), 3).values.tolist() == [-2, -1, 1, 2]
    assert difference_set((0, 0, 0, 1), 3).values.tolist() == [-26, -19, -7, 7, 19, 26]
    with pytest.raises(ValueError):
        difference_set((0, 1), 0)
    with pytest.raises(OverflowError):
        difference_set((0, 1 << 62), 2)
    with pytest.raises(BudgetExceeded):
        difference_set((0, 1), 100, pair_budget=10)


def test_divisibility_bound_check():
    d = difference_set((0, 0, 1), 3)
    hits, bound, ok = divisibility_bound_check(d, 2, 2, 3)
    assert hits == 2 and bound == 25.0 and ok
    hits, _, ok = divisibility_bound_check(d, 11, 2, 3)
    assert hits == 0 and ok
    with pytest.raises(ValueError):
        divisibility_bound_check(d, 1, 2, 3)


def test_normalize_polynomial():
    assert normalize_polynomial((0, 0, 2)) == (0, 0, 1)
    assert normalize_polynomial((5, 2, 4)) == (0, 1, 2)
    assert normalize_polynomial((3, 1)) == (0, 1)
    with pytest.raises(ValueError):
        normalize_polynomial((7,))


def test_congruence_solution_count():
    assert congruence_solution_count((0, 0, 1), 5) == 1
    assert congruence_solution_count((-1, 0, 1), 5) == 2
    assert congruence_solution_count((0, -1, 0, 1), 7) == 3
    with pytest.raises(ValueError):
        congruence_solution_count((5, 10), 5)
    with pytest.raises(ValueError):
        congruence_solution_count((0, 1), 6)


def test_sparse_u2_mass():
    mass, exponent = sparse_u2_mass(LINEAR, 10)
    assert mass == 284
    assert exponent == pytest.approx(math.log(284) / math.log(10))
    mass, exponent = sparse_u2_mass(LINEAR, 1)
    assert mass == 0 and math.isnan(exponent)
    cubes = generate_terms(SequenceSpec.poly((0, 0, 0, 1)), 50)
    mass, exponent = sparse_u2_mass(cubes, 50)
    table = rep_table(cubes, 1, 50)
    assert mass == sum(r * r for r in table.counts.values() if r >= 2)
    assert exponent < 2
