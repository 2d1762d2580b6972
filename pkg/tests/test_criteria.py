import itertools
import random

import numpy as np
import pytest

from sparkframe._parallel import BudgetExceeded
from sparkframe.criteria import (
    consecutive_minor_check,
    cyclic_row_intervals,
    dft_submatrix_full_spark,
    evans_all_minors_check,
    tight_columns_check,
    uniform_distribution_check,
)
from sparkframe.exactalg import Cyclotomic, CycPolynomial, ExactMatrix
from sparkframe.framecore import GeneratingVector, full_spark_exact, frame_bounds, is_tight, orbit_frame
from sparkframe.genfamily import ExponentFamily, family_matrix
from sparkframe.groups import SemidirectGroup, induced_rep

zeta = Cyclotomic.zeta


def m5():
    return induced_rep(SemidirectGroup.of(5), 1).modulation_matrix()


def test_cyclic_intervals_include_wraparound():
    assert (0, 3) in cyclic_row_intervals(4, 2)
    assert len(cyclic_row_intervals(4, 3)) == 4
    assert cyclic_row_intervals(4, 4) == [(0, 1, 2, 3)]


def test_consecutive_examples():
    res = consecutive_minor_check(m5())
    assert res and res.minors_checked == 4 * (5 + 10 + 10) + 5
    z6 = ExactMatrix([[zeta(6, k) for k in range(6)], [zeta(6, 5 * k) for k in range(6)]], 6)
    res = consecutive_minor_check(z6)
    assert not res and res.witness == ((0, 1), (0, 3))
    zero = ExactMatrix([[1, 0], [1, 1]])
    res = consecutive_minor_check(zero)
    assert not res and len(res.witness[0]) == 1


def test_consecutive_budget():
    with pytest.raises(BudgetExceeded):
        consecutive_minor_check(m5(), budget=10)


def test_evans_examples():
    assert evans_all_minors_check(2, [0], [0, 1]).minors_checked == 3
    r5 = evans_all_minors_check(5, [1, 2, 3, 4], range(5))
    assert r5 and r5.minors_checked == 126
    with pytest.raises(ValueError):
        evans_all_minors_check(6, [1], [0])
    with pytest.raises(ValueError):
        evans_all_minors_check(5, [1, 6], [0])


def test_uniform_examples():
    assert uniform_distribution_check(range(6), 6)
    assert not uniform_distribution_check({1, 5}, 6)
    assert uniform_distribution_check({0, 1}, 4)


def _brute_uniform(s, n):
    # independent oracle: count coset sizes for every divisor by direct listing
    s = set(s)
    for d in range(1, n + 1):
        if n % d:
            continue
        sizes = [len([x for x in s if (x - r) % d == 0]) for r in range(d)]
        if max(sizes) - min(sizes) > 1:
            return False
    return True


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_uniform_against_oracle(n):
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            assert uniform_distribution_check(s, n) == _brute_uniform(s, n)


def test_dft_examples():
    assert dft_submatrix_full_spark({0}, 7)
    assert not dft_submatrix_full_spark({1, 5}, 6)
    assert bool(dft_submatrix_full_spark({0, 1, 2, 5}, 8)) == uniform_distribution_check({0, 1, 2, 5}, 8)


@pytest.mark.parametrize("n", [4, 6])
def test_dft_against_numeric(n):
    f = np.exp(2j * np.pi * np.outer(range(n), range(n)) / n)
    for k in range(1, n + 1):
        for s in itertools.combinations(range(n), k):
            numeric = all(abs(np.linalg.det(f[np.ix_(s, c)])) > 1e-9
                          for c in itertools.combinations(range(n), k))
            assert bool(dft_submatrix_full_spark(s, n)) == numeric


@pytest.mark.parametrize("n", [4, 8])
def test_uniform_equivalence_prime_power_sample(n):
    rng = random.Random(n)
    subsets = [s for k in range(n + 1) for s in itertools.combinations(range(n), k)]
    for s in rng.sample(subsets, min(60, len(subsets))):
        assert bool(dft_submatrix_full_spark(s, n)) == uniform_distribution_check(s, n)


def test_acm_forward_n6():
    for k in range(7):
        for s in itertools.combinations(range(6), k):
            if dft_submatrix_full_spark(s, 6):
                assert uniform_distribution_check(s, 6)


def test_tight_columns_examples():
    assert tight_columns_check(ExactMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert tight_columns_check(m5())
    f = ExponentFamily((1, 2, 3, 4), range(7))
    grid = f.exponent_grid()
    at_two = ExactMatrix([[2 ** e for e in row] for row in grid])
    assert not tight_columns_check(at_two)
    with pytest.raises(ValueError):
        tight_columns_check(family_matrix(f))


@pytest.mark.parametrize("n,h", [(5, None), (7, [1, 2, 4]), (9, [1, 8]), (6, [1, 5])])
def test_tight_columns_implies_tight_orbits(n, h):
    rep = induced_rep(SemidirectGroup.of(n, h), 1)
    assert tight_columns_check(rep.modulation_matrix())
    for seed in range(5):
        assert is_tight(orbit_frame(rep, GeneratingVector.random(seed), "numeric"), 1e-9)


@pytest.mark.parametrize("n,h", [(5, None), (9, [1, 8]), (7, [1, 6]), (6, [1, 5]), (8, [1, 3])])
def test_consecutive_implies_full_spark(n, h):
    rep = induced_rep(SemidirectGroup.of(n, h), 1)
    if consecutive_minor_check(rep.modulation_matrix()):
        frame = orbit_frame(rep, GeneratingVector.monomial_squares(rep.dim))
        assert full_spark_exact(frame, threads=1).full_spark
