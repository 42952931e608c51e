import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from kerov import clt
from kerov.errors import DomainError
from kerov.partitions import partitions_of


@given(st.floats(min_value=-8, max_value=8, allow_nan=False))
def test_normal_cdf_against_mpmath(x):
    assert abs(clt.normal_cdf(x) - float(mpmath.ncdf(x))) <= 1e-12


def test_normal_cdf_array():
    xs = np.linspace(-8, 8, 41)
    ref = np.array([float(mpmath.ncdf(x)) for x in xs])
    assert np.max(np.abs(clt.normal_cdf(xs) - ref)) <= 1e-12


def test_ks_distance_single_point():
    assert clt.ks_distance([0.0]) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        clt.ks_distance([])


def test_ks_exact_two_point_law():
    law = {-1.0: Fraction(1, 2), 1.0: Fraction(1, 2)}
    assert clt.ks_exact(law) == pytest.approx(clt.normal_cdf(1.0) - 0.5)


def test_w_examples():
    # At alpha=1, W((n)) = sqrt(C(n,2)) and W is odd under transposition.
    assert clt.w_statistic((4,), 1) == pytest.approx(math.sqrt(6))
    for lam in partitions_of(6):
        from kerov.partitions import conjugate

        assert clt.w_statistic(conjugate(lam), 1) == pytest.approx(-clt.w_statistic(lam, 1))
    t, s = clt.w_exact((2, 1), 2)
    assert (t, s) == (Fraction(1), Fraction(6))


def test_w_normalisations():
    lam = (4, 2, 1)
    base = clt.w_statistic(lam, 1)
    assert clt.w_statistic(lam, 1, clt.SHIFTED_BINOMIAL) == pytest.approx(base * math.sqrt(15 / 21))
    assert clt.w_statistic(lam, 1, clt.LINEAR) == pytest.approx(base * math.sqrt(21 / 24.5))
    with pytest.raises(DomainError):
        clt.w_statistic(lam, 1, "other")
    with pytest.raises(DomainError):
        clt.w_statistic((1,), 1)


@pytest.mark.parametrize("alpha", [Fraction(1, 2), 1, 2])
def test_w_law_moments(alpha):
    law = clt.w_law(6, alpha)
    assert sum(law.values()) == 1
    assert sum(float(p) * w for w, p in law.items()) == pytest.approx(0, abs=1e-12)
    assert sum(float(p) * w * w for w, p in law.items()) == pytest.approx(1)


def test_n2_ks_is_exact_value():
    assert clt.ks_exact(clt.w_law(2, 1)) == pytest.approx(clt.normal_cdf(1.0) - 0.5)
    exp = clt.run_clt([2], 1, samples=40000, seed=0)
    assert abs(exp.results[2].ks - (clt.normal_cdf(1.0) - 0.5)) <= 2 / math.sqrt(40000)


def test_mc_matches_exact_law_small_n():
    exp = clt.run_clt([8], 2, samples=40000, seed=1)
    exact = clt.ks_exact(clt.w_law(8, 2))
    assert abs(exp.results[8].ks - exact) <= 3 / math.sqrt(40000)


def test_rate_fit_synthetic():
    data = {n: 3.0 * n**-0.5 for n in (50, 100, 200, 400)}
    s, a = clt.rate_fit(data)
    assert s == pytest.approx(0.5) and a == pytest.approx(3.0)
    with pytest.raises(DomainError):
        clt.rate_fit({10: 0.1})


def test_run_clt_validation_and_rows():
    with pytest.raises(DomainError):
        clt.run_clt([10], 1, samples=10)
    with pytest.raises(DomainError):
        clt.run_clt([1], 1, samples=1000)
    exp = clt.run_clt([10, 20], 1, samples=2000, seed=3)
    rows = exp.rows()
    assert [r["n"] for r in rows] == [10, 20]
    assert clt.summary(exp)["s_hat"] is not None


def test_l_exact_against_monte_carlo():
    n = 10
    exact = float(clt.l_exact(n, 1, 1))
    mc = clt.haeusler_grid([n], 1, paths=100, samples=40000, seed=2)[n].l_value
    assert mc == pytest.approx(exact, rel=0.05)


def test_n_term_is_certified():
    grid = clt.haeusler_grid([5, 30], Fraction(5, 3), paths=200, samples=2000, seed=0)
    for h in grid.values():
        assert h.certified and h.n_term == 0


def test_duality():
    assert clt.duality_check(12, 2, samples=20000, seed=0).ok
