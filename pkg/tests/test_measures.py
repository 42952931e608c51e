from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from conftest import ALPHAS, alphas, partitions_up_to
from kerov.errors import DomainError
from kerov.measures import (
    as_alpha,
    c_poly,
    c_prime_poly,
    class_size,
    dim_alpha,
    jack_weight,
    plancherel_weight,
    z_stat,
)
from kerov.partitions import conjugate, hook_product, partitions_of, syt_count


def test_plancherel_421():
    assert plancherel_weight((4, 2, 1)) == Fraction(factorial(7), 144**2) == Fraction(35, 144)
    assert plancherel_weight((1,)) == 1


@pytest.mark.parametrize("n", range(0, 11))
def test_plancherel_normalised(n):
    assert sum(plancherel_weight(lam) for lam in partitions_of(n)) == 1


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", range(0, 11))
def test_jack_normalised(n, alpha):
    assert sum(jack_weight(lam, alpha) for lam in partitions_of(n)) == 1


def test_c_products_small():
    a = Fraction(7, 3)
    assert c_poly((2,), a) == a + 1
    assert c_poly((1,), a) == 1 and c_prime_poly((1,), a) == a
    assert c_poly((4, 2, 1), 1) == c_prime_poly((4, 2, 1), 1) == 144


def test_jack_weight_32_closed_form():
    a = Fraction(3, 7)
    expected = 60 * a**2 / ((2 * a + 2) * (3 * a + 1) * (a + 2) * (2 * a + 1) * (a + 1))
    assert jack_weight((3, 2), a) == expected
    assert jack_weight((3, 2), 1) == Fraction(5, 24) == plancherel_weight((3, 2))


@given(partitions_up_to(9), alphas)
def test_transpose_duality(lam, alpha):
    assert jack_weight(lam, alpha) == jack_weight(conjugate(lam), 1 / alpha)


@given(partitions_up_to(9))
def test_alpha_one_reductions(lam):
    assert c_poly(lam, 1) * c_prime_poly(lam, 1) == hook_product(lam) ** 2
    assert dim_alpha(lam, 1) == syt_count(lam)


def test_centralizers():
    n = 7
    assert z_stat((2,) + (1,) * (n - 2)) == 2 * factorial(n - 2)
    assert class_size((2,) + (1,) * (n - 2)) == 21
    assert class_size((1,) * n) == 1
    assert class_size((3,)) == 2
    for m in range(1, 9):
        assert sum(class_size(mu) for mu in partitions_of(m)) == factorial(m)


@pytest.mark.parametrize("bad", [0, -1, "x", "1/0", "-2/3"])
def test_alpha_validation(bad):
    with pytest.raises(DomainError):
        as_alpha(bad)
    with pytest.raises(DomainError):
        jack_weight((1,), bad)


def test_alpha_string():
    assert as_alpha("5/3") == Fraction(5, 3)
