from fractions import Fraction

import pytest
from hypothesis import given

from conftest import partitions_up_to
from kerov.characters import character_table, frobenius_check, frobenius_ratio, mn_character, orthogonality_check
from kerov.errors import DomainError, ResourceBoundError
from kerov.partitions import partitions_of, syt_count


def test_s3_table():
    tab = character_table(3)
    assert tab.classes == ((3,), (2, 1), (1, 1, 1))
    assert tab.row((2, 1)) == (-1, 0, 2)
    assert tab.row((3,)) == (1, 1, 1)
    assert tab.row((1, 1, 1)) == (1, -1, 1)


def test_s4_known_values():
    assert mn_character((3, 1), (2, 2)) == -1
    assert mn_character((2, 2), (3, 1)) == -1
    assert mn_character((2, 2), (2, 1, 1)) == 0
    assert mn_character((3, 1), (4,)) == -1


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    assert all(r.ok for r in orthogonality_check(n))


@pytest.mark.parametrize("n", range(2, 9))
def test_frobenius(n):
    assert frobenius_check(n).ok


@given(partitions_up_to(8, min_size=1))
def test_trivial_and_degree(lam):
    n = sum(lam)
    assert mn_character((n,), lam) == 1
    assert mn_character(lam, (1,) * n) == syt_count(lam)


def test_frobenius_examples():
    assert frobenius_ratio((5,)) == 1
    assert frobenius_ratio((1,) * 5) == -1
    assert frobenius_ratio((2, 1)) == 0
    with pytest.raises(DomainError):
        frobenius_ratio((1,))


def test_sign_character_twist():
    from kerov.partitions import conjugate

    for mu in partitions_of(6):
        sign = (-1) ** (6 - len(mu))
        for lam in partitions_of(6):
            assert mn_character(conjugate(lam), mu) == sign * mn_character(lam, mu)


def test_bounds():
    with pytest.raises(ResourceBoundError):
        character_table(11)
    with pytest.raises(DomainError):
        mn_character((2,), (1,))
