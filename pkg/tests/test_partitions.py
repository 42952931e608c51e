from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions_up_to
from kerov.errors import DomainError
from kerov.partitions import (
    GrowthPath,
    add_box,
    addable_corners,
    arm,
    as_partition,
    boxes,
    conjugate,
    content,
    covers,
    dominates,
    format_partition,
    hook_length,
    leg,
    n_stat,
    parse_partition,
    partitions_of,
    remove_ones,
    removable_corners,
    syt_count,
    syt_enumerate,
)


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_hook_lengths_of_421():
    lam = (4, 2, 1)
    assert [hook_length(lam, x) for x in boxes(lam)] == [6, 4, 2, 1, 3, 1, 1]
    assert arm(lam, (1, 1)) == 3 and leg(lam, (1, 1)) == 2


def test_hook_length_outside_diagram():
    with pytest.raises(DomainError):
        hook_length((2, 1), (2, 2))


@pytest.mark.parametrize("text", ["4,2,1", "-", "1"])
def test_format_round_trip(text):
    assert format_partition(parse_partition(text)) == text


@pytest.mark.parametrize("bad", ["1,2", "a", "0,-1", "2,,1"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        parse_partition(bad)


def test_as_partition_drops_trailing_zeros():
    assert as_partition([3, 1, 0, 0]) == (3, 1)


@given(partitions_up_to(12))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions_up_to(12))
def test_n_stat_counts_boxes_above(lam):
    assert n_stat(lam) == sum(r - 1 for r, _ in boxes(lam))
    assert sum(content(x) for x in boxes(lam)) == n_stat(conjugate(lam)) - n_stat(lam)


@given(partitions_up_to(10))
def test_corners_interlace(lam):
    add, rem = addable_corners(lam), removable_corners(lam)
    assert len(add) == len(rem) + 1
    for x in add:
        big = add_box(lam, x)
        assert covers(big, lam) == x


@given(partitions_up_to(9, min_size=1))
def test_hook_formula_matches_enumeration(lam):
    assert syt_count(lam) == sum(1 for _ in syt_enumerate(lam))


def test_sum_of_squared_dimensions():
    for n in range(1, 9):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2)) and not dominates((2, 2, 2), (3, 1, 1, 1))


def test_remove_ones():
    assert remove_ones((2, 1, 1), 2) == (2,)
    assert remove_ones((2, 1), 2) is None


def test_growth_path_round_trip():
    path = GrowthPath.from_boxes([(1, 1), (1, 2), (2, 1), (1, 3)])
    assert path.shape == (3, 1)
    assert path.steps == ((1,), (2,), (2, 1), (3, 1))
    assert path.tableau() == [[1, 2, 4], [3]]
    assert GrowthPath.from_boxes(path.added_boxes()) == path


def test_growth_path_rejects_jumps():
    with pytest.raises(DomainError):
        GrowthPath(((), (2,)))
    with pytest.raises(DomainError):
        GrowthPath(((1,),))


@given(st.integers(1, 7))
def test_every_tableau_is_distinct(n):
    for lam in partitions_of(n):
        tabs = [tuple(map(tuple, p.tableau())) for p in syt_enumerate(lam)]
        assert len(tabs) == len(set(tabs))


def test_hook_formula_exhaustive_to_twelve():
    for n in range(0, 13):
        for lam in partitions_of(n):
            assert syt_count(lam) == sum(1 for _ in syt_enumerate(lam))
