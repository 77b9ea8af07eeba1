import itertools

import pytest
from hypothesis import given, strategies as st

from etrinb.combinatorics import (
    ChainProfile,
    brute_force_max_antichain,
    count_monotone_functions,
    count_monotone_partitions,
    dilworth_width,
    exhaustive_max_antichain,
    is_antichain,
    max_antichain_size,
    monotone_functions,
    rank_level_widths,
    sperner_number,
)
from etrinb.errors import ResourceCapError, ValidationError
from etrinb.fixtures import binary_space
from etrinb.models import CoalitionFamily
from etrinb.scales import ProductSpace

from fractions import Fraction


def test_max_antichain_examples():
    assert max_antichain_size((1,)) == 1
    assert max_antichain_size((3, 3, 3)) == 7
    assert max_antichain_size((2, 2)) == 2
    assert max_antichain_size(ChainProfile((2, 2, 2))) == 3
    assert max_antichain_size((5,)) == 1
    assert max_antichain_size((21, 21, 21)) == 331


def test_sperner_examples():
    assert sperner_number(4) == 6
    assert sperner_number(1) == 1
    assert sperner_number(5) == 10
    with pytest.raises(ValidationError):
        sperner_number(0)


def test_sperner_counts_minimal_majority_coalitions():
    fam = CoalitionFamily.from_weights((Fraction(1, 5),) * 5, Fraction(1, 2))
    assert len(fam.minimal()) == sperner_number(5)


def test_brute_force_examples():
    assert brute_force_max_antichain((2, 2)) == 2
    assert brute_force_max_antichain((2, 2, 2)) == 3
    assert brute_force_max_antichain((3, 3)) == 3
    assert brute_force_max_antichain((1, 1, 1)) == 1
    assert brute_force_max_antichain(ProductSpace.uniform(2, [0, 1, 2])) == 3


def test_exhaustive_search_agrees_on_tiny_grids():
    for shape in [(1,), (2, 2), (2, 3), (3, 3), (2, 2, 2), (4, 4), (2, 2, 3), (1, 3, 4)]:
        assert exhaustive_max_antichain(shape) == dilworth_width(shape) == max_antichain_size(shape)


def test_caps():
    with pytest.raises(ResourceCapError):
        exhaustive_max_antichain((5, 5))
    with pytest.raises(ResourceCapError):
        dilworth_width((21, 21, 21))
    with pytest.raises(ResourceCapError):
        rank_level_widths((200, 200, 200))
    with pytest.raises(ResourceCapError):
        list(monotone_functions(6))


def test_chain_profile_validation():
    with pytest.raises(ValidationError):
        ChainProfile(())
    with pytest.raises(ValidationError):
        ChainProfile((2, 0))
    assert ChainProfile((2, 3)).h == 3


def test_monotone_partition_examples():
    assert count_monotone_partitions(2) == 4
    assert count_monotone_partitions(3) == 18
    assert count_monotone_partitions(1) == 1
    assert count_monotone_partitions(binary_space(3)) == 18
    with pytest.raises(ValidationError):
        count_monotone_partitions(ProductSpace.uniform(2, [0, 1, 2]))


def test_dedekind_numbers():
    assert [count_monotone_functions(n) for n in range(6)] == [2, 3, 6, 20, 168, 7581]


def _brute_monotone(n):
    pts = list(range(1 << n))
    count = 0
    for bits in itertools.product([False, True], repeat=len(pts)):
        if all(not bits[a] or bits[b] for a in pts for b in pts if a & b == a):
            count += 1
    return count


def test_monotone_enumeration_against_brute_force():
    for n in range(4):
        assert count_monotone_functions(n) == _brute_monotone(n)
    for table in monotone_functions(3):
        assert all(not table[a] or table[a | 1 << i] for a in range(8) for i in range(3))


@given(st.lists(st.integers(1, 5), min_size=1, max_size=3))
def test_closed_form_matches_rank_levels(m):
    assert max_antichain_size(m) == max(rank_level_widths(m))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_closed_form_matches_matching(m):
    assert max_antichain_size(m) == dilworth_width(m)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_width_is_symmetric_in_chain_order(m):
    assert max_antichain_size(m) == max_antichain_size(sorted(m))


def test_middle_rank_is_an_antichain():
    pts = [p for p in itertools.product(range(3), repeat=3) if sum(p) == 3]
    assert is_antichain(pts)
    assert len(pts) == max_antichain_size((3, 3, 3))
    assert not is_antichain([(0, 0), (1, 1)])
