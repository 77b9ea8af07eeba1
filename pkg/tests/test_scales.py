from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from etrinb.errors import DimensionError, ResourceCapError, SymbolicScaleError, ValidationError
from etrinb.fixtures import HALF, grid_space, sum_rule_space
from etrinb.scales import (
    ProductSpace,
    Scale,
    dominates,
    enumerate_space,
    format_rational,
    parse_rational,
)

F = Fraction


def test_dominates_reflexive():
    space = grid_space(HALF)
    assert dominates((8, 7, 5), (8, 7, 5), space)


def test_dominates_coordinatewise():
    space = grid_space(HALF)
    assert dominates((7, 6, 2), (7, 6, F(3, 2)), space)
    assert not dominates((7, 6, F(3, 2)), (7, 6, 2), space)


def test_dominates_incomparable():
    space = grid_space(HALF)
    assert not dominates((7, 4, 4), (5, 6, 4), space)
    assert not dominates((5, 6, 4), (7, 4, 4), space)


def test_dominates_rejects_foreign_level():
    with pytest.raises(DimensionError):
        dominates((7, 6, F(1, 3)), (7, 6, 2), grid_space(HALF))


def test_enumerate_sizes():
    assert sum(1 for _ in sum_rule_space().enumerate()) == 125
    assert sum(1 for _ in enumerate_space(grid_space(HALF))) == 9261
    tiny = ProductSpace((Scale.numeric("a", [0]), Scale.numeric("b", [3])))
    assert list(tiny.enumerate()) == [(0, 3)]


def test_enumerate_cap(monkeypatch):
    space = grid_space(HALF)
    with pytest.raises(ResourceCapError):
        space.enumerate(cap=100)
    monkeypatch.setenv("ETRI_ENUM_CAP", "1000")
    with pytest.raises(ResourceCapError):
        space.enumerate()


def test_enumerate_is_lexicographic_over_indices():
    space = ProductSpace.uniform(2, [0, 5, 9])
    idx = [space.index_of(x) for x in space.enumerate()]
    assert idx == sorted(idx)
    assert len(set(idx)) == 9


def test_parse_rational_exact():
    assert parse_rational("6.5") == F(13, 2)
    assert parse_rational("13/2") == F(13, 2)
    assert parse_rational(3) == 3
    with pytest.raises(ValidationError):
        parse_rational(0.1)
    with pytest.raises(ValidationError):
        parse_rational("abc")
    with pytest.raises(ValidationError):
        parse_rational(True)


@given(st.fractions())
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_prefers_decimals():
    assert format_rational(F(13, 2)) == "6.5"
    assert format_rational(F(-1, 20)) == "-0.05"
    assert format_rational(F(1, 3)) == "1/3"
    assert format_rational(F(7)) == "7"


def test_scale_must_increase():
    with pytest.raises(ValidationError):
        Scale.numeric("g", [0, 2, 1])
    with pytest.raises(ValidationError):
        Scale.numeric("g", [])


def test_from_range_includes_stop():
    s = Scale.from_range("g", 0, 10, HALF)
    assert len(s) == 21
    assert s.bottom == 0 and s.top == 10


def test_symbolic_scale_refuses_numeric_use():
    s = Scale.symbols("g", ["bad", "fair", "good"])
    assert s.index("fair") == 1
    space = ProductSpace((s,))
    with pytest.raises(SymbolicScaleError):
        space.require_numeric()


def test_validate_dimension():
    space = ProductSpace.uniform(3, [0, 1])
    with pytest.raises(DimensionError):
        space.validate((0, 1))
    assert (0, 1, 1) in space
    assert (0, 2, 1) not in space


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_dominance_is_a_partial_order(a, b, c):
    space = ProductSpace.uniform(3, [0, 1, 2, 3])
    x, y, z = (tuple(F(v) for v in t) for t in (a, b, c))
    assert dominates(x, x, space)
    if dominates(x, y, space) and dominates(y, x, space):
        assert x == y
    if dominates(x, y, space) and dominates(y, z, space):
        assert dominates(x, z, space)
