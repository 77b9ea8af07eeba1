from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from etrinb.errors import PreconditionError, ValidationError
from etrinb.fixtures import HALF, TWO_PROFILE_MINIMAL
from etrinb.relations import (
    FiniteRelation,
    asymmetric_part,
    dominance_relation,
    ferrers_violation,
    is_homogeneous_nested_chain,
    is_semiorder,
    is_strict_semiorder,
    maximal_elements,
    minimal_elements,
    semitransitivity_violation,
    strict_threshold_relation,
    symmetric_part,
    threshold_relation,
    trace_weak_order,
    transitivity_violation,
    weak_order_classes,
    weak_order_from_classes,
)
from etrinb.scales import Scale

F = Fraction
HALVES = Scale.from_range("g", 0, 10, HALF).levels
INTS = tuple(F(k) for k in range(11))


def test_asymmetric_part_of_full_relation_is_empty():
    assert not asymmetric_part(FiniteRelation.full("ab")).matrix.any()


def test_asymmetric_part_definition():
    t = FiniteRelation.from_pairs("ab", [("a", "a"), ("b", "b"), ("a", "b")])
    assert set(asymmetric_part(t).pairs()) == {("a", "b")}
    assert set(symmetric_part(t).pairs()) == {("a", "a"), ("b", "b")}


def test_table_alternatives_are_pairwise_incomparable():
    d = dominance_relation(TWO_PROFILE_MINIMAL)
    off = asymmetric_part(d).matrix
    assert not off.any()
    assert not (d.matrix & ~np.eye(12, dtype=bool)).any()


def test_threshold_relation_is_semiorder():
    assert is_semiorder(threshold_relation(HALVES, 1))


def test_equality_is_semiorder_only_on_a_singleton():
    assert is_semiorder(FiniteRelation.identity("a"))
    # a = a and b = b with neither a T b nor b T a breaks Ferrers
    v = is_semiorder(FiniteRelation.identity("ab"))
    assert not v and set(v.witness) == {"a", "b"}


def test_two_cycle_with_isolated_point_is_not_semiorder():
    t = FiniteRelation.from_pairs("abc", [("a", "b"), ("b", "a"), ("a", "a"), ("b", "b"), ("c", "c")])
    v = is_semiorder(t)
    assert not v
    x, y, z, w = v.witness
    m = t.matrix
    pos = t.position
    assert m[pos(x), pos(y)] and m[pos(z), pos(w)]
    assert not m[pos(x), pos(w)] and not m[pos(z), pos(y)]


def test_strict_semiorder_examples():
    assert is_strict_semiorder(strict_threshold_relation(HALVES, 3))
    assert is_strict_semiorder(FiniteRelation.empty("abc"))
    v = is_strict_semiorder(FiniteRelation("ab", np.eye(2, dtype=bool)))
    assert not v and v.reason == "not irreflexive"


def test_trace_of_threshold_semiorder_is_natural_order():
    w = trace_weak_order(threshold_relation(INTS, 1))
    expected = np.array([[a >= b for b in INTS] for a in INTS])
    assert np.array_equal(w.matrix, expected)


def test_trace_of_symmetric_input_is_full():
    assert trace_weak_order(FiniteRelation.full("ab")).matrix.all()
    with pytest.raises(PreconditionError):
        trace_weak_order(FiniteRelation.identity("ab"))


def test_trace_of_semiorder_equals_trace_of_asymmetric_part():
    for q in (0, 1, 2, 3):
        s = threshold_relation(HALVES, q)
        t = asymmetric_part(s)
        assert np.array_equal(trace_weak_order(s).matrix, trace_weak_order(t).matrix)


def test_trace_refuses_non_ferrers():
    t = FiniteRelation.from_pairs("abcd", [("a", "b"), ("c", "d")])
    with pytest.raises(PreconditionError):
        trace_weak_order(t)


def test_nested_chain_examples():
    s1 = threshold_relation(HALVES, 1)
    s3 = threshold_relation(HALVES, 3)
    ok = is_homogeneous_nested_chain(s1, s3)
    assert ok and ok.weak_order.is_weak_order()
    assert not is_homogeneous_nested_chain(s3, s1)
    assert is_homogeneous_nested_chain(s1, FiniteRelation.full(HALVES))


def test_minimal_elements_examples():
    pts = [(7, 6, 2), (7, 6, 3), (8, 8, 8)]
    assert minimal_elements(dominance_relation(pts), pts) == [(7, 6, 2)]
    assert maximal_elements(dominance_relation(pts), pts) == [(8, 8, 8)]
    assert minimal_elements(dominance_relation(pts), [(8, 8, 8)]) == [(8, 8, 8)]
    with pytest.raises(ValidationError):
        minimal_elements(dominance_relation(pts), [])


def test_minimal_elements_requires_partial_order():
    t = FiniteRelation.full("ab")
    with pytest.raises(PreconditionError):
        minimal_elements(t, ["a"])


def test_weak_order_classes_round_trip():
    w = weak_order_from_classes("abcde", [["c"], ["a", "e"], ["b", "d"]])
    assert w.is_weak_order()
    assert weak_order_classes(w) == [["c"], ["a", "e"], ["b", "d"]]
    with pytest.raises(ValidationError):
        weak_order_from_classes("abc", [["a"], ["b"]])


def test_transitivity_witness():
    t = FiniteRelation.from_pairs("abc", [("a", "b"), ("b", "c")])
    v = transitivity_violation(t)
    assert not v and v.witness == ("a", "b", "c")


# property tests on random relations: the vectorised checks agree with
# brute force over all triples and quadruples

relations = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.booleans(), min_size=k * k, max_size=k * k).map(
        lambda bits: FiniteRelation(range(k), np.array(bits).reshape(k, k))
    )
)


def _brute_ferrers(t):
    c, m = t.carrier, t.matrix
    return all(m[x, w] or m[z, y] for x in c for y in c for z in c for w in c if m[x, y] and m[z, w])


def _brute_semitransitive(t):
    c, m = t.carrier, t.matrix
    return all(m[x, w] or m[w, z] for x in c for y in c for z in c for w in c if m[x, y] and m[y, z])


def _brute_transitive(t):
    c, m = t.carrier, t.matrix
    return all(m[x, z] for x in c for y in c for z in c if m[x, y] and m[y, z])


@given(relations)
def test_checks_agree_with_brute_force(t):
    assert bool(ferrers_violation(t)) == _brute_ferrers(t)
    assert bool(semitransitivity_violation(t)) == _brute_semitransitive(t)
    assert bool(transitivity_violation(t)) == _brute_transitive(t)


@given(relations)
def test_asymmetric_and_symmetric_parts_partition(t):
    a, s = asymmetric_part(t).matrix, symmetric_part(t).matrix
    assert not (a & s).any()
    assert np.array_equal(a | s, t.matrix)
    assert not (a & a.T).any()


@given(st.lists(st.fractions(min_value=-5, max_value=5), min_size=1, max_size=8, unique=True),
       st.fractions(min_value=0, max_value=3))
def test_threshold_semiorder_trace_is_complete(levels, q):
    levels = sorted(levels)
    s = threshold_relation(levels, q)
    assert is_semiorder(s)
    w = trace_weak_order(s)
    assert w.is_weak_order()
    # the trace refines S: w-better levels relate to at least as much
    m = s.matrix
    for a in range(len(levels)):
        for b in range(len(levels)):
            if w.matrix[a, b]:
                assert (m[a] >= m[b]).all()
