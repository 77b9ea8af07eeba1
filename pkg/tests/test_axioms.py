from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from etrinb.axioms import (
    TwofoldPartition,
    check_linearity,
    check_respects_dominance_partition,
    induced_structure,
    induced_weak_order,
    is_influential,
    quotient,
    violates_linearity,
)
from etrinb.errors import DegeneratePartitionError, ValidationError
from etrinb.fixtures import (
    SUM_RULE_LEVELS,
    bits,
    level_class,
    sum_rule_partition,
    sum_six_partition,
    sum_six_space,
    top_only_partition,
    two_pairs_partition,
    two_profile_electre3_model,
    xor_partition,
)
from etrinb.models import PC, SOME, partition_from_model
from etrinb.relations import weak_order_classes
from etrinb.scales import ProductSpace

from .strategies import arbitrary_partitions, is_linear_brute, linear_partitions

F = Fraction


@pytest.fixture(scope="module")
def worked():
    return partition_from_model(two_profile_electre3_model(rule=SOME)).as_partition()


def test_partition_needs_both_classes():
    space = ProductSpace.uniform(2, [0, 1])
    with pytest.raises(DegeneratePartitionError):
        TwofoldPartition(space, np.ones((2, 2), dtype=bool))
    with pytest.raises(ValidationError):
        TwofoldPartition(space, np.ones((2, 3), dtype=bool))


def test_induced_order_sum_rule_is_strict_chain():
    rel = induced_weak_order(sum_rule_partition(), 0)
    assert rel.is_linear_order()
    assert weak_order_classes(rel) == [[F(v)] for v in SUM_RULE_LEVELS]


def test_induced_order_worked_example_has_seven_classes(worked):
    classes = weak_order_classes(induced_weak_order(worked, 0))
    assert len(classes) == 7
    lows = [c[0] for c in classes]
    assert lows == [0, 2, F("3.5"), 4, 5, F("6.5"), 7]


def test_induced_order_two_clause_rule():
    p = partition_from_model(two_profile_electre3_model(rule=PC)).as_partition()
    assert len(weak_order_classes(induced_weak_order(p, 0))) == 9


def test_ignored_attribute_is_one_class():
    space = ProductSpace.uniform(3, [0, 1, 2])
    p = TwofoldPartition.from_predicate(space, lambda x: x[0] + x[1] >= 3)
    rel = induced_weak_order(p, 2)
    assert rel.matrix.all()
    assert not is_influential(p, 2)
    assert induced_structure(p).influential == (True, True, False)


def test_influential_witness():
    p = sum_rule_partition()
    v = is_influential(p, 0)
    assert v
    x, y = v.witness
    assert p.accepts(x) and not p.accepts(y)
    assert x[1:] == y[1:]
    assert p.accepts((39, 37, 30)) and not p.accepts((37, 37, 30))


def test_every_attribute_influential_on_sum_six():
    p = sum_six_partition()
    assert all(is_influential(p, i) for i in range(4))
    assert p.accepts((2, 0, 2, 2)) and not p.accepts((1, 0, 2, 2))


def test_linearity_examples():
    assert check_linearity(sum_rule_partition()).ok
    assert check_linearity(two_pairs_partition()).ok
    report = check_linearity(xor_partition())
    assert report.failing() == [0, 1]
    p = xor_partition()
    for i in (0, 1):
        assert violates_linearity(p, i, report.verdicts[i].witness)


def test_dominance_examples(worked):
    assert check_respects_dominance_partition(worked)
    v = check_respects_dominance_partition(xor_partition())
    assert not v
    x, y = v.witness
    assert (x, y) in {(bits("11"), bits("10")), (bits("11"), bits("01"))}
    assert check_respects_dominance_partition(top_only_partition(ProductSpace.uniform(3, [0, 1, 2])))


def test_dominance_with_supplied_orders():
    space = ProductSpace.uniform(2, [0, 1, 2])
    p = TwofoldPartition.from_predicate(space, lambda x: x[0] == 0 and x[1] >= 1)
    assert not check_respects_dominance_partition(p)
    assert check_respects_dominance_partition(p, orders=[[2, 1, 0], None])
    with pytest.raises(ValidationError):
        check_respects_dominance_partition(p, orders=[[2, 1], None])


def test_quotient_examples(worked):
    q = quotient(worked)
    assert q.partition.space.shape == (7, 7, 7)
    assert all(q.ordered)
    q1 = quotient(sum_rule_partition())
    assert q1.partition.space.shape == (5, 5, 5)
    space = ProductSpace.uniform(3, [0, 1, 2])
    q2 = quotient(TwofoldPartition.from_predicate(space, lambda x: x[0] + x[1] >= 3))
    assert q2.partition.space.shape == (3, 3, 1)


def test_quotient_representative_maps_back(worked):
    q = quotient(worked)
    for x in [(7, 6, 2), (0, 0, 0), (10, 10, 10), (F("6.5"), F("5.5"), 4)]:
        r = q.to_quotient(x)
        assert q.partition.mask[r] == worked.accepts(x)
        assert worked.accepts(q.representative(r)) == worked.accepts(x)


@given(linear_partitions())
def test_linear_partitions_pass(p):
    assert is_linear_brute(p.mask)
    report = check_linearity(p)
    assert report.ok
    for i in range(p.space.n):
        assert induced_weak_order(p, i).is_weak_order()


@given(arbitrary_partitions())
def test_linearity_agrees_with_brute_force(p):
    report = check_linearity(p)
    assert report.ok == is_linear_brute(p.mask)
    for i in report.failing():
        assert violates_linearity(p, i, report.verdicts[i].witness)


@given(arbitrary_partitions())
def test_dominance_check_agrees_with_brute_force(p):
    pts = list(p.space.enumerate())
    ok = all(
        p.accepts(x) or not p.accepts(y)
        for x in pts
        for y in pts
        if all(a >= b for a, b in zip(x, y))
    )
    v = check_respects_dominance_partition(p)
    assert bool(v) == ok
    if not v:
        x, y = v.witness
        assert p.accepts(y) and not p.accepts(x)


@given(arbitrary_partitions())
def test_quotient_preserves_partition(p):
    q = quotient(p)
    for x in p.space.enumerate():
        assert q.partition.accepts(q.to_quotient(x)) == p.accepts(x)


def test_level_class_sizes():
    assert len(level_class(sum_six_space(), 6)) == 10
    assert len(level_class(sum_six_space(), 7)) == 4
