"""Diagnostics on twofold partitions of a finite product space.

The partition is held as a boolean array over level indices, so every test
below is an array expression rather than a loop over alternatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import DegeneratePartitionError, DimensionError, InternalConsistencyError, ValidationError
from .relations import FiniteRelation, Verdict, weak_order_classes
from .scales import ProductSpace, Scale

A_LABEL = "A"
U_LABEL = "U"


class TwofoldPartition:
    """Split of a product space into acceptable ``A`` and unacceptable ``U``."""

    __slots__ = ("space", "mask")

    def __init__(self, space: ProductSpace, mask):
        mask = np.array(mask, dtype=bool)
        if mask.shape != space.shape:
            raise DimensionError(f"mask shape {mask.shape} does not match space shape {space.shape}")
        if not mask.any():
            raise DegeneratePartitionError("class A is empty")
        if mask.all():
            raise DegeneratePartitionError("class U is empty")
        mask.setflags(write=False)
        self.space = space
        self.mask = mask

    @classmethod
    def from_predicate(cls, space: ProductSpace, accept: Callable[[tuple], bool]) -> "TwofoldPartition":
        flat = np.fromiter((bool(accept(x)) for x in space.enumerate()), dtype=bool, count=space.size)
        return cls(space, flat.reshape(space.shape))

    @classmethod
    def from_accepted(cls, space: ProductSpace, accepted: Iterable) -> "TwofoldPartition":
        mask = np.zeros(space.shape, dtype=bool)
        for x in accepted:
            mask[space.index_of(x)] = True
        return cls(space, mask)

    def __repr__(self) -> str:
        return f"TwofoldPartition(shape={self.space.shape}, |A|={self.size_a}, |U|={self.size_u})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwofoldPartition):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.mask, other.mask)

    __hash__ = None

    @property
    def size_a(self) -> int:
        return int(self.mask.sum())

    @property
    def size_u(self) -> int:
        return int(self.mask.size - self.mask.sum())

    def accepts(self, x) -> bool:
        return bool(self.mask[self.space.index_of(x)])

    def assign(self, x) -> str:
        return A_LABEL if self.accepts(x) else U_LABEL

    def accepted(self) -> list[tuple]:
        return [self.space.at(idx) for idx in np.argwhere(self.mask)]

    def rejected(self) -> list[tuple]:
        return [self.space.at(idx) for idx in np.argwhere(~self.mask)]


def _rows(p: TwofoldPartition, i: int) -> np.ndarray:
    """Membership with attribute ``i`` first and all contexts flattened."""
    return np.moveaxis(p.mask, i, 0).reshape(p.space.shape[i], -1)


def _context(p: TwofoldPartition, i: int, flat_index: int) -> tuple:
    """The levels of the other attributes for a flattened context index."""
    shape = list(p.space.shape)
    del shape[i]
    idx = np.unravel_index(flat_index, shape) if shape else ()
    scales = [s for k, s in enumerate(p.space.scales) if k != i]
    return tuple(s.levels[int(j)] for s, j in zip(scales, idx))


def _insert(context: tuple, i: int, level) -> tuple:
    return context[:i] + (level,) + context[i:]


def induced_weak_order(p: TwofoldPartition, i: int) -> FiniteRelation:
    """``x_i`` is at least as good as ``y_i`` when swapping ``y_i`` for ``x_i`` never leaves ``A``."""
    rows = _rows(p, i).astype(np.float64)
    # losses[x, y] counts contexts where y is accepted but x is not
    losses = (1.0 - rows) @ rows.T
    return FiniteRelation(p.space.scales[i].levels, losses == 0)


@dataclass(frozen=True)
class InducedStructure:
    relations: tuple
    complete: tuple
    influential: tuple

    def symmetric(self, i: int) -> FiniteRelation:
        r = self.relations[i]
        return FiniteRelation(r.carrier, r.matrix & r.matrix.T)

    def asymmetric(self, i: int) -> FiniteRelation:
        r = self.relations[i]
        return FiniteRelation(r.carrier, r.matrix & ~r.matrix.T)


def induced_structure(p: TwofoldPartition) -> InducedStructure:
    rels = tuple(induced_weak_order(p, i) for i in range(p.space.n))
    return InducedStructure(
        relations=rels,
        complete=tuple(r.is_complete() for r in rels),
        influential=tuple(bool(is_influential(p, i)) for i in range(p.space.n)),
    )


def is_influential(p: TwofoldPartition, i: int) -> Verdict:
    """Some context has one level of attribute ``i`` in ``A`` and another in ``U``.

    The witness is ``(x, y)`` with ``x`` in ``A`` and ``y`` in ``U`` differing only
    on attribute ``i``.
    """
    rows = _rows(p, i)
    mixed = rows.any(axis=0) & ~rows.all(axis=0)
    if not mixed.any():
        return Verdict(False, None, f"attribute {i} is degenerate")
    ctx_idx = int(np.flatnonzero(mixed)[0])
    col = rows[:, ctx_idx]
    levels = p.space.scales[i].levels
    ctx = _context(p, i, ctx_idx)
    good = levels[int(np.flatnonzero(col)[0])]
    bad = levels[int(np.flatnonzero(~col)[0])]
    return Verdict(True, (_insert(ctx, i, good), _insert(ctx, i, bad)))


@dataclass(frozen=True)
class LinearityReport:
    verdicts: tuple

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.ok

    def failing(self) -> list[int]:
        return [i for i, v in enumerate(self.verdicts) if not v.ok]


def linearity_verdict(p: TwofoldPartition, i: int) -> Verdict:
    """Linearity on attribute ``i``, decided by completeness of the induced relation.

    The witness ``(x_i, y_i, a, b)`` gives two levels and two contexts with
    ``(x_i, a)`` and ``(y_i, b)`` in ``A`` while ``(y_i, a)`` and ``(x_i, b)`` are not.
    """
    rows = _rows(p, i)
    rel = induced_weak_order(p, i)
    incomparable = ~(rel.matrix | rel.matrix.T)
    if not incomparable.any():
        return Verdict(True)
    x, y = map(int, np.argwhere(incomparable)[0])
    a = int(np.flatnonzero(rows[x] & ~rows[y])[0])
    b = int(np.flatnonzero(rows[y] & ~rows[x])[0])
    levels = p.space.scales[i].levels
    return Verdict(
        False,
        (levels[x], levels[y], _context(p, i, a), _context(p, i, b)),
        f"attribute {i} is not linear",
    )


def check_linearity(p: TwofoldPartition) -> LinearityReport:
    return LinearityReport(tuple(linearity_verdict(p, i) for i in range(p.space.n)))


def violates_linearity(p: TwofoldPartition, i: int, witness) -> bool:
    """Direct evaluation of a claimed linearity counterexample."""
    x, y, a, b = witness
    return (
        p.accepts(_insert(a, i, x))
        and p.accepts(_insert(b, i, y))
        and not p.accepts(_insert(a, i, y))
        and not p.accepts(_insert(b, i, x))
    )


def _reorder(p: TwofoldPartition, orders) -> np.ndarray:
    mask = p.mask
    if orders is None:
        return mask
    for i, order in enumerate(orders):
        if order is None:
            continue
        scale = p.space.scales[i]
        order = list(order)
        if sorted(map(scale.index, order)) != list(range(len(scale))):
            raise ValidationError(f"order for attribute {i} is not a permutation of its levels")
        mask = np.take(mask, [scale.index(v) for v in order], axis=i)
    return mask


def check_respects_dominance_partition(p: TwofoldPartition, orders=None) -> Verdict:
    """Whether ``y`` in ``A`` and ``x >= y`` force ``x`` into ``A``.

    ``orders`` optionally gives, per attribute, the levels listed from worst to
    best; by default each scale's own order is used. On success the expected
    consequences (linearity, and the scale order being refined by the induced
    relation) are checked too, and a failure there raises
    :class:`InternalConsistencyError`.
    """
    mask = _reorder(p, orders)
    n = p.space.n
    for i in range(n):
        lo = [slice(None)] * n
        hi = [slice(None)] * n
        lo[i] = slice(None, -1)
        hi[i] = slice(1, None)
        bad = mask[tuple(lo)] & ~mask[tuple(hi)]
        if bad.any():
            idx = [int(v) for v in np.argwhere(bad)[0]]
            up = list(idx)
            up[i] += 1
            ordered = [list(o) if o is not None else list(s.levels)
                       for o, s in zip(orders or [None] * n, p.space.scales)]
            y = tuple(ordered[k][j] for k, j in enumerate(idx))
            x = tuple(ordered[k][j] for k, j in enumerate(up))
            return Verdict(False, (x, y), "x dominates y, y is in A but x is not")
    if not check_linearity(p):
        raise InternalConsistencyError("dominance-respecting partition found non-linear")
    for i in range(n):
        rel = induced_weak_order(p, i)
        order = list(orders[i]) if orders is not None and orders[i] is not None else list(p.space.scales[i].levels)
        for lo_k in range(len(order)):
            for hi_k in range(lo_k, len(order)):
                if not rel.holds(order[hi_k], order[lo_k]):
                    raise InternalConsistencyError(
                        f"attribute {i}: scale order not refined by the induced relation"
                    )
    return Verdict(True)


@dataclass(frozen=True)
class Quotient:
    """A partition on rank-valued scales plus the maps back to original levels.

    ``classes[i][r]`` lists the original levels merged into rank ``r`` of
    attribute ``i``; ranks go from worst to best when ``ordered[i]`` is true.
    """

    partition: TwofoldPartition
    classes: tuple
    level_rank: tuple
    ordered: tuple

    def to_quotient(self, x) -> tuple:
        return tuple(m[v] for m, v in zip(self.level_rank, x))

    def representative(self, ranks) -> tuple:
        """Lowest original level of each class, in scale order."""
        return tuple(self.classes[i][r][0] for i, r in enumerate(ranks))


def quotient(p: TwofoldPartition) -> Quotient:
    """Merge levels that the partition cannot tell apart."""
    scales, classes, level_rank, ordered, reps = [], [], [], [], []
    for i, scale in enumerate(p.space.scales):
        rel = induced_weak_order(p, i)
        if rel.is_complete():
            groups = weak_order_classes(rel)
            ordered.append(True)
        else:
            groups = []
            seen = set()
            sym = rel.matrix & rel.matrix.T
            for k, level in enumerate(scale.levels):
                if level in seen:
                    continue
                members = [scale.levels[j] for j in np.flatnonzero(sym[k])]
                seen.update(members)
                groups.append(members)
            ordered.append(False)
        groups = [sorted(g, key=scale.index) for g in groups]
        classes.append(tuple(tuple(g) for g in groups))
        level_rank.append({v: r for r, g in enumerate(groups) for v in g})
        reps.append([scale.index(g[0]) for g in groups])
        scales.append(Scale.numeric(scale.attribute_id, range(len(groups)), scale.name))
    mask = p.mask
    for i, r in enumerate(reps):
        mask = np.take(mask, r, axis=i)
    return Quotient(
        TwofoldPartition(ProductSpace(tuple(scales)), mask),
        tuple(classes),
        tuple(level_rank),
        tuple(ordered),
    )
