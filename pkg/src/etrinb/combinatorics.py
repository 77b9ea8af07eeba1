"""Antichains in products of chains, and monotone partitions of the binary cube."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import networkx as nx
import numpy as np

from .errors import ResourceCapError, ValidationError
from .scales import ProductSpace

ANTICHAIN_CAP = 2**20
MATCHING_CAP = 2**11
MAX_DEDEKIND_N = 5


@dataclass(frozen=True)
class ChainProfile:
    """Chain lengths ``m_i`` of a product of chains."""

    m: tuple

    def __post_init__(self):
        m = tuple(int(v) for v in self.m)
        if not m:
            raise ValidationError("a chain profile needs at least one chain")
        if any(v < 1 for v in m):
            raise ValidationError("chain lengths must be positive")
        object.__setattr__(self, "m", m)

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def h(self) -> int:
        return (self.n + sum(self.m)) // 2


def binom(k: int, j: int) -> int:
    """Binomial coefficient, zero when ``k < j`` or ``k < 0``."""
    if j < 0 or k < 0 or k < j:
        return 0
    return math.comb(k, j)


def max_antichain_size(chains) -> int:
    """Closed-form width of a product of chains of lengths ``m``.

    Inclusion-exclusion over subsets ``I`` of attributes counts the vectors
    with 1-based coordinates summing to ``h``, the middle rank.
    """
    c = chains if isinstance(chains, ChainProfile) else ChainProfile(tuple(chains))
    n, h = c.n, c.h
    total = 0
    for size in range(n + 1):
        for subset in combinations(c.m, size):
            # binom is zero once the subset's chains exceed the target rank
            total += (-1) ** size * binom(h - sum(subset) - 1, n - 1)
    return total


def sperner_number(n: int) -> int:
    if n < 1:
        raise ValidationError("n must be positive")
    return math.comb(n, math.ceil(n / 2))


def _shape(space_or_shape) -> tuple:
    if isinstance(space_or_shape, ProductSpace):
        return space_or_shape.shape
    return tuple(int(v) for v in space_or_shape)


def rank_level_widths(space_or_shape, cap: int = ANTICHAIN_CAP) -> list[int]:
    """Number of grid points at each rank (sum of level indices), by enumeration."""
    shape = _shape(space_or_shape)
    size = math.prod(shape)
    if size > cap:
        raise ResourceCapError(f"grid has {size} points, above the cap of {cap}", size=size, cap=cap)
    ranks = np.indices(shape).reshape(len(shape), -1).sum(axis=0)
    return np.bincount(ranks).tolist()


def brute_force_max_antichain(space_or_shape, cap: int = ANTICHAIN_CAP) -> int:
    """Width of the grid, taken as its largest rank level.

    For grids small enough for :func:`dilworth_width` the two are compared and
    a disagreement raises.
    """
    shape = _shape(space_or_shape)
    width = max(rank_level_widths(shape, cap))
    if math.prod(shape) <= 64:
        exact = dilworth_width(shape)
        if exact != width:
            raise AssertionError(f"rank-level width {width} differs from exact width {exact}")
    return width


def dilworth_width(space_or_shape, cap: int = MATCHING_CAP) -> int:
    """Exact width of the grid's product order via Dilworth/Konig matching."""
    shape = _shape(space_or_shape)
    size = math.prod(shape)
    if size > cap:
        raise ResourceCapError(f"grid has {size} points, above the matching cap of {cap}", size=size, cap=cap)
    pts = [tuple(int(v) for v in p) for p in np.ndindex(*shape)]
    g = nx.Graph()
    left = [("l", p) for p in pts]
    g.add_nodes_from(left)
    g.add_nodes_from(("r", p) for p in pts)
    for a in pts:
        for b in pts:
            if a != b and all(x <= y for x, y in zip(a, b)):
                g.add_edge(("l", a), ("r", b))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return size - len(matching) // 2


def exhaustive_max_antichain(space_or_shape, cap: int = 16) -> int:
    """Width by checking every subset; only for tiny grids."""
    shape = _shape(space_or_shape)
    pts = list(np.ndindex(*shape))
    if len(pts) > cap:
        raise ResourceCapError(f"grid has {len(pts)} points, above the subset cap of {cap}", size=len(pts), cap=cap)
    comparable = [[all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)) for b in pts] for a in pts]
    best = 1
    for mask in range(1, 1 << len(pts)):
        members = [k for k in range(len(pts)) if mask >> k & 1]
        if len(members) <= best:
            continue
        if all(not comparable[a][b] for a, b in combinations(members, 2)):
            best = len(members)
    return best


def monotone_functions(n: int) -> Iterator[np.ndarray]:
    """Every monotone boolean function on ``n`` variables, as a table over bitmasks.

    Masks are visited in increasing order, which lists every subset before
    its supersets; a point is forced to 1 as soon as one of its lower covers
    is 1.
    """
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if n > MAX_DEDEKIND_N:
        raise ResourceCapError(f"monotone enumeration is limited to n <= {MAX_DEDEKIND_N}", size=n, cap=MAX_DEDEKIND_N)
    size = 1 << n
    table = np.zeros(size, dtype=bool)

    def rec(m: int):
        if m == size:
            yield table.copy()
            return
        forced = any(table[m & ~(1 << i)] for i in range(n) if m >> i & 1)
        if not forced:
            table[m] = False
            yield from rec(m + 1)
        table[m] = True
        yield from rec(m + 1)
        table[m] = False

    yield from rec(0)


def count_monotone_functions(n: int) -> int:
    return sum(1 for _ in monotone_functions(n))


def count_monotone_partitions(n) -> int:
    """Dominance-respecting twofold partitions of ``{0,1}^n`` with both classes nonempty.

    ``n`` may also be a product space of two-level scales.
    """
    if isinstance(n, ProductSpace):
        if any(len(s) != 2 for s in n.scales):
            raise ValidationError("monotone partition counting needs two-level scales")
        n = n.n
    return count_monotone_functions(n) - 2


def is_antichain(points: Sequence[tuple]) -> bool:
    for a, b in combinations(points, 2):
        if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
            return False
    return True
