"""Concordance, discordance and credibility indices, and the crisp outranking cut.

Two variants are supported. ``III`` uses piecewise-linear single-criterion
indices and the credibility formula that only lets discordances stronger than
the overall concordance weaken it. ``I`` uses step indices and a veto that
cancels the outranking outright.

Scalar functions work on Fractions. :func:`outranking_table` evaluates the
same relation over whole grids by scaling every index to a common integer
denominator, so the vectorised path stays exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError, SymbolicScaleError, ValidationError
from .relations import FiniteRelation, Verdict
from .scales import ProductSpace, parse_rational


class Variant(enum.Enum):
    III = "electre3"
    I = "electre1"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for v in cls:
            if key in (v.value, v.name.lower(), "electre" + v.name.lower()):
                return v
        raise ValidationError(f"unknown outranking variant {value!r}")


@dataclass(frozen=True)
class Thresholds:
    qt: Fraction
    pt: Fraction
    vt: Fraction | None = None

    def __post_init__(self):
        qt = parse_rational(self.qt)
        pt = parse_rational(self.pt)
        vt = None if self.vt is None else parse_rational(self.vt)
        if qt < 0:
            raise ValidationError(f"indifference threshold must be >= 0, got {qt}")
        if pt < qt:
            raise ValidationError(f"preference threshold {pt} is below indifference threshold {qt}")
        if vt is not None and vt < pt:
            raise ValidationError(f"veto threshold {vt} is below preference threshold {pt}")
        object.__setattr__(self, "qt", qt)
        object.__setattr__(self, "pt", pt)
        object.__setattr__(self, "vt", vt)

    @property
    def has_veto(self) -> bool:
        return self.vt is not None


@dataclass(frozen=True)
class OutrankingModel:
    """Thresholds, weights and cutting level of a valued outranking relation."""

    variant: Variant
    thresholds: tuple
    weights: tuple
    lam: Fraction

    def __post_init__(self):
        variant = Variant.parse(self.variant)
        thresholds = tuple(self.thresholds)
        weights = tuple(parse_rational(w) for w in self.weights)
        lam = parse_rational(self.lam)
        if not thresholds:
            raise ValidationError("an outranking model needs at least one criterion")
        if len(thresholds) != len(weights):
            raise ValidationError(f"{len(weights)} weights for {len(thresholds)} criteria")
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be nonnegative")
        if sum(weights) != 1:
            raise ValidationError(f"weights must sum to 1, they sum to {sum(weights)}")
        if not Fraction(1, 2) <= lam <= 1:
            raise ValidationError(f"cutting level must lie in [1/2, 1], got {lam}")
        for i, th in enumerate(thresholds):
            if not isinstance(th, Thresholds):
                raise ValidationError(f"criterion {i}: thresholds must be a Thresholds instance")
            if variant is Variant.I and th.qt != th.pt:
                raise ValidationError(
                    f"criterion {i}: the ELECTRE I variant needs equal indifference and preference thresholds"
                )
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "lam", lam)

    @classmethod
    def uniform(cls, variant, n: int, qt, pt, vt=None, lam=Fraction(1, 2)) -> "OutrankingModel":
        """Same thresholds on every criterion and equal weights."""
        return cls(variant, (Thresholds(qt, pt, vt),) * n, (Fraction(1, n),) * n, lam)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def has_veto(self) -> bool:
        return any(th.has_veto for th in self.thresholds)


def _num(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool) or not isinstance(v, int):
        raise SymbolicScaleError(f"outranking indices need numeric levels, got {v!r}")
    return Fraction(v)


def concordance_index(variant, x_i, y_i, th: Thresholds) -> Fraction:
    """Degree to which criterion ``i`` supports ``x`` outranking ``y``."""
    variant = Variant.parse(variant)
    gap = _num(y_i) - _num(x_i)
    if gap <= th.qt:
        return Fraction(1)
    if variant is Variant.I or gap >= th.pt:
        return Fraction(0)
    return (th.pt - gap) / (th.pt - th.qt)


def discordance_index(variant, x_i, y_i, th: Thresholds) -> Fraction:
    """Degree to which criterion ``i`` opposes ``x`` outranking ``y``."""
    variant = Variant.parse(variant)
    gap = _num(y_i) - _num(x_i)
    if th.vt is None:
        return Fraction(0)
    if variant is Variant.I:
        return Fraction(1) if gap > th.vt else Fraction(0)
    if gap <= th.pt:
        return Fraction(0)
    if gap >= th.vt:
        return Fraction(1)
    return (gap - th.pt) / (th.vt - th.pt)


def _check_len(x, m: OutrankingModel) -> None:
    if len(x) != m.n:
        raise DimensionError(f"alternative has {len(x)} coordinates, model has {m.n} criteria")


def concordance(x, y, m: OutrankingModel) -> Fraction:
    _check_len(x, m)
    _check_len(y, m)
    return sum(
        (w * concordance_index(m.variant, a, b, th) for a, b, w, th in zip(x, y, m.weights, m.thresholds)),
        Fraction(0),
    )


def credibility(x, y, m: OutrankingModel) -> Fraction:
    c = concordance(x, y, m)
    d = [discordance_index(m.variant, a, b, th) for a, b, th in zip(x, y, m.thresholds)]
    sigma = c
    if m.variant is Variant.I:
        for di in d:
            sigma *= 1 - di
        return sigma
    for di in d:
        # d_i > c forces c < 1, so the denominator is never zero
        if di > c:
            sigma *= (1 - di) / (1 - c)
    return sigma


def outranks(x, y, m: OutrankingModel) -> bool:
    return credibility(x, y, m) >= m.lam


def strictly_outranks(x, y, m: OutrankingModel) -> bool:
    return outranks(x, y, m) and not outranks(y, x, m)


def indifferent(x, y, m: OutrankingModel) -> bool:
    return outranks(x, y, m) and outranks(y, x, m)


# --- exact vectorised evaluation -------------------------------------------

_INT64_SAFE = 2**62


class _Side:
    """One side of a comparison: either a full grid or an explicit point list."""

    def __init__(self, grid=None, points=None):
        if (grid is None) == (points is None):
            raise ValueError("give exactly one of grid or points")
        if grid is not None:
            self.values = [tuple(_num(v) for v in levels) for levels in grid]
            self.shape = tuple(len(v) for v in self.values)
            self.axes = list(range(len(self.values)))
        else:
            points = [tuple(p) for p in points]
            n = len(points[0]) if points else 0
            self.values = [tuple(_num(p[i]) for p in points) for i in range(n)]
            self.shape = (len(points),)
            self.axes = [0] * n


def _attribute_tables(m: OutrankingModel, xs: Sequence, ys: Sequence, i: int):
    th = m.thresholds[i]
    w = m.weights[i]
    cw = [[w * concordance_index(m.variant, a, b, th) for b in ys] for a in xs]
    d = [[discordance_index(m.variant, a, b, th) for b in ys] for a in xs]
    return cw, d


def outranking_table(m: OutrankingModel, x_side: _Side, y_side: _Side) -> np.ndarray:
    """Boolean array ``S[x..., y...]`` computed exactly.

    Every weighted concordance, discordance and the cutting level are scaled
    by the lcm ``K`` of their denominators, so the credibility test becomes an
    integer inequality. int64 is used when it cannot overflow.
    """
    n = m.n
    if len(x_side.values) != n or len(y_side.values) != n:
        raise DimensionError(f"comparison sides do not have {n} attributes")
    tables = [_attribute_tables(m, x_side.values[i], y_side.values[i], i) for i in range(n)]
    denoms = [m.lam.denominator]
    for cw, d in tables:
        denoms.extend(v.denominator for row in cw for v in row)
        denoms.extend(v.denominator for row in d for v in row)
    k = math.lcm(*denoms)
    dtype = np.int64 if k ** (n + 1) < _INT64_SAFE else object
    ndim_x = len(x_side.shape)
    full = x_side.shape + y_side.shape

    def place(table, i):
        arr = np.array([[int(v * k) for v in row] for row in table], dtype=dtype)
        shape = [1] * len(full)
        shape[x_side.axes[i]] = len(x_side.values[i])
        shape[ndim_x + y_side.axes[i]] = len(y_side.values[i])
        return arr.reshape(shape)

    c = np.zeros(full, dtype=dtype)
    e = []
    for i, (cw, d) in enumerate(tables):
        c = c + place(cw, i)
        e.append(place(d, i))
    big_l = int(m.lam * k)
    if m.variant is Variant.I:
        ok = c >= big_l
        for ei in e:
            ok = ok & (ei == 0)
        return np.broadcast_to(ok, full).copy()
    lhs = c
    rhs = np.full(full, big_l, dtype=dtype)
    for ei in e:
        hit = ei > c
        lhs = np.where(hit, lhs * (k - ei), lhs)
        rhs = np.where(hit, rhs * (k - c), rhs)
    return np.asarray(lhs >= rhs, dtype=bool)


def grid_side(space_or_levels) -> _Side:
    if isinstance(space_or_levels, ProductSpace):
        space_or_levels.require_numeric()
        return _Side(grid=[s.levels for s in space_or_levels.scales])
    return _Side(grid=space_or_levels)


def points_side(points) -> _Side:
    return _Side(points=points)


def outranks_points(m: OutrankingModel, space: ProductSpace, points) -> np.ndarray:
    """``S[x..., j]`` = every grid alternative ``x`` outranks ``points[j]``."""
    return outranking_table(m, grid_side(space), points_side(points))


def outranked_by_points(m: OutrankingModel, space: ProductSpace, points) -> np.ndarray:
    """``S[x..., j]`` = ``points[j]`` outranks grid alternative ``x``."""
    t = outranking_table(m, points_side(points), grid_side(space))
    return np.moveaxis(t, 0, -1)


def outranking_relation(m: OutrankingModel, points) -> FiniteRelation:
    points = [tuple(p) for p in points]
    side = points_side(points)
    return FiniteRelation(points, outranking_table(m, side, side))


def check_respects_dominance(m: OutrankingModel, space: ProductSpace, samples: int = 2000,
                             seed: int = 0, exhaustive_cap: int = 4 * 10**6) -> Verdict:
    """Test that ``x S y``, ``z >= x`` and ``y >= w`` imply ``z S w``.

    When the full ``S`` tensor over the space has at most ``exhaustive_cap``
    entries it is checked completely: it is enough that ``S`` survives every
    single-level improvement of ``x`` and every single-level worsening of
    ``y``. Otherwise ``samples`` random quadruples are drawn. A failure means
    a bug, since the indices are monotone by construction.
    """
    space.require_numeric()
    if space.size ** 2 <= exhaustive_cap:
        side = grid_side(space)
        s = outranking_table(m, side, side)
        n = space.n
        for axis in range(2 * n):
            lo = [slice(None)] * (2 * n)
            hi = [slice(None)] * (2 * n)
            lo[axis] = slice(None, -1)
            hi[axis] = slice(1, None)
            if axis < n:
                bad = s[tuple(lo)] & ~s[tuple(hi)]  # improving x lost S
            else:
                bad = s[tuple(hi)] & ~s[tuple(lo)]  # worsening y lost S
            if bad.any():
                idx = [int(v) for v in np.argwhere(bad)[0]]
                before = list(idx)
                after = list(idx)
                if axis < n:
                    after[axis] += 1
                else:
                    before[axis] += 1
                x, y = space.at(before[:n]), space.at(before[n:])
                z, w = space.at(after[:n]), space.at(after[n:])
                return Verdict(False, (x, y, z, w), "dominance not respected (internal consistency failure)")
        return Verdict(True)
    rng = np.random.default_rng(seed)
    shape = np.array(space.shape)
    for _ in range(samples):
        xi = rng.integers(0, shape)
        yi = rng.integers(0, shape)
        zi = rng.integers(xi, shape)
        wi = rng.integers(0, yi + 1)
        x, y, z, w = (space.at(v) for v in (xi, yi, zi, wi))
        if outranks(x, y, m) and not outranks(z, w, m):
            return Verdict(False, (x, y, z, w), "dominance not respected (internal consistency failure)")
    return Verdict(True)
