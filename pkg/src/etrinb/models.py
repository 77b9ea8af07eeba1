"""Two-category sorting models.

``SortingModel`` covers the outranking-based methods with one or several
limiting profiles and the pseudo-conjunctive (``pc``) or pseudo-disjunctive
(``pd``) rule. A third rule, ``some``, accepts whenever ``x`` outranks some
profile and skips the check that no profile strictly outranks ``x``; with one
profile it coincides with ``pc``. ``ModelERepresentation`` is the abstract noncompensatory form
built from per-attribute semiorders, veto relations and a family of winning
coalitions. ``ETildeRepresentation`` lets every profile carry its own family.

Every model can be materialised over an enumerable space with
:func:`partition_from_model`; the vectorised paths are cross-checked against
the scalar ``assign_*`` functions in the tests.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .axioms import A_LABEL, U_LABEL, TwofoldPartition
from .errors import DegeneratePartitionError, DimensionError, PreconditionError, ProfileValidationError, ValidationError
from .outranking import (
    OutrankingModel,
    outranked_by_points,
    outranking_relation,
    outranks,
    outranks_points,
)
from .relations import (
    FiniteRelation,
    Verdict,
    is_homogeneous_nested_chain,
    is_semiorder,
    is_strict_semiorder,
    strict_threshold_relation,
    threshold_relation,
)
from .scales import ProductSpace

PC = "pc"
PD = "pd"
# accept as soon as x outranks some profile, without the second pc clause;
# this is the rule under which the small worked examples are evaluated
SOME = "some"
RULES = (PC, PD, SOME)


def validate_profiles(profiles: Sequence, outranks_fn: Callable[[tuple, tuple], bool]) -> Verdict:
    """No profile may strictly outrank another; the witness is the first offending pair."""
    profiles = [tuple(p) for p in profiles]
    for p in profiles:
        for q in profiles:
            if outranks_fn(p, q) and not outranks_fn(q, p):
                return Verdict(False, (p, q), "profile strictly outranks another profile")
    return Verdict(True)


def _validate_profile_matrix(profiles, s: np.ndarray) -> None:
    strict = s & ~s.T
    if strict.any():
        a, b = map(int, np.argwhere(strict)[0])
        raise ProfileValidationError(
            f"profiles violate the no-strict-outranking condition: {profiles[a]} strictly outranks {profiles[b]}",
            pair=(profiles[a], profiles[b]),
        )


def _profiles_in(space: ProductSpace, profiles) -> tuple:
    profiles = tuple(dict.fromkeys(space.validate(p) for p in profiles))
    if not profiles:
        raise ValidationError("the profile set is empty")
    return profiles


# --- coalition families ----------------------------------------------------


def _mask(coalition, n: int) -> int:
    if isinstance(coalition, (int, np.integer)):
        m = int(coalition)
    else:
        m = 0
        for i in coalition:
            if not 0 <= i < n:
                raise ValidationError(f"attribute index {i} out of range for {n} attributes")
            m |= 1 << i
    if m >= 1 << n or m < 0:
        raise ValidationError(f"coalition mask {m} out of range for {n} attributes")
    return m


def _members(mask: int, n: int) -> frozenset:
    return frozenset(i for i in range(n) if mask >> i & 1)


class CoalitionFamily:
    """An upward-closed family of winning coalitions over ``n`` attributes.

    Coalitions are stored as bitmasks; ``table[mask]`` says whether the
    coalition wins, which makes vectorised lookups a single ``take``.
    """

    __slots__ = ("n", "table")

    def __init__(self, n: int, coalitions: Iterable, warn_empty: bool = True):
        if n < 1:
            raise ValidationError("a coalition family needs at least one attribute")
        table = np.zeros(1 << n, dtype=bool)
        for c in coalitions:
            table[_mask(c, n)] = True
        if not table.any():
            raise ValidationError("the coalition family is empty")
        for m in np.flatnonzero(table):
            for i in range(n):
                if not table[int(m) | 1 << i]:
                    raise ValidationError(
                        f"coalition family is not upward closed: {sorted(_members(int(m), n))} wins "
                        f"but its superset with attribute {i} does not"
                    )
        if table[0] and warn_empty:
            warnings.warn("the empty coalition wins: every comparison without veto is an outranking", stacklevel=2)
        table.setflags(write=False)
        self.n = n
        self.table = table

    @classmethod
    def from_minimal(cls, n: int, minimal: Iterable, warn_empty: bool = True) -> "CoalitionFamily":
        seeds = [_mask(c, n) for c in minimal]
        winning = [m for m in range(1 << n) if any(m & s == s for s in seeds)]
        return cls(n, winning, warn_empty=warn_empty)

    @classmethod
    def unanimous(cls, n: int) -> "CoalitionFamily":
        return cls(n, [(1 << n) - 1])

    @classmethod
    def from_weights(cls, weights: Sequence, lam) -> "CoalitionFamily":
        """Coalitions whose total weight reaches ``lam``."""
        n = len(weights)
        wins = [m for m in range(1 << n) if sum((weights[i] for i in range(n) if m >> i & 1), 0) >= lam]
        return cls(n, wins)

    @classmethod
    def at_least(cls, n: int, k: int) -> "CoalitionFamily":
        return cls(n, [m for m in range(1 << n) if bin(m).count("1") >= k])

    def __contains__(self, coalition) -> bool:
        return bool(self.table[_mask(coalition, self.n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoalitionFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"CoalitionFamily(n={self.n}, minimal={self.minimal()})"

    def members(self) -> list[frozenset]:
        return [_members(int(m), self.n) for m in np.flatnonzero(self.table)]

    def minimal_masks(self) -> list[int]:
        wins = [int(m) for m in np.flatnonzero(self.table)]
        return [m for m in wins if not any(self.table[m & ~(1 << i)] for i in range(self.n) if m >> i & 1)]

    def minimal(self) -> list[tuple]:
        """The minimal winning coalitions, as sorted index tuples."""
        return sorted(tuple(sorted(_members(m, self.n))) for m in self.minimal_masks())

    @property
    def is_unanimous(self) -> bool:
        return int(self.table.sum()) == 1 and bool(self.table[-1])


# --- outranking-based sorting ---------------------------------------------


@dataclass(frozen=True)
class SortingModel:
    """Outranking model, limiting profiles and assignment rule.

    Profile admissibility is checked here, once, rather than at every
    assignment.
    """

    space: ProductSpace
    outranking: OutrankingModel
    profiles: tuple
    rule: str = PC

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValidationError(f"rule must be one of {RULES}, got {self.rule!r}")
        self.space.require_numeric()
        if self.space.n != self.outranking.n:
            raise DimensionError(f"space has {self.space.n} attributes, outranking model {self.outranking.n}")
        profiles = _profiles_in(self.space, self.profiles)
        object.__setattr__(self, "profiles", profiles)
        _validate_profile_matrix(profiles, outranking_relation(self.outranking, profiles).matrix)

    def S(self, x, y) -> bool:
        return outranks(x, y, self.outranking)

    def assign(self, x) -> str:
        return assign_rule(x, self, self.rule)


def _strict(s, x, y) -> bool:
    return s(x, y) and not s(y, x)


def assign_pc(x, m) -> str:
    """Accept when ``x`` outranks some profile and no profile strictly outranks ``x``."""
    x = m.space.validate(x)
    ok = any(m.S(x, p) for p in m.profiles) and not any(_strict(m.S, q, x) for q in m.profiles)
    return A_LABEL if ok else U_LABEL


def assign_pd(x, m) -> str:
    """Reject when some profile strictly outranks ``x`` and ``x`` strictly outranks none."""
    x = m.space.validate(x)
    bad = any(_strict(m.S, p, x) for p in m.profiles) and not any(_strict(m.S, x, q) for q in m.profiles)
    return U_LABEL if bad else A_LABEL


def assign_some(x, m) -> str:
    """Accept when ``x`` outranks some profile."""
    x = m.space.validate(x)
    return A_LABEL if any(m.S(x, p) for p in m.profiles) else U_LABEL


def assign_rule(x, m, rule: str) -> str:
    if rule == PC:
        return assign_pc(x, m)
    if rule == PD:
        return assign_pd(x, m)
    if rule == SOME:
        return assign_some(x, m)
    raise ValidationError(f"rule must be one of {RULES}, got {rule!r}")


# --- abstract noncompensatory models ---------------------------------------


def _complement_converse(v: FiniteRelation) -> FiniteRelation:
    return FiniteRelation(v.carrier, ~v.matrix.T)


class ModelERepresentation:
    """Semiorders ``S_i``, vetoes ``V_i``, winning coalitions ``F`` and profiles.

    ``x S y`` holds when the attributes on which ``x_i S_i y_i`` form a winning
    coalition and no attribute has ``y_i V_i x_i``.
    """

    def __init__(self, space: ProductSpace, S: Sequence[FiniteRelation], V: Sequence[FiniteRelation] | None,
                 family: CoalitionFamily, profiles: Sequence, check_profiles: bool = True, rule: str = PC):
        if rule not in RULES:
            raise ValidationError(f"rule must be one of {RULES}, got {rule!r}")
        n = space.n
        S = tuple(S)
        V = tuple(V) if V is not None else tuple(FiniteRelation.empty(s.levels) for s in space.scales)
        if len(S) != n or len(V) != n:
            raise DimensionError(f"need {n} semiorders and {n} veto relations")
        if family.n != n:
            raise DimensionError(f"coalition family is over {family.n} attributes, space has {n}")
        W = []
        for i, (s, v, scale) in enumerate(zip(S, V, space.scales)):
            if s.carrier != scale.levels or v.carrier != scale.levels:
                raise ValidationError(f"attribute {i}: relation carrier differs from the scale levels")
            ver = is_semiorder(s)
            if not ver:
                raise ValidationError(f"attribute {i}: S_i is not a semiorder ({ver.reason}, {ver.witness})")
            ver = is_strict_semiorder(v)
            if not ver:
                raise ValidationError(f"attribute {i}: V_i is not a strict semiorder ({ver.reason}, {ver.witness})")
            if (v.matrix & ~(s.matrix & ~s.matrix.T)).any():
                raise ValidationError(f"attribute {i}: V_i is not included in the asymmetric part of S_i")
            chain = is_homogeneous_nested_chain(s, _complement_converse(v))
            if not chain:
                raise ValidationError(f"attribute {i}: (S_i, U_i) is not a homogeneous nested chain ({chain.reason})")
            W.append(chain.weak_order)
        self.space = space
        self.S_rel = S
        self.V_rel = V
        self.W = tuple(W)
        self.family = family
        self.rule = rule
        self.profiles = _profiles_in(space, profiles)
        if check_profiles:
            _validate_profile_matrix(self.profiles, self.outranking_matrix(self.profiles))

    @classmethod
    def from_thresholds(cls, space: ProductSpace, s_thresholds, v_thresholds, family, profiles, rule: str = PC):
        """Threshold semiorders: ``x_i S_i y_i`` iff ``x_i >= y_i - q_i``; ``x_i V_i y_i`` iff ``x_i > y_i + v_i``.

        A ``None`` veto threshold means an empty ``V_i``.
        """
        space.require_numeric()
        S = [threshold_relation(sc.levels, q) for sc, q in zip(space.scales, s_thresholds)]
        V = [FiniteRelation.empty(sc.levels) if v is None else strict_threshold_relation(sc.levels, v)
             for sc, v in zip(space.scales, v_thresholds)]
        return cls(space, S, V, family, profiles, rule=rule)

    @property
    def has_veto(self) -> bool:
        return any(v.matrix.any() for v in self.V_rel)

    def coalition(self, x, y) -> int:
        """Bitmask of attributes with ``x_i S_i y_i``."""
        return sum(1 << i for i, (s, a, b) in enumerate(zip(self.S_rel, x, y)) if s.holds(a, b))

    def vetoed(self, x, y) -> bool:
        """Some attribute has ``y_i V_i x_i``."""
        return any(v.holds(b, a) for v, a, b in zip(self.V_rel, x, y))

    def S(self, x, y) -> bool:
        return bool(self.family.table[self.coalition(x, y)]) and not self.vetoed(x, y)

    def outranking_matrix(self, points) -> np.ndarray:
        pts = [tuple(p) for p in points]
        return np.array([[self.S(a, b) for b in pts] for a in pts], dtype=bool).reshape(len(pts), len(pts))

    def w_dominates(self, x, y) -> bool:
        return all(w.holds(a, b) for w, a, b in zip(self.W, x, y))

    def assign(self, x) -> str:
        if self.rule == PC:
            return assign_model_e(x, self)
        return assign_rule(x, self, self.rule)

    def _grid_tables(self, profiles, families):
        """``x S p`` and ``p S x`` over the whole grid, one trailing axis per profile."""
        n = self.space.n
        shape = self.space.shape
        idx = [[self.space.scales[i].index(p[i]) for i in range(n)] for p in profiles]
        xs_p = np.empty(shape + (len(profiles),), dtype=bool)
        p_sx = np.empty_like(xs_p)
        for k, (pi, fam) in enumerate(zip(idx, families)):
            fwd = np.zeros(shape, dtype=np.int64)
            bwd = np.zeros(shape, dtype=np.int64)
            veto_fwd = np.zeros(shape, dtype=bool)
            veto_bwd = np.zeros(shape, dtype=bool)
            for i in range(n):
                view = [1] * n
                view[i] = shape[i]
                s = self.S_rel[i].matrix
                v = self.V_rel[i].matrix
                fwd = fwd + (s[:, pi[i]].astype(np.int64) << i).reshape(view)
                bwd = bwd + (s[pi[i], :].astype(np.int64) << i).reshape(view)
                veto_fwd = veto_fwd | v[pi[i], :].reshape(view)  # p_i V_i x_i blocks x S p
                veto_bwd = veto_bwd | v[:, pi[i]].reshape(view)  # x_i V_i p_i blocks p S x
            xs_p[..., k] = fam.table[fwd] & ~veto_fwd
            p_sx[..., k] = fam.table[bwd] & ~veto_bwd
        return xs_p, p_sx


def assign_model_e(x, r: ModelERepresentation) -> str:
    x = r.space.validate(x)
    ok = any(r.S(x, p) for p in r.profiles) and not any(_strict(r.S, q, x) for q in r.profiles)
    return A_LABEL if ok else U_LABEL


class ETildeRepresentation:
    """Model E with a coalition family attached to each profile.

    ``x S^p y`` uses ``F^p``. An alternative is accepted when it ``S^p``-outranks
    some profile ``p`` and no profile ``q`` strictly ``S^q``-outranks it.
    Admissibility requires that no profile ``q`` strictly ``S^q``-outranks another
    profile.
    """

    def __init__(self, space: ProductSpace, S, V, entries: Sequence[tuple]):
        entries = [(space.validate(p), f) for p, f in entries]
        if not entries:
            raise ValidationError("the profile set is empty")
        families = [f for _, f in entries]
        # reuse the structural checks of Model E with a placeholder family
        self.base = ModelERepresentation(space, S, V, families[0], [p for p, _ in entries], check_profiles=False)
        self.space = space
        self.entries = tuple(entries)
        for q, fq in entries:
            for p, _ in entries:
                if self.S_with(fq, q, p) and not self.S_with(fq, p, q):
                    raise ProfileValidationError(
                        f"profile {q} strictly outranks profile {p} under its own coalition family",
                        pair=(q, p),
                    )

    @property
    def profiles(self) -> tuple:
        return tuple(p for p, _ in self.entries)

    def S_with(self, family: CoalitionFamily, x, y) -> bool:
        return bool(family.table[self.base.coalition(x, y)]) and not self.base.vetoed(x, y)

    def assign(self, x) -> str:
        return assign_model_e_tilde(x, self)


def assign_model_e_tilde(x, r: ETildeRepresentation) -> str:
    x = r.space.validate(x)
    ok = any(r.S_with(f, x, p) for p, f in r.entries)
    ok = ok and not any(r.S_with(f, q, x) and not r.S_with(f, x, q) for q, f in r.entries)
    return A_LABEL if ok else U_LABEL


# --- materialisation ---------------------------------------------------------


@dataclass(frozen=True)
class Assignment:
    """A total assignment over a space, possibly with an empty class."""

    space: ProductSpace
    mask: np.ndarray

    @property
    def degenerate(self) -> bool:
        return bool(self.mask.all() or not self.mask.any())

    @property
    def size_a(self) -> int:
        return int(self.mask.sum())

    def as_partition(self) -> TwofoldPartition:
        if self.degenerate:
            which = "U" if self.mask.all() else "A"
            raise DegeneratePartitionError(f"the model leaves class {which} empty")
        return TwofoldPartition(self.space, self.mask)

    def label(self, x) -> str:
        return A_LABEL if self.mask[self.space.index_of(x)] else U_LABEL


def _combine(xs_p: np.ndarray, p_sx: np.ndarray, rule: str) -> np.ndarray:
    p_strict_x = p_sx & ~xs_p
    if rule == PC:
        return xs_p.any(axis=-1) & ~p_strict_x.any(axis=-1)
    if rule == SOME:
        return xs_p.any(axis=-1)
    x_strict_p = xs_p & ~p_sx
    return ~(p_strict_x.any(axis=-1) & ~x_strict_p.any(axis=-1))


def acceptance_mask(model, space: ProductSpace | None = None) -> np.ndarray:
    if isinstance(model, SortingModel):
        space = space or model.space
        if space != model.space:
            raise DimensionError("model and space disagree")
        space.enumerate()  # enforces the enumeration cap
        xs_p = outranks_points(model.outranking, space, model.profiles)
        p_sx = outranked_by_points(model.outranking, space, model.profiles)
        return _combine(xs_p, p_sx, model.rule)
    if isinstance(model, ModelERepresentation):
        model.space.enumerate()
        xs_p, p_sx = model._grid_tables(model.profiles, [model.family] * len(model.profiles))
        return _combine(xs_p, p_sx, model.rule)
    if isinstance(model, ETildeRepresentation):
        model.space.enumerate()
        xs_p, p_sx = model.base._grid_tables(model.profiles, [f for _, f in model.entries])
        return _combine(xs_p, p_sx, PC)
    if isinstance(model, TwofoldPartition):
        return model.mask.copy()
    raise ValidationError(f"cannot materialise an assignment from {type(model).__name__}")


def partition_from_model(model, space: ProductSpace | None = None) -> Assignment:
    """Assign every alternative of the space; check ``degenerate`` before using it as a partition."""
    mask = acceptance_mask(model, space)
    mask.setflags(write=False)
    return Assignment(space or model.space, mask)


def noncompensatory_sort(x, space: ProductSpace, approved: Sequence[Callable], family: CoalitionFamily,
                         vetoes: Sequence[Callable] | None = None) -> str:
    """Single-profile noncompensatory sorting stated directly.

    ``approved[i](x_i)`` says whether level ``x_i`` is good enough on attribute
    ``i``; ``vetoes[i](x_i)`` whether it is bad enough to veto.
    """
    x = space.validate(x)
    coalition = sum(1 << i for i, f in enumerate(approved) if f(x[i]))
    vetoed = any(v(x[i]) for i, v in enumerate(vetoes or []))
    return A_LABEL if family.table[coalition] and not vetoed else U_LABEL


def enumerate_families(n: int) -> list[CoalitionFamily]:
    """Every nonempty upward-closed family over ``n`` attributes that excludes the empty coalition."""
    if n > 5:
        raise PreconditionError("family enumeration is limited to n <= 5")
    from .combinatorics import monotone_functions

    out = []
    for table in monotone_functions(n):
        if table[0] or not table.any():
            continue
        out.append(CoalitionFamily(n, np.flatnonzero(table).tolist()))
    return out


__all__ = [
    "Assignment",
    "CoalitionFamily",
    "ETildeRepresentation",
    "ModelERepresentation",
    "PC",
    "PD",
    "RULES",
    "SOME",
    "SortingModel",
    "acceptance_mask",
    "assign_model_e",
    "assign_model_e_tilde",
    "assign_pc",
    "assign_pd",
    "assign_rule",
    "assign_some",
    "enumerate_families",
    "noncompensatory_sort",
    "partition_from_model",
    "validate_profiles",
]
