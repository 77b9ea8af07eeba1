"""Constructive representations of linear twofold partitions.

* minimal acceptable alternatives and the unanimous representation built on them,
* the flattening of a veto-free representation into a unanimous one,
* the decomposable representation (ranks plus a monotone decision table),
* exact additive representability, with a witness or a certificate,
* conversions between outranking models and the abstract model,
* exhaustive equivalence checks and a bounded search over representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .axioms import A_LABEL, U_LABEL, TwofoldPartition, check_linearity, induced_weak_order, quotient
from .errors import (
    InternalConsistencyError,
    NonLinearPartitionError,
    PreconditionError,
    ResourceCapError,
    ValidationError,
)
from .lp import INFEASIBLE, LP_CELL_CAP, OPTIMAL, solve_lp
from .models import (
    PC,
    CoalitionFamily,
    ETildeRepresentation,
    ModelERepresentation,
    SortingModel,
    acceptance_mask,
    enumerate_families,
)
from .outranking import OutrankingModel, Thresholds, Variant
from .relations import FiniteRelation, strict_threshold_relation, threshold_relation
from .scales import ProductSpace, Scale, enumeration_cap

SEARCH_CAP = 10**7


def _require_linear(p: TwofoldPartition) -> None:
    report = check_linearity(p)
    if not report:
        i = report.failing()[0]
        v = report.verdicts[i]
        raise NonLinearPartitionError(
            f"partition is not linear on attribute {i}; witness (x_i, y_i, a, b) = {v.witness}",
            attribute=i,
            witness=v.witness,
        )


def _minimal_mask(mask: np.ndarray) -> np.ndarray:
    """Members of an up-set of a product of chains with no member one step below."""
    out = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        dst = [slice(None)] * mask.ndim
        src = [slice(None)] * mask.ndim
        dst[axis] = slice(1, None)
        src[axis] = slice(None, -1)
        below[tuple(dst)] = mask[tuple(src)]
        out &= ~below
    return out


def minimally_acceptable(p: TwofoldPartition) -> list[tuple]:
    """Minimal elements of ``A`` for the product of the induced weak orders.

    Each quotient class is mapped back to its lowest original level. The
    result is in lexicographic order of level indices.
    """
    _require_linear(p)
    q = quotient(p)
    ranks = np.argwhere(_minimal_mask(q.partition.mask))
    out = [q.representative([int(r) for r in row]) for row in ranks]
    return sorted(out, key=p.space.index_of)


def upward_closure_mask(space: ProductSpace, relations: Sequence[FiniteRelation], generators) -> np.ndarray:
    """Alternatives that are at least as good as some generator on every attribute."""
    mask = np.zeros(space.shape, dtype=bool)
    for g in generators:
        cur = np.ones(space.shape, dtype=bool)
        for i, (rel, level) in enumerate(zip(relations, g)):
            view = [1] * space.n
            view[i] = space.shape[i]
            cur = cur & rel.matrix[:, rel.position(level)].reshape(view)
        mask |= cur
    return mask


def build_unanimous_representation(p: TwofoldPartition) -> ModelERepresentation:
    """Induced weak orders, no vetoes, unanimity, minimal acceptable alternatives as profiles."""
    _require_linear(p)
    S = [induced_weak_order(p, i) for i in range(p.space.n)]
    rep = ModelERepresentation(p.space, S, None, CoalitionFamily.unanimous(p.space.n), minimally_acceptable(p))
    if not np.array_equal(acceptance_mask(rep), p.mask):
        raise InternalConsistencyError("unanimous representation does not reproduce the partition")
    return rep


# --- equivalence ------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    identical: bool
    checked: int
    total: int
    first_difference: tuple | None = None

    def __bool__(self) -> bool:
        return self.identical

    def summary(self) -> str:
        if self.identical:
            return f"identical ({self.checked}/{self.total})"
        x, a, b = self.first_difference
        return f"different at {x}: {a} vs {b} ({self.checked}/{self.total} checked)"


def assignment_mask(source, space: ProductSpace) -> np.ndarray:
    """Acceptance mask of any assignment source over ``space``."""
    if isinstance(source, (SortingModel, ModelERepresentation, ETildeRepresentation)):
        mask = acceptance_mask(source)
    elif hasattr(source, "mask"):
        mask = np.asarray(source.mask)
    elif callable(source):
        mask = np.fromiter((_truthy(source(x)) for x in space.enumerate()), dtype=bool, count=space.size)
        mask = mask.reshape(space.shape)
    else:
        raise ValidationError(f"cannot read an assignment from {type(source).__name__}")
    if mask.shape != space.shape:
        raise ValidationError("assignment source is defined on a different space")
    return mask


def _truthy(label) -> bool:
    if isinstance(label, str):
        if label not in (A_LABEL, U_LABEL):
            raise ValidationError(f"class label must be 'A' or 'U', got {label!r}")
        return label == A_LABEL
    return bool(label)


def verify_equivalence(a, b, space: ProductSpace) -> EquivalenceReport:
    """Compare two assignment sources on every alternative of ``space``.

    A source is a model, a partition, an :class:`Assignment`, or a callable
    returning ``"A"``/``"U"`` or a boolean. The first difference is the
    lexicographically smallest alternative assigned differently.
    """
    space.enumerate()  # cap check
    ma = assignment_mask(a, space)
    mb = assignment_mask(b, space)
    diff = ma != mb
    if not diff.any():
        return EquivalenceReport(True, space.size, space.size)
    flat = int(np.flatnonzero(diff.reshape(-1))[0])
    idx = np.unravel_index(flat, space.shape)
    x = space.at(idx)
    label = lambda m: A_LABEL if m[idx] else U_LABEL  # noqa: E731
    return EquivalenceReport(False, flat + 1, space.size, (x, label(ma), label(mb)))


# --- flattening a veto-free representation -----------------------------------------


@dataclass(frozen=True)
class UnanimizeResult:
    representation: ModelERepresentation
    candidates: tuple
    admissible: bool
    verification: EquivalenceReport | None


def _bottom_levels(r: ModelERepresentation) -> tuple:
    out = []
    for w, scale in zip(r.W, r.space.scales):
        # W-minimum: a level that every other level is at least as good as
        bottom = next(v for v in scale.levels if w.matrix[:, w.position(v)].all())
        out.append(bottom)
    return tuple(out)


def unanimize(r: ModelERepresentation, verify: bool = True, samples: int = 20000, seed: int = 0) -> UnanimizeResult:
    """Replace the coalition family by unanimity, keeping the semiorders.

    Each profile ``p`` and each minimal winning coalition ``I`` yields the
    profile equal to ``p`` on ``I`` and to the bottom level elsewhere.
    Duplicates and candidates that W-dominate another candidate are dropped.
    The result is compared with the input on the whole space when it is
    enumerable and on ``samples`` random alternatives otherwise.
    """
    if r.has_veto:
        raise PreconditionError(
            "flattening requires a representation without discordance; "
            "use build_unanimous_representation on the materialised partition instead"
        )
    x0 = _bottom_levels(r)
    candidates = []
    for p in r.profiles:
        for coalition in r.family.minimal():
            c = tuple(p[i] if i in coalition else x0[i] for i in range(r.space.n))
            if c not in candidates:
                candidates.append(c)
    kept = []
    for k, c in enumerate(candidates):
        # drop c if it is W-above another candidate, or W-equivalent to an earlier one
        redundant = False
        for j, d in enumerate(candidates):
            if j == k or not r.w_dominates(c, d):
                continue
            if not r.w_dominates(d, c) or j < k:
                redundant = True
                break
        if not redundant:
            kept.append(c)
    out = ModelERepresentation(
        r.space, r.S_rel, r.V_rel, CoalitionFamily.unanimous(r.space.n), kept, check_profiles=False, rule=r.rule
    )
    s = out.outranking_matrix(out.profiles)
    admissible = not bool((s & ~s.T).any())
    report = None
    if verify:
        if r.space.size <= enumeration_cap():
            report = verify_equivalence(r, out, r.space)
        else:
            report = _sampled_equivalence(r, out, samples, seed)
    return UnanimizeResult(out, tuple(candidates), admissible, report)


def _sampled_equivalence(a, b, samples: int, seed: int) -> EquivalenceReport:
    rng = np.random.default_rng(seed)
    space = a.space
    for k in range(samples):
        idx = tuple(int(rng.integers(0, m)) for m in space.shape)
        x = space.at(idx)
        la, lb = a.assign(x), b.assign(x)
        if la != lb:
            return EquivalenceReport(False, k + 1, space.size, (x, la, lb))
    return EquivalenceReport(True, samples, space.size)


# --- decomposable representation -------------------------------------------------


@dataclass(frozen=True)
class DecomposableRepresentation:
    """Per-attribute value functions and a monotone decision table over rank vectors.

    ``u[i]`` maps each level to its rank among the classes of the induced
    weak order. The table accepts a rank vector iff it is at least one of the
    ``minimal_ranks`` coordinatewise.
    """

    space: ProductSpace
    u: tuple
    minimal_ranks: tuple
    rank_counts: tuple

    def values(self, x) -> tuple:
        return tuple(ui[v] for ui, v in zip(self.u, x))

    def table(self, ranks) -> int:
        """+1 on accepted rank vectors, -1 elsewhere."""
        ranks = tuple(ranks)
        return 1 if any(all(a >= b for a, b in zip(ranks, m)) for m in self.minimal_ranks) else -1

    def accepts(self, x) -> bool:
        return self.table(self.values(x)) > 0

    def assign(self, x) -> str:
        return A_LABEL if self.accepts(x) else U_LABEL

    @property
    def mask(self) -> np.ndarray:
        table = self.table_array()
        idx = np.ix_(*[[int(ui[v]) for v in s.levels] for ui, s in zip(self.u, self.space.scales)])
        return table[idx]

    def table_array(self) -> np.ndarray:
        shape = self.rank_counts
        out = np.zeros(shape, dtype=bool)
        for m in self.minimal_ranks:
            out[tuple(slice(int(v), None) for v in m)] = True
        return out


def build_decomposable_representation(p: TwofoldPartition) -> DecomposableRepresentation:
    _require_linear(p)
    q = quotient(p)
    u = tuple({v: Fraction(r) for v, r in q.level_rank[i].items()} for i in range(p.space.n))
    mins = tuple(tuple(Fraction(int(v)) for v in row) for row in np.argwhere(_minimal_mask(q.partition.mask)))
    rep = DecomposableRepresentation(p.space, u, mins, q.partition.space.shape)
    table = rep.table_array()
    if not np.array_equal(table, q.partition.mask):
        raise InternalConsistencyError("decomposable table disagrees with the quotient partition")
    idx = np.ix_(*[[q.level_rank[i][v] for v in s.levels] for i, s in enumerate(p.space.scales)])
    if not np.array_equal(table[idx], p.mask):
        raise InternalConsistencyError("decomposable representation does not reproduce the partition")
    return rep


# --- additive representability -------------------------------------------------------


@dataclass(frozen=True)
class AdditiveResult:
    """Outcome of the additive test.

    When feasible, ``u[i][level]`` is a witness with ``sum u_i(x_i) > 0`` exactly
    on ``A``. When infeasible, ``certificate`` holds nonnegative weights on ``A``
    (summing to 1) and on ``U`` whose level-incidence vectors coincide, which
    rules out every additive representation.
    """

    feasible: bool
    u: tuple | None = None
    margin: Fraction | None = None
    certificate: tuple | None = None


def additive_score(u: Sequence[dict], x) -> Fraction:
    return sum((ui[v] for ui, v in zip(u, x)), Fraction(0))


def verify_additive_witness(p: TwofoldPartition, u: Sequence[dict]) -> bool:
    return all((additive_score(u, x) > 0) == p.accepts(x) for x in p.space.enumerate())


def verify_additive_certificate(p: TwofoldPartition, certificate) -> bool:
    a, b = certificate
    if any(w < 0 for w in a.values()) or any(w < 0 for w in b.values()):
        return False
    if sum(a.values()) != 1:
        return False
    if any(not p.accepts(x) for x in a) or any(p.accepts(x) for x in b):
        return False
    for i, scale in enumerate(p.space.scales):
        for level in scale.levels:
            lhs = sum((w for x, w in a.items() if x[i] == level), Fraction(0))
            rhs = sum((w for x, w in b.items() if x[i] == level), Fraction(0))
            if lhs != rhs:
                return False
    return True


def check_additive_representable(p: TwofoldPartition, cap: int = LP_CELL_CAP) -> AdditiveResult:
    """Decide whether some ``u_i`` give ``x in A  iff  sum u_i(x_i) > 0``.

    The strict inequalities get a common margin ``e`` that is maximised up
    to 1. A positive optimum yields a witness. A zero optimum is confirmed by a
    second, independent linear program that builds the infeasibility
    certificate; both are checked by substitution before returning.
    """
    space = p.space
    alts = list(space.enumerate())
    offsets = list(itertools.accumulate([0] + [len(s) for s in space.scales]))
    nu = offsets[-1]
    # columns: u+ (nu), u- (nu), e
    nvar = 2 * nu + 1
    if (len(alts) + 1) * (nvar + 2 * len(alts) + 2) > cap:
        raise ResourceCapError(f"additive system with {len(alts)} rows exceeds the cap", size=len(alts), cap=cap)
    A_ub, b_ub = [], []
    for x in alts:
        idx = space.index_of(x)
        row = [0] * nvar
        sign = -1 if p.accepts(x) else 1
        for i, k in enumerate(idx):
            row[offsets[i] + k] = sign
            row[nu + offsets[i] + k] = -sign
        if p.accepts(x):
            row[-1] = 1
        A_ub.append(row)
        b_ub.append(0)
    cap_row = [0] * nvar
    cap_row[-1] = 1
    A_ub.append(cap_row)
    b_ub.append(1)
    c = [0] * nvar
    c[-1] = 1
    res = solve_lp(c, A_ub, b_ub, cap=cap)
    if res.status != OPTIMAL:
        raise InternalConsistencyError(f"margin program ended as {res.status}")
    if res.value > 0:
        u = tuple(
            {lvl: res.x[offsets[i] + k] - res.x[nu + offsets[i] + k] for k, lvl in enumerate(s.levels)}
            for i, s in enumerate(space.scales)
        )
        if not verify_additive_witness(p, u):
            raise InternalConsistencyError("additive witness fails substitution")
        return AdditiveResult(True, u, res.value)
    cert = _additive_certificate(p, alts, offsets, cap)
    if cert is None or not verify_additive_certificate(p, cert):
        raise InternalConsistencyError("zero margin but no valid infeasibility certificate")
    return AdditiveResult(False, certificate=cert)


def _additive_certificate(p: TwofoldPartition, alts, offsets, cap):
    space = p.space
    acc = [x for x in alts if p.accepts(x)]
    rej = [x for x in alts if not p.accepts(x)]
    cols = acc + rej
    nrow = offsets[-1]
    A_eq = [[0] * len(cols) for _ in range(nrow + 1)]
    for j, x in enumerate(cols):
        sign = 1 if j < len(acc) else -1
        for i, k in enumerate(space.index_of(x)):
            A_eq[offsets[i] + k][j] = sign
        if j < len(acc):
            A_eq[nrow][j] = 1
    b_eq = [0] * nrow + [1]
    res = solve_lp([0] * len(cols), A_eq=A_eq, b_eq=b_eq, cap=cap)
    if res.status == INFEASIBLE:
        return None
    a = {x: w for x, w in zip(acc, res.x[: len(acc)]) if w}
    b = {x: w for x, w in zip(rej, res.x[len(acc):]) if w}
    return a, b


# --- conversions between models ---------------------------------------------------


@dataclass(frozen=True)
class EncodedSortingModel:
    """An outranking model on rank-encoded scales, with the level-to-rank maps."""

    model: SortingModel
    source_space: ProductSpace
    encoding: tuple

    def encode(self, x) -> tuple:
        return tuple(Fraction(e[v]) for e, v in zip(self.encoding, x))

    def assign(self, x) -> str:
        x = self.source_space.validate(x)
        return self.model.assign(self.encode(x))

    def acceptance_mask(self) -> np.ndarray:
        inner = acceptance_mask(self.model)
        idx = np.ix_(*[[e[v] for v in s.levels] for e, s in zip(self.encoding, self.source_space.scales)])
        return inner[idx]

    @property
    def space(self) -> ProductSpace:
        return self.source_space

    @property
    def mask(self) -> np.ndarray:
        return self.acceptance_mask()


def _w_ranks(w: FiniteRelation) -> dict:
    score = w.matrix.sum(axis=1)
    distinct = sorted(set(int(s) for s in score))
    return {v: distinct.index(int(s)) for v, s in zip(w.carrier, score)}


def to_etrinb_pc(r: ModelERepresentation) -> EncodedSortingModel:
    """A unanimous veto-free representation as an ELECTRE I model with ``lambda = 1``.

    Levels are encoded by their rank in ``W_i``; each profile becomes, on every
    attribute, the lowest rank whose levels are ``S_i``-related to it.
    Indifference and preference thresholds are 0, weights are equal and there
    is no veto.
    """
    n = r.space.n
    if not r.family.is_unanimous:
        raise PreconditionError("conversion needs a unanimous coalition family")
    if r.has_veto:
        raise PreconditionError("conversion needs a representation without vetoes")
    ranks = [_w_ranks(w) for w in r.W]
    scales = tuple(
        Scale.numeric(s.attribute_id, range(max(rk.values()) + 1), s.name) for s, rk in zip(r.space.scales, ranks)
    )
    space = ProductSpace(scales)
    encoded = []
    for p in r.profiles:
        encoded.append(tuple(
            Fraction(min(rk[y] for y in s.levels if rel.holds(y, p[i])))
            for i, (s, rel, rk) in enumerate(zip(r.space.scales, r.S_rel, ranks))
        ))
    # an encoded profile above another adds nothing under unanimity and would break admissibility
    kept = [e for e in dict.fromkeys(encoded)
            if not any(o != e and all(a >= b for a, b in zip(e, o)) for o in encoded)]
    om = OutrankingModel(Variant.I, (Thresholds(0, 0),) * n, (Fraction(1, n),) * n, 1)
    model = EncodedSortingModel(SortingModel(space, om, kept, r.rule), r.space, tuple(ranks))
    report = verify_equivalence(r, model, r.space)
    if not report:
        raise PreconditionError(f"rank-encoded model differs from the representation: {report.summary()}")
    return model


def model_e_from_etrinb_i(m: SortingModel, verify: bool = True) -> ModelERepresentation:
    """Threshold semiorders, strict veto semiorders and weighted coalitions from an ELECTRE I model."""
    om = m.outranking
    if om.variant is not Variant.I:
        raise PreconditionError("direct construction needs the ELECTRE I variant; materialise the partition instead")
    S = [threshold_relation(s.levels, th.qt) for s, th in zip(m.space.scales, om.thresholds)]
    V = [FiniteRelation.empty(s.levels) if th.vt is None else strict_threshold_relation(s.levels, th.vt)
         for s, th in zip(m.space.scales, om.thresholds)]
    rep = ModelERepresentation(m.space, S, V, CoalitionFamily.from_weights(om.weights, om.lam), m.profiles, rule=m.rule)
    if verify and m.space.size <= enumeration_cap():
        report = verify_equivalence(m, rep, m.space)
        if not report:
            raise InternalConsistencyError(f"abstract model differs from the outranking model: {report.summary()}")
    return rep


# --- bounded representation search -------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    successes: tuple
    pool: tuple
    families_tried: int
    candidates_tried: int

    @property
    def all_unanimous(self) -> bool:
        return all(f.is_unanimous for _, f in self.successes)


def _to_bits(mask: np.ndarray) -> np.ndarray:
    """Pack a boolean array into little-endian uint64 words."""
    packed = np.packbits(mask.reshape(-1), bitorder="little")
    packed = np.pad(packed, (0, -packed.size % 8))
    return packed.view(np.uint64)


def search_unanimity_forced(p: TwofoldPartition, pool: Sequence | None = None, families=None,
                            rule: str = PC, max_pool: int = 22, cap: int = SEARCH_CAP) -> SearchReport:
    """Every (profile set, coalition family) reproducing ``p`` within the candidate universe.

    The semiorders are the induced weak orders and there are no vetoes.
    Profiles are drawn from ``pool`` (default: ``A``, since every profile of a
    representation is accepted) and families from ``families`` (default: every
    upward-closed family without the empty coalition). For each family, all
    subsets of the pool are evaluated at once by doubling: the table for
    subsets containing pool element ``b`` is the table without it, combined with
    ``b``'s own masks.
    """
    _require_linear(p)
    space = p.space
    pool = tuple(space.validate(x) for x in (pool if pool is not None else p.accepted()))
    if len(pool) > max_pool:
        raise ResourceCapError(f"profile pool has {len(pool)} elements, above {max_pool}", size=len(pool), cap=max_pool)
    fams = list(families) if families is not None else enumerate_families(space.n)
    total = len(fams) * (1 << len(pool))
    if total > cap:
        raise ResourceCapError(f"search would try {total} candidates, above the cap of {cap}", size=total, cap=cap)
    S = [induced_weak_order(p, i) for i in range(space.n)]
    target = _to_bits(p.mask)
    successes = []
    k = len(pool)
    for fam in fams:
        rep = ModelERepresentation(space, S, None, fam, pool, check_profiles=False, rule=rule)
        xs_p, p_sx = rep._grid_tables(pool, [fam] * k)
        fwd = [_to_bits(xs_p[..., j]) for j in range(k)]
        strict = [_to_bits(p_sx[..., j] & ~xs_p[..., j]) for j in range(k)]
        s_pool = rep.outranking_matrix(pool)
        conflict = [sum(1 << j for j in range(k) if (s_pool[b, j] and not s_pool[j, b]) or (s_pool[j, b] and not s_pool[b, j]))
                    for b in range(k)]
        words = target.size
        up = np.zeros((1, words), dtype=np.uint64)
        down = np.zeros((1, words), dtype=np.uint64)
        ok = np.ones(1, dtype=bool)
        for b in range(k):
            lower = np.arange(1 << b, dtype=np.int64)
            up = np.concatenate([up, up | fwd[b]])
            down = np.concatenate([down, down | strict[b]])
            ok = np.concatenate([ok, ok & ((lower & conflict[b]) == 0)])
        if rule == PC:
            accepted = up & ~down
        else:
            accepted = up
        hit = ok & (accepted == target).all(axis=1)
        hit[0] = False
        for s in np.flatnonzero(hit):
            chosen = tuple(pool[j] for j in range(k) if int(s) >> j & 1)
            successes.append((chosen, fam))
    return SearchReport(tuple(successes), pool, len(fams), total)


def check_representation(p: TwofoldPartition, profiles, family: CoalitionFamily, rule: str = PC):
    """Try one candidate with induced weak orders and no vetoes.

    Returns ``(True, None)`` if it reproduces ``p``, ``(False, (x, expected, got))``
    with the first contradicting alternative otherwise, and ``(False, ("inadmissible", q, p))``
    when the assignments agree but two profiles strictly outrank each other.
    """
    S = [induced_weak_order(p, i) for i in range(p.space.n)]
    rep = ModelERepresentation(p.space, S, None, family, profiles, check_profiles=False, rule=rule)
    report = verify_equivalence(p, rep, p.space)
    if not report:
        x, expected, got = report.first_difference
        return False, (x, expected, got)
    s = rep.outranking_matrix(rep.profiles)
    strict = s & ~s.T
    if strict.any():
        a, b = map(int, np.argwhere(strict)[0])
        return False, ("inadmissible", rep.profiles[a], rep.profiles[b])
    return True, None


@dataclass(frozen=True)
class Refutation:
    """Per-family outcome of trying one profile set: ``None`` where it works, else the contradiction."""

    profiles: tuple
    contradictions: tuple

    @property
    def refuted(self) -> bool:
        return all(c is not None for _, c in self.contradictions)

    def __bool__(self) -> bool:
        return self.refuted


def refute_profiles(p: TwofoldPartition, profiles, families=None, rule: str = PC) -> Refutation:
    """Try ``profiles`` with every candidate family and record why each attempt fails."""
    fams = list(families) if families is not None else enumerate_families(p.space.n)
    profiles = tuple(p.space.validate(x) for x in profiles)
    out = []
    for fam in fams:
        ok, why = check_representation(p, profiles, fam, rule)
        out.append((fam, None if ok else why))
    return Refutation(profiles, tuple(out))


def e_tilde_from_model_e(r: ModelERepresentation) -> ETildeRepresentation:
    """The same model with the shared family attached to every profile."""
    return ETildeRepresentation(r.space, r.S_rel, r.V_rel, [(p, r.family) for p in r.profiles])


__all__ = [
    "AdditiveResult",
    "DecomposableRepresentation",
    "EncodedSortingModel",
    "EquivalenceReport",
    "SearchReport",
    "UnanimizeResult",
    "additive_score",
    "assignment_mask",
    "build_decomposable_representation",
    "build_unanimous_representation",
    "check_additive_representable",
    "check_representation",
    "e_tilde_from_model_e",
    "minimally_acceptable",
    "model_e_from_etrinb_i",
    "Refutation",
    "refute_profiles",
    "search_unanimity_forced",
    "to_etrinb_pc",
    "unanimize",
    "upward_closure_mask",
    "verify_additive_certificate",
    "verify_additive_witness",
    "verify_equivalence",
]
