"""Binary relations on small finite carriers.

A relation is a dense boolean matrix over an ordered carrier. Predicates that
can fail return a :class:`Verdict` carrying a smallest-possible witness, which
keeps property-test failures readable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import PreconditionError, ValidationError


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def _counts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float matmul is exact for the counts involved (< 2**53) and far faster
    # than numpy's integer matmul.
    return a.astype(np.float64) @ b.astype(np.float64)


class FiniteRelation:
    """A binary relation ``T`` on an ordered finite carrier."""

    __slots__ = ("carrier", "matrix", "_pos")

    def __init__(self, carrier: Sequence[Hashable], matrix):
        carrier = tuple(carrier)
        matrix = np.array(matrix, dtype=bool)
        if matrix.shape != (len(carrier), len(carrier)):
            raise ValidationError(
                f"relation matrix shape {matrix.shape} does not match carrier size {len(carrier)}"
            )
        if len(set(carrier)) != len(carrier):
            raise ValidationError("relation carrier has duplicate elements")
        matrix.setflags(write=False)
        self.carrier = carrier
        self.matrix = matrix
        self._pos = {c: k for k, c in enumerate(carrier)}

    @classmethod
    def from_pairs(cls, carrier, pairs: Iterable[tuple]) -> "FiniteRelation":
        carrier = tuple(carrier)
        pos = {c: k for k, c in enumerate(carrier)}
        m = np.zeros((len(carrier), len(carrier)), dtype=bool)
        for a, b in pairs:
            m[pos[a], pos[b]] = True
        return cls(carrier, m)

    @classmethod
    def from_predicate(cls, carrier, pred: Callable[[object, object], bool]) -> "FiniteRelation":
        carrier = tuple(carrier)
        m = np.array([[bool(pred(a, b)) for b in carrier] for a in carrier], dtype=bool)
        return cls(carrier, m.reshape(len(carrier), len(carrier)))

    @classmethod
    def empty(cls, carrier) -> "FiniteRelation":
        carrier = tuple(carrier)
        return cls(carrier, np.zeros((len(carrier), len(carrier)), dtype=bool))

    @classmethod
    def full(cls, carrier) -> "FiniteRelation":
        carrier = tuple(carrier)
        return cls(carrier, np.ones((len(carrier), len(carrier)), dtype=bool))

    @classmethod
    def identity(cls, carrier) -> "FiniteRelation":
        carrier = tuple(carrier)
        return cls(carrier, np.eye(len(carrier), dtype=bool))

    def __len__(self) -> int:
        return len(self.carrier)

    def __repr__(self) -> str:
        return f"FiniteRelation(|carrier|={len(self.carrier)}, pairs={int(self.matrix.sum())})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRelation):
            return NotImplemented
        return self.carrier == other.carrier and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.carrier, self.matrix.tobytes()))

    def position(self, a) -> int:
        try:
            return self._pos[a]
        except KeyError:
            raise ValidationError(f"{a!r} is not in the relation carrier") from None

    def holds(self, a, b) -> bool:
        return bool(self.matrix[self.position(a), self.position(b)])

    __call__ = holds

    def pairs(self) -> list[tuple]:
        rows, cols = np.nonzero(self.matrix)
        return [(self.carrier[r], self.carrier[c]) for r, c in zip(rows, cols)]

    def _same_carrier(self, other: "FiniteRelation") -> None:
        if self.carrier != other.carrier:
            raise ValidationError("relations are defined on different carriers")

    def converse(self) -> "FiniteRelation":
        return FiniteRelation(self.carrier, self.matrix.T)

    def complement(self) -> "FiniteRelation":
        return FiniteRelation(self.carrier, ~self.matrix)

    def __and__(self, other: "FiniteRelation") -> "FiniteRelation":
        self._same_carrier(other)
        return FiniteRelation(self.carrier, self.matrix & other.matrix)

    def __or__(self, other: "FiniteRelation") -> "FiniteRelation":
        self._same_carrier(other)
        return FiniteRelation(self.carrier, self.matrix | other.matrix)

    def issubset(self, other: "FiniteRelation") -> bool:
        self._same_carrier(other)
        return not bool((self.matrix & ~other.matrix).any())

    def restrict(self, subset: Iterable) -> "FiniteRelation":
        subset = tuple(subset)
        idx = [self.position(a) for a in subset]
        return FiniteRelation(subset, self.matrix[np.ix_(idx, idx)])

    # elementary properties

    def is_reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    def is_irreflexive(self) -> bool:
        return not bool(self.matrix.diagonal().any())

    def is_complete(self) -> bool:
        return bool((self.matrix | self.matrix.T).all())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def is_asymmetric(self) -> bool:
        return not bool((self.matrix & self.matrix.T).any())

    def is_antisymmetric(self) -> bool:
        both = self.matrix & self.matrix.T
        np.fill_diagonal(both, False)
        return not bool(both.any())

    def is_transitive(self) -> bool:
        return transitivity_violation(self).ok

    def is_weak_order(self) -> bool:
        return self.is_complete() and self.is_transitive()

    def is_linear_order(self) -> bool:
        return self.is_weak_order() and self.is_antisymmetric()

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def is_ferrers(self) -> bool:
        return ferrers_violation(self).ok

    def is_semitransitive(self) -> bool:
        return semitransitivity_violation(self).ok


def asymmetric_part(t: FiniteRelation) -> FiniteRelation:
    return FiniteRelation(t.carrier, t.matrix & ~t.matrix.T)


def symmetric_part(t: FiniteRelation) -> FiniteRelation:
    return FiniteRelation(t.carrier, t.matrix & t.matrix.T)


def transitivity_violation(t: FiniteRelation) -> Verdict:
    m = t.matrix
    bad = (_counts(m, m) > 0) & ~m
    if not bad.any():
        return PASS
    x, z = map(int, np.argwhere(bad)[0])
    y = int(np.flatnonzero(m[x] & m[:, z])[0])
    c = t.carrier
    return Verdict(False, (c[x], c[y], c[z]), "x T y and y T z but not x T z")


def ferrers_violation(t: FiniteRelation) -> Verdict:
    """Look for ``x T y``, ``z T w`` with neither ``x T w`` nor ``z T y``.

    Such a quadruple exists exactly when two rows of the matrix are not
    nested, which is what is tested.
    """
    m = t.matrix
    out = _counts(m, ~m.T)  # out[x, z] = #{y : x T y and not z T y}
    crossing = (out > 0) & (out.T > 0)
    if not crossing.any():
        return PASS
    x, z = map(int, np.argwhere(crossing)[0])
    y = int(np.flatnonzero(m[x] & ~m[z])[0])
    w = int(np.flatnonzero(m[z] & ~m[x])[0])
    c = t.carrier
    return Verdict(False, (c[x], c[y], c[z], c[w]), "x T y and z T w but neither x T w nor z T y")


def semitransitivity_violation(t: FiniteRelation) -> Verdict:
    m = t.matrix
    chained = _counts(m, m) > 0  # some y with x T y T z
    gap = _counts(~m, ~m) > 0  # some w with not x T w and not w T z
    bad = chained & gap
    if not bad.any():
        return PASS
    x, z = map(int, np.argwhere(bad)[0])
    y = int(np.flatnonzero(m[x] & m[:, z])[0])
    w = int(np.flatnonzero(~m[x] & ~m[:, z])[0])
    c = t.carrier
    return Verdict(False, (c[x], c[y], c[z], c[w]), "x T y and y T z but neither x T w nor w T z")


def is_semiorder(t: FiniteRelation) -> Verdict:
    """Reflexive, Ferrers and semitransitive."""
    diag = t.matrix.diagonal()
    if not diag.all():
        k = int(np.flatnonzero(~diag)[0])
        return Verdict(False, (t.carrier[k],), "not reflexive")
    for check in (ferrers_violation, semitransitivity_violation):
        v = check(t)
        if not v:
            return v
    return PASS


def is_strict_semiorder(t: FiniteRelation) -> Verdict:
    """Irreflexive, Ferrers and semitransitive (hence asymmetric)."""
    diag = t.matrix.diagonal()
    if diag.any():
        k = int(np.flatnonzero(diag)[0])
        return Verdict(False, (t.carrier[k],), "not irreflexive")
    for check in (ferrers_violation, semitransitivity_violation):
        v = check(t)
        if not v:
            return v
    if not t.is_asymmetric():
        raise AssertionError("irreflexive Ferrers relation found not asymmetric")
    return PASS


def trace_weak_order(t: FiniteRelation) -> FiniteRelation:
    """Weak order induced by a Ferrers, semitransitive relation.

    ``a`` is ranked at least as high as ``b`` when everything ``b`` relates to,
    ``a`` relates to as well, and everything relating to ``a`` also relates to
    ``b``.
    """
    for check in (ferrers_violation, semitransitivity_violation):
        v = check(t)
        if not v:
            raise PreconditionError(f"trace needs a Ferrers, semitransitive relation: {v.reason} {v.witness}")
    m = t.matrix
    lost_successor = _counts(~m, m.T)  # [a, b] = #{c : b T c and not a T c}
    lost_predecessor = _counts(m.T, ~m)  # [a, b] = #{c : c T a and not c T b}
    return FiniteRelation(t.carrier, (lost_successor == 0) & (lost_predecessor == 0))


@dataclass(frozen=True)
class NestedChainVerdict:
    ok: bool
    weak_order: FiniteRelation | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_homogeneous_nested_chain(s: FiniteRelation, u: FiniteRelation) -> NestedChainVerdict:
    """Check ``s ⊆ u``, both semiorders, and that their traces meet in a weak order.

    On success the intersection of the two traces is returned as
    ``weak_order``; it is the order used to compare levels monotonically.
    """
    for name, rel in (("S", s), ("U", u)):
        v = is_semiorder(rel)
        if not v:
            return NestedChainVerdict(False, reason=f"{name} is not a semiorder: {v.reason} {v.witness}")
    if not s.issubset(u):
        return NestedChainVerdict(False, reason="S is not included in U")
    w = trace_weak_order(s) & trace_weak_order(u)
    if not w.is_complete():
        return NestedChainVerdict(False, reason="intersection of traces is not complete")
    return NestedChainVerdict(True, weak_order=w)


def _check_partial_order(t: FiniteRelation) -> None:
    if not t.is_reflexive():
        raise PreconditionError("relation is not reflexive")
    if not t.is_antisymmetric():
        raise PreconditionError("relation is not antisymmetric")
    if not t.is_transitive():
        raise PreconditionError("relation is not transitive")


def _extremal(t: FiniteRelation, subset, check_order: bool, minimal: bool) -> list:
    subset = list(dict.fromkeys(subset))
    if not subset:
        raise ValidationError("the subset must be nonempty")
    if check_order:
        _check_partial_order(t)
    idx = np.array([t.position(b) for b in subset])
    sub = t.matrix[np.ix_(idx, idx)]
    strict = sub & ~sub.T
    beaten = strict.any(axis=1) if minimal else strict.any(axis=0)
    return [b for b, hit in zip(subset, beaten) if not hit]


def minimal_elements(t: FiniteRelation, subset, check_order: bool = True) -> list:
    """Elements ``x`` of ``subset`` with no ``y`` in it such that ``x T y`` strictly.

    Quadratic in ``len(subset)``. The partial-order check is cubic in the
    carrier size and can be skipped for large, known-good relations.
    """
    return _extremal(t, subset, check_order, minimal=True)


def maximal_elements(t: FiniteRelation, subset, check_order: bool = True) -> list:
    return _extremal(t, subset, check_order, minimal=False)


def threshold_relation(levels: Sequence[Fraction], threshold) -> FiniteRelation:
    """``x T y`` iff ``x >= y - threshold``."""
    v = np.array(levels, dtype=object)
    t = Fraction(threshold)
    return FiniteRelation(levels, (v[:, None] >= v[None, :] - t).astype(bool))


def strict_threshold_relation(levels: Sequence[Fraction], threshold) -> FiniteRelation:
    """``x T y`` iff ``x > y + threshold``."""
    v = np.array(levels, dtype=object)
    t = Fraction(threshold)
    return FiniteRelation(levels, (v[:, None] > v[None, :] + t).astype(bool))


def weak_order_from_classes(carrier, classes: Sequence[Sequence]) -> FiniteRelation:
    """Weak order whose equivalence classes are listed from worst to best."""
    rank = {}
    for r, cls in enumerate(classes):
        for a in cls:
            if a in rank:
                raise ValidationError(f"{a!r} appears in two classes")
            rank[a] = r
    carrier = tuple(carrier)
    missing = [a for a in carrier if a not in rank]
    if missing or len(rank) != len(carrier):
        raise ValidationError("classes must partition the carrier")
    r = np.array([rank[a] for a in carrier])
    return FiniteRelation(carrier, r[:, None] >= r[None, :])


def weak_order_classes(t: FiniteRelation) -> list[list]:
    """Equivalence classes of a weak order, from worst to best."""
    if not t.is_weak_order():
        raise PreconditionError("relation is not a weak order")
    score = t.matrix.sum(axis=1)  # number of elements each one is at least as good as
    groups: dict[int, list] = {}
    for a, s in zip(t.carrier, score):
        groups.setdefault(int(s), []).append(a)
    return [groups[s] for s in sorted(groups)]


def dominance_relation(points: Sequence[tuple], index_rows: np.ndarray | None = None,
                       chunk: int = 1024) -> FiniteRelation:
    """Coordinatewise ``>=`` between the given points.

    ``index_rows`` may supply an integer array whose rows order the points
    (e.g. level indices); by default the coordinates themselves are compared.
    """
    points = [tuple(p) for p in points]
    rows = np.asarray(index_rows if index_rows is not None else points)
    m = np.empty((len(points), len(points)), dtype=bool)
    for start in range(0, len(points), chunk):
        block = rows[start:start + chunk]
        m[start:start + chunk] = (block[:, None, :] >= rows[None, :, :]).all(axis=2)
    return FiniteRelation(points, m)
