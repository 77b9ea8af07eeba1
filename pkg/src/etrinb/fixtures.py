"""Small worked models and partitions used by the tests, the CLI demos and the README."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .axioms import TwofoldPartition
from .models import PC, SOME, CoalitionFamily, ModelERepresentation, SortingModel
from .outranking import OutrankingModel, Thresholds, Variant
from .scales import ProductSpace, Scale

HALF = Fraction(1, 2)
TENTH = Fraction(1, 10)

TWO_PROFILES = ((8, 7, 5), (5, 6, 8))

_F = Fraction


def _q(*values) -> tuple:
    return tuple(_F(v) for v in values)


# minimal acceptable alternatives of the three-criterion, two-profile model on half-integers
TWO_PROFILE_MINIMAL = tuple(
    _q(*row)
    for row in (
        (7, 6, 2), (7, 4, 4), (5, 6, 4), (7, "5.5", "3.5"), ("6.5", 6, "3.5"), ("6.5", "5.5", 4),
        (4, 5, 5), (4, 3, 7), (2, 5, 7), (4, "4.5", "6.5"), ("3.5", 5, "6.5"), ("3.5", "4.5", 7),
    )
)

# the same with step indices and a veto at 3
TWO_PROFILE_STEP_MINIMAL = tuple(
    _q(*row) for row in ((7, 6, 2), (7, 4, 4), (5, 6, 4), (4, 5, 5), (4, 3, 7), (2, 5, 7))
)

SUM_RULE_LEVELS = (25, 30, 34, 37, 39)
SUM_RULE_THRESHOLD = 106
SUM_RULE_MINIMAL = tuple(
    _q(*row)
    for row in (
        (37, 37, 34), (39, 34, 34), (39, 37, 30), (37, 30, 39),
        (37, 34, 37), (34, 39, 34), (39, 30, 37), (30, 39, 37),
        (34, 37, 37), (34, 34, 39), (37, 39, 30), (30, 37, 39),
    )
)

TWO_PAIRS_ACCEPTED = ("1100", "0011", "1110", "1101", "1011", "0111", "1111")


def grid_space(step, n: int = 3, top=10, prefix: str = "g") -> ProductSpace:
    """``n`` attributes with levels ``0, step, ..., top``."""
    return ProductSpace(tuple(Scale.from_range(f"{prefix}{i + 1}", 0, top, step) for i in range(n)))


def two_profile_electre3_model(step=HALF, rule: str = SOME) -> SortingModel:
    """Two profiles, thresholds 1/2/4, equal weights, cutting level 3/5.

    The tabulated minimal alternatives hold for the ``some`` rule. Under the
    two-clause ``pc`` rule, profiles that strictly outrank an alternative
    reject it, and the minimal set changes.
    """
    om = OutrankingModel(Variant.III, (Thresholds(1, 2, 4),) * 3, (_F(1, 3),) * 3, _F(3, 5))
    return SortingModel(grid_space(step), om, TWO_PROFILES, rule)


def two_profile_electre1_model(step=HALF, rule: str = SOME) -> SortingModel:
    """As above with step indices: indifference and preference at 1, veto at 3."""
    om = OutrankingModel(Variant.I, (Thresholds(1, 1, 3),) * 3, (_F(1, 3),) * 3, _F(3, 5))
    return SortingModel(grid_space(step), om, TWO_PROFILES, rule)


def two_profile_threshold_representation(step=HALF, veto: bool = True, rule: str = SOME) -> ModelERepresentation:
    """Threshold semiorders at 1, vetoes at 3 (optional), any two of three criteria win."""
    space = grid_space(step)
    v = 3 if veto else None
    return ModelERepresentation.from_thresholds(
        space, (1,) * 3, (v,) * 3, CoalitionFamily.at_least(3, 2), TWO_PROFILES, rule=rule
    )


def sum_rule_space() -> ProductSpace:
    return ProductSpace.uniform(3, SUM_RULE_LEVELS)


def sum_rule_partition() -> TwofoldPartition:
    """Accept when the three evaluations sum to at least 106."""
    space = sum_rule_space()
    return TwofoldPartition.from_predicate(space, lambda x: sum(x) >= SUM_RULE_THRESHOLD)


def single_profile_electre3_model() -> SortingModel:
    """One profile at the top, thresholds 0/9/14, cutting level 16/27; reproduces the sum rule."""
    om = OutrankingModel(Variant.III, (Thresholds(0, 9, 14),) * 3, (_F(1, 3),) * 3, _F(16, 27))
    return SortingModel(sum_rule_space(), om, [(39, 39, 39)], PC)


def sum_six_space() -> ProductSpace:
    return ProductSpace.uniform(4, (0, 1, 2))


def sum_six_partition() -> TwofoldPartition:
    """``{0,1,2}^4`` with acceptance when the coordinates sum to at least 6."""
    return TwofoldPartition.from_predicate(sum_six_space(), lambda x: sum(x) >= 6)


def level_class(space: ProductSpace, total: int) -> list[tuple]:
    """Alternatives whose coordinates sum to ``total``."""
    return [x for x in space.enumerate() if sum(x) == total]


def binary_space(n: int) -> ProductSpace:
    return ProductSpace.uniform(n, (0, 1))


def bits(word: str) -> tuple:
    return tuple(_F(int(c)) for c in word)


def two_pairs_partition() -> TwofoldPartition:
    """Monotone partition of ``{0,1}^4`` accepting 1100, 0011 and everything above them."""
    return TwofoldPartition.from_accepted(binary_space(4), [bits(w) for w in TWO_PAIRS_ACCEPTED])


def xor_partition() -> TwofoldPartition:
    """``{0,1}^2`` accepting exactly the two alternatives with one coordinate set."""
    return TwofoldPartition.from_accepted(binary_space(2), [bits("01"), bits("10")])


def top_only_partition(space: ProductSpace) -> TwofoldPartition:
    mask = np.zeros(space.shape, dtype=bool)
    mask[(-1,) * space.n] = True
    return TwofoldPartition(space, mask)
