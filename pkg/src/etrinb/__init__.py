"""Two-category sorting with outranking models, and the conjoint structure of their partitions."""

from .axioms import (
    A_LABEL,
    U_LABEL,
    TwofoldPartition,
    check_linearity,
    check_respects_dominance_partition,
    induced_weak_order,
    is_influential,
    quotient,
)
from .combinatorics import (
    ChainProfile,
    brute_force_max_antichain,
    count_monotone_partitions,
    dilworth_width,
    max_antichain_size,
    sperner_number,
)
from .errors import (
    DegeneratePartitionError,
    DimensionError,
    EtriError,
    InternalConsistencyError,
    NonLinearPartitionError,
    PreconditionError,
    ProfileValidationError,
    ResourceCapError,
    SymbolicScaleError,
    ValidationError,
)
from .models import (
    PC,
    PD,
    SOME,
    CoalitionFamily,
    ETildeRepresentation,
    ModelERepresentation,
    SortingModel,
    assign_model_e,
    assign_model_e_tilde,
    assign_pc,
    assign_pd,
    assign_some,
    partition_from_model,
)
from .outranking import (
    OutrankingModel,
    Thresholds,
    Variant,
    concordance,
    concordance_index,
    credibility,
    discordance_index,
    outranks,
)
from .relations import FiniteRelation, is_semiorder, is_strict_semiorder
from .representations import (
    build_decomposable_representation,
    build_unanimous_representation,
    check_additive_representable,
    minimally_acceptable,
    model_e_from_etrinb_i,
    search_unanimity_forced,
    to_etrinb_pc,
    unanimize,
    verify_equivalence,
)
from .scales import ProductSpace, Scale, dominates, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "A_LABEL",
    "assign_model_e",
    "assign_model_e_tilde",
    "assign_pc",
    "assign_pd",
    "assign_some",
    "brute_force_max_antichain",
    "build_decomposable_representation",
    "build_unanimous_representation",
    "ChainProfile",
    "check_additive_representable",
    "check_linearity",
    "check_respects_dominance_partition",
    "CoalitionFamily",
    "concordance",
    "concordance_index",
    "count_monotone_partitions",
    "credibility",
    "DegeneratePartitionError",
    "dilworth_width",
    "DimensionError",
    "discordance_index",
    "dominates",
    "ETildeRepresentation",
    "EtriError",
    "FiniteRelation",
    "format_rational",
    "induced_weak_order",
    "InternalConsistencyError",
    "is_influential",
    "is_semiorder",
    "is_strict_semiorder",
    "max_antichain_size",
    "minimally_acceptable",
    "model_e_from_etrinb_i",
    "ModelERepresentation",
    "NonLinearPartitionError",
    "OutrankingModel",
    "outranks",
    "parse_rational",
    "partition_from_model",
    "PC",
    "PD",
    "PreconditionError",
    "ProductSpace",
    "ProfileValidationError",
    "quotient",
    "ResourceCapError",
    "Scale",
    "search_unanimity_forced",
    "SOME",
    "SortingModel",
    "sperner_number",
    "SymbolicScaleError",
    "Thresholds",
    "to_etrinb_pc",
    "TwofoldPartition",
    "U_LABEL",
    "unanimize",
    "ValidationError",
    "Variant",
    "verify_equivalence",
]
