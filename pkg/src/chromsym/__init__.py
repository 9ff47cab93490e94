"""Exact chromatic symmetric function computations for finite simple graphs.

The expansion of X_G is available in the monomial, power sum, elementary,
and Schur bases, together with positivity deciders that return checkable
certificates.  All arithmetic is exact integer arithmetic.
"""

from .census import (
    StableCensus,
    count_of_type,
    has_connected_partition_of_type,
    has_stable_partition_of_type,
    stable_partition_census,
)
from .errors import (
    ContractViolation,
    EdgeCapacityError,
    FamilyError,
    GraphParseError,
    InconsistentSolve,
)
from .expansions import (
    SymFuncExpansion,
    csf_elementary,
    csf_monomial,
    csf_power,
    csf_schur,
    e_to_s,
    evaluate_ones,
    format_expansion,
    m_to_s,
    schur_coefficient,
)
from .graphs import (
    Graph,
    bipartition,
    build_family,
    chromatic_polynomial_at,
    component_orders,
    independence_number,
    is_connected,
    parse_family,
    parse_graph,
)
from .partitions import (
    Composition,
    Partition,
    conjugate,
    dominates,
    format_partition,
    multiplicity_factorial,
    parse_partition,
    partitions_of,
    sort_to_partition,
    subscript,
)
from .positivity import (
    ConnectedPartitionGap,
    DominanceWitness,
    FullExpansion,
    NegativeCoefficient,
    PositivityVerdict,
    UnbalancedBipartition,
    balanced_bipartition_test,
    dominance_witness,
    e_positivity_verdict,
    schur_positivity_verdict,
    validate_certificate,
    wolfgang_witness,
)
from .rimhooks import (
    SpecialTabloid,
    inverse_kostka,
    kostka,
    special_tabloids,
    tabloid_for_content,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "ConnectedPartitionGap",
    "ContractViolation",
    "DominanceWitness",
    "EdgeCapacityError",
    "FamilyError",
    "FullExpansion",
    "Graph",
    "GraphParseError",
    "InconsistentSolve",
    "NegativeCoefficient",
    "Partition",
    "PositivityVerdict",
    "SpecialTabloid",
    "StableCensus",
    "SymFuncExpansion",
    "UnbalancedBipartition",
    "balanced_bipartition_test",
    "bipartition",
    "build_family",
    "chromatic_polynomial_at",
    "component_orders",
    "conjugate",
    "count_of_type",
    "csf_elementary",
    "csf_monomial",
    "csf_power",
    "csf_schur",
    "dominance_witness",
    "dominates",
    "e_positivity_verdict",
    "e_to_s",
    "evaluate_ones",
    "format_expansion",
    "format_partition",
    "has_connected_partition_of_type",
    "has_stable_partition_of_type",
    "independence_number",
    "inverse_kostka",
    "is_connected",
    "kostka",
    "m_to_s",
    "multiplicity_factorial",
    "parse_family",
    "parse_graph",
    "parse_partition",
    "partitions_of",
    "schur_coefficient",
    "schur_positivity_verdict",
    "sort_to_partition",
    "special_tabloids",
    "stable_partition_census",
    "subscript",
    "tabloid_for_content",
    "validate_certificate",
    "wolfgang_witness",
]
