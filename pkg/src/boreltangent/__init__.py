"""Strongly stable monomial ideals and Hilbert-scheme tangent spaces.

Enumerate the strongly stable (Borel-fixed) monomial ideals of a given
colength, compute the tangent-space dimension T(I) = dim Hom(I, R/I) at
each by two independent exact algorithms, and run the colength-scale scans
behind the T_max tables and the monotonicity / necessary-condition /
tetrahedral-maximum checks.

Convention: x1 is the Borel-dominant variable, so pure-power exponents of
a strongly stable Artinian ideal satisfy m_1 <= m_2 <= ... <= m_N.
"""

from .enumeration import (
    EnumerationLimitError,
    EnumFilter,
    count_strongly_stable,
    enumerate_strongly_stable,
)
from .monomials import (
    ALIASES,
    DimensionMismatchError,
    Exponent,
    IdealSyntaxError,
    InvalidStaircaseError,
    MonomialIdeal,
    NonArtinianIdealError,
    PurePowerProfile,
    RedundantGeneratorWarning,
    StandardSet,
    UnknownVariableError,
    colength,
    divides,
    format_ideal,
    ideal_from_json,
    ideal_to_json,
    is_strongly_stable,
    k_of_l,
    lcm_exp,
    minimal_generators,
    parse_ideal,
    pure_power_profile,
    standard_set,
    tetrahedral,
)
from .region3d import (
    RegionSlice,
    UnsupportedDimensionError,
    default_size_filter,
    region_cells,
    region_component_count,
    region_slice,
    write_discrepancy_report,
)
from .scan import (
    BudgetExceededError,
    MonotonicityVerdict,
    NecessaryVerdict,
    ScanKey,
    ScanRecord,
    TableCell,
    TetrahedralVerdict,
    check_monotonicity,
    check_necessary_condition,
    check_tetrahedral_max,
    power_ideal,
    reproduce_published_table,
    scan_colength,
    scan_colength_range,
    t_max,
)
from .tangent import (
    GradedTangentReport,
    OracleSizeError,
    VerificationError,
    alpha_support_box,
    bareiss_rank,
    constraint_rank,
    graded_dimension,
    tangent_dimension,
    tangent_dimension_oracle,
    verify_tangent,
)

__version__ = "0.1.0"

__all__ = [
    "ALIASES",
    "BudgetExceededError",
    "DimensionMismatchError",
    "EnumFilter",
    "EnumerationLimitError",
    "Exponent",
    "GradedTangentReport",
    "IdealSyntaxError",
    "InvalidStaircaseError",
    "MonomialIdeal",
    "MonotonicityVerdict",
    "NecessaryVerdict",
    "NonArtinianIdealError",
    "OracleSizeError",
    "PurePowerProfile",
    "RedundantGeneratorWarning",
    "RegionSlice",
    "ScanKey",
    "ScanRecord",
    "StandardSet",
    "TableCell",
    "TetrahedralVerdict",
    "UnknownVariableError",
    "UnsupportedDimensionError",
    "VerificationError",
    "alpha_support_box",
    "bareiss_rank",
    "check_monotonicity",
    "check_necessary_condition",
    "check_tetrahedral_max",
    "colength",
    "constraint_rank",
    "count_strongly_stable",
    "default_size_filter",
    "divides",
    "enumerate_strongly_stable",
    "format_ideal",
    "graded_dimension",
    "ideal_from_json",
    "ideal_to_json",
    "is_strongly_stable",
    "k_of_l",
    "lcm_exp",
    "minimal_generators",
    "parse_ideal",
    "power_ideal",
    "pure_power_profile",
    "region_cells",
    "region_component_count",
    "region_slice",
    "reproduce_published_table",
    "scan_colength",
    "scan_colength_range",
    "standard_set",
    "t_max",
    "tangent_dimension",
    "tangent_dimension_oracle",
    "tetrahedral",
    "verify_tangent",
    "write_discrepancy_report",
]
