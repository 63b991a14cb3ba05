"""Characteristic classes and Spin/Kahler deciders for real Bott manifolds.

Everything is exact finite algebra over GF(2): no floating point, no
tolerances.  See the bottcore module docstring for the mathematical
setup and README.md for usage.
"""

from .bottcore import (
    BottMatrix,
    DElement,
    IdealDegree2Basis,
    InconsistencyError,
    KahlerPairing,
    ManifoldReport,
    MatrixParseError,
    PMatrix,
    analyze,
    bott_to_p,
    characteristic_ideal,
    cocycles,
    free_at_subset,
    has_full_holonomy,
    identical_columns_matrix,
    is_free,
    is_kahler,
    is_orientable,
    parse_bott,
    parse_pmatrix,
    pmatrix_to_bott,
    spin_general,
    spin_kahler_closed_form,
    spin_membership,
    sw_class,
)
from .census import (
    CSV_HEADER,
    CensusConfig,
    CensusRow,
    OracleDisagreementError,
    enumerate_bott,
    matrix_at,
    run_census,
)
from .euclid import (
    EuclideanMotion,
    acts_freely,
    check_against_rows,
    compose,
    element_of,
    generators,
    holonomy_matrix,
    square,
)
from .f2poly import (
    F2Matrix,
    GradedPolyF2,
    LinearFormF2,
    decode_degree2,
    degree2_count,
    degree2_index,
    degree2_monomials,
    encode_degree2,
    truncated_product,
)

__version__ = "0.1.0"

__all__ = [
    "BottMatrix",
    "CSV_HEADER",
    "CensusConfig",
    "CensusRow",
    "DElement",
    "EuclideanMotion",
    "F2Matrix",
    "GradedPolyF2",
    "IdealDegree2Basis",
    "InconsistencyError",
    "KahlerPairing",
    "LinearFormF2",
    "ManifoldReport",
    "MatrixParseError",
    "OracleDisagreementError",
    "PMatrix",
    "acts_freely",
    "analyze",
    "bott_to_p",
    "characteristic_ideal",
    "check_against_rows",
    "cocycles",
    "compose",
    "decode_degree2",
    "degree2_count",
    "degree2_index",
    "degree2_monomials",
    "element_of",
    "encode_degree2",
    "enumerate_bott",
    "free_at_subset",
    "generators",
    "has_full_holonomy",
    "holonomy_matrix",
    "identical_columns_matrix",
    "is_free",
    "is_kahler",
    "is_orientable",
    "matrix_at",
    "parse_bott",
    "parse_pmatrix",
    "pmatrix_to_bott",
    "run_census",
    "spin_general",
    "spin_kahler_closed_form",
    "spin_membership",
    "square",
    "sw_class",
    "truncated_product",
]
