"""Exact computation of LLT polynomials, unicellular LLT polynomials and 2-Schur expansions."""

from .combinat import DescentSet, Partition, parse_partition
from .kschur import (
    NotInSpanError,
    gen_HL,
    hall_littlewood,
    jing_B,
    k_split,
    kschur2,
    kschur2_def53,
    two_schur_expand,
)
from .laurent import LaurentPoly, q
from .llt import (
    BoundExceeded,
    Component,
    ShapeTuple,
    TwoDiagTuple,
    G_unicellular,
    L,
    domino_tuple,
    llt,
    llt_schur,
    tuple_from_partition,
)
from .symfunc import (
    FundVector,
    NotSymmetricError,
    SchurVector,
    TwoSchurVector,
    format_expansion,
    fund_to_schur,
    multiply,
    omega,
    schur,
)
from .theorems import (
    LinearDecomposition,
    closed_form_f,
    domino_identity,
    f_less,
    positivity_report,
    product_one_schur,
    solve_decomposition,
    two_diag_expansion,
    verify_linear_relation,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "closed_form_f",
    "Component",
    "DescentSet",
    "domino_identity",
    "domino_tuple",
    "f_less",
    "format_expansion",
    "fund_to_schur",
    "FundVector",
    "G_unicellular",
    "gen_HL",
    "hall_littlewood",
    "jing_B",
    "k_split",
    "kschur2",
    "kschur2_def53",
    "L",
    "LaurentPoly",
    "LinearDecomposition",
    "llt",
    "llt_schur",
    "multiply",
    "NotInSpanError",
    "NotSymmetricError",
    "omega",
    "parse_partition",
    "Partition",
    "positivity_report",
    "product_one_schur",
    "q",
    "schur",
    "SchurVector",
    "ShapeTuple",
    "solve_decomposition",
    "tuple_from_partition",
    "two_diag_expansion",
    "two_schur_expand",
    "TwoDiagTuple",
    "TwoSchurVector",
    "verify_linear_relation",
]
