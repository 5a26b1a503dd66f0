from app.chromatic.expansions import (
    ConnectingFamily,
    ConventionResult,
    EdgeDeficit,
    GirthExpansion,
    Lemma9Audit,
    connecting_family,
    deficit_identity_check,
    even_cycle_deficit,
    girth_expansion,
    lemma9_audit,
)
from app.chromatic.memo import DEFAULT_MEMO, PolynomialMemo
from app.chromatic.polynomials import (
    chromatic_brute_count,
    chromatic_dc,
    chromatic_subset_expansion,
    pivot_edge,
)

__all__ = [
    "ConnectingFamily",
    "ConventionResult",
    "DEFAULT_MEMO",
    "EdgeDeficit",
    "GirthExpansion",
    "Lemma9Audit",
    "PolynomialMemo",
    "chromatic_brute_count",
    "chromatic_dc",
    "chromatic_subset_expansion",
    "connecting_family",
    "deficit_identity_check",
    "even_cycle_deficit",
    "girth_expansion",
    "lemma9_audit",
    "pivot_edge",
]
