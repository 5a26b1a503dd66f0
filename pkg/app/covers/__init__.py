from app.covers.bounds import (
    Cwd1Value,
    CwdPolynomial,
    cwd1_cover,
    cwd1_pair,
    cwd1_value,
    cwd_bound,
    cwd_bound_polynomial,
)
from app.covers.counting import count_colorings_brute, count_colorings_ie, count_with_space
from app.covers.io import cover_from_dict, cover_to_dict, dump_cover, load_cover
from app.covers.model import (
    Cover,
    CoverViolation,
    PartialMap,
    PermCoverSpec,
    ShiftSpec,
    apply_vertex_gauge,
    check_permutation,
    expand_spec,
    identity_spec,
    natural_cover,
    require_valid,
    saturate,
    validate_cover,
)
from app.covers.search import (
    DpResult,
    EdgePlan,
    UpperBound,
    cycle_type_representatives,
    dp_exact,
    dp_upper_search,
    search_plan,
    search_size,
)

__all__ = [
    "Cover",
    "CoverViolation",
    "Cwd1Value",
    "CwdPolynomial",
    "DpResult",
    "EdgePlan",
    "PartialMap",
    "PermCoverSpec",
    "ShiftSpec",
    "UpperBound",
    "apply_vertex_gauge",
    "check_permutation",
    "count_colorings_brute",
    "count_colorings_ie",
    "count_with_space",
    "cover_from_dict",
    "cover_to_dict",
    "cwd1_cover",
    "cwd1_pair",
    "cwd1_value",
    "cwd_bound",
    "cwd_bound_polynomial",
    "cycle_type_representatives",
    "dp_exact",
    "dp_upper_search",
    "dump_cover",
    "expand_spec",
    "identity_spec",
    "load_cover",
    "natural_cover",
    "require_valid",
    "saturate",
    "search_plan",
    "search_size",
    "validate_cover",
]
