"""Classification of finite simple graphs by the structure of their basic
k-covers: unmixedness, the domain property, and the square conditions."""

from .classify import (
    ClassificationReport,
    DomainCounterexample,
    check_msc,
    check_sc,
    check_wsc,
    classify_full,
    component_flip_covers,
    domain_counterexample_search,
    edge_square_condition,
    g01,
    is_domain,
    is_unmixed,
    norm_spectrum,
    report_to_dict,
    structural_domain_audit,
    verify_msc_witness,
)
from .covers import (
    Cover,
    CoverSet,
    cover_sum,
    decompose_2cover,
    enumerate_basic_covers,
    indecomposable_2covers,
    is_basic,
    is_cover,
    loppable_vertices,
    norm,
    reduce_to_basic,
)
from .errors import BudgetExceededError, ConsistencyError, GraphParseError
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    connected_components,
    is_complete_bipartite,
    parse_graph,
    perfect_matching,
    reduced,
    serialize_graph,
)

__all__ = [
    "Bipartition",
    "BudgetExceededError",
    "ClassificationReport",
    "ConsistencyError",
    "Cover",
    "CoverSet",
    "DomainCounterexample",
    "Graph",
    "GraphParseError",
    "bipartition",
    "check_msc",
    "check_sc",
    "check_wsc",
    "classify_full",
    "component_flip_covers",
    "connected_components",
    "cover_sum",
    "decompose_2cover",
    "domain_counterexample_search",
    "edge_square_condition",
    "enumerate_basic_covers",
    "g01",
    "indecomposable_2covers",
    "is_basic",
    "is_complete_bipartite",
    "is_cover",
    "is_domain",
    "is_unmixed",
    "loppable_vertices",
    "norm",
    "norm_spectrum",
    "parse_graph",
    "perfect_matching",
    "reduce_to_basic",
    "reduced",
    "report_to_dict",
    "serialize_graph",
    "structural_domain_audit",
    "verify_msc_witness",
]
