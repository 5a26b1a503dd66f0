from app.hypergraph.core import (
    Edge,
    Hypergraph,
    Vertex,
    expected_join_size,
    spanning_subhypergraph,
    vertex_key,
)
from app.hypergraph.generators import complete, hypertree, linear_cycle, random_hypergraph, theta
from app.hypergraph.structure import (
    INFINITY,
    Classification,
    ComponentPartition,
    CycleCensus,
    CycleWitness,
    EdgeGirth,
    classify,
    coloring_number,
    components,
    covered_component_count,
    cycle_witness_for_edges,
    enumerate_cycles,
    girth,
    girth_of_edge,
    incidence_graph,
    is_hypertree,
    shortest_cycle_census,
    two_section,
)

__all__ = [
    "Classification",
    "ComponentPartition",
    "CycleCensus",
    "CycleWitness",
    "Edge",
    "EdgeGirth",
    "Hypergraph",
    "INFINITY",
    "Vertex",
    "classify",
    "coloring_number",
    "complete",
    "components",
    "covered_component_count",
    "cycle_witness_for_edges",
    "enumerate_cycles",
    "expected_join_size",
    "girth",
    "girth_of_edge",
    "hypertree",
    "incidence_graph",
    "is_hypertree",
    "linear_cycle",
    "random_hypergraph",
    "shortest_cycle_census",
    "spanning_subhypergraph",
    "theta",
    "two_section",
    "vertex_key",
]
