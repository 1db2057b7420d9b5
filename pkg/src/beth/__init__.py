"""Graph characteristics beth1, beth2, beth3 and the bounds they give on chi and h.

Modules:
    graph            bitset graphs, graph6 / edge-list I/O, contractions and constructions
    cycles           induced (chordless) cycle enumeration and contraction census
    solids           pyramids, trihedra, stamps, prisms, closed sets and surfaces
    oracles          exact chromatic number, minor search, Hadwiger number, compression
    characteristics  beth values, complete-graph inversions, per-graph reports
    suite            named property checks over graph corpora
    cli              the ``beth`` command
"""

from .characteristics import (
    CharacteristicReport,
    beth,
    beth1,
    beth2,
    beth3,
    beth_complete,
    first_upper_bound,
    max_complete_order_within,
    report,
)
from .cycles import (
    BudgetExceeded,
    InducedCycle,
    contraction_cycle_census,
    count_induced_cycles,
    enumerate_induced_cycles,
    longest_cycle_length,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    complete_graph,
    cone,
    contract_edge,
    contract_nonedge,
    cycle_graph,
    octahedron,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    to_graph6,
)
from .oracles import (
    Coloring,
    MinorWitness,
    chromatic_number,
    hadwiger_number,
    has_complete_minor,
    is_planar_small,
    vertex_compress,
)
from .solids import Solid, count_solids, enumerate_minimal_closed_surfaces, enumerate_solids

__version__ = "0.1.0"

__all__ = [
    "CharacteristicReport", "beth", "beth1", "beth2", "beth3", "beth_complete", "first_upper_bound",
    "max_complete_order_within", "report",
    "BudgetExceeded", "InducedCycle", "contraction_cycle_census", "count_induced_cycles",
    "enumerate_induced_cycles", "longest_cycle_length",
    "Graph", "Graph6Error", "GraphError", "complete_graph", "cone", "contract_edge", "contract_nonedge",
    "cycle_graph", "octahedron", "parse_edge_list", "parse_graph6", "path_graph", "petersen_graph",
    "to_graph6",
    "Coloring", "MinorWitness", "chromatic_number", "hadwiger_number", "has_complete_minor",
    "is_planar_small", "vertex_compress",
    "Solid", "count_solids", "enumerate_minimal_closed_surfaces", "enumerate_solids",
]
