"""Long monochromatic circuits in edge-coloured complete graphs."""
from .circuit import (
    CaseTrace,
    PeelReport,
    SolveReport,
    Trail,
    case_diagnose,
    check_trail,
    euler_circuit,
    guarantee_threshold,
    min_degree_peel,
    proof_trace,
    solve,
    verify,
)
from .coloring import (
    ColorClassGraph,
    Component,
    EdgeColoring,
    color_class,
    components,
    degree_parity,
    max_component_edges,
    new_coloring,
)
from .constructions import (
    AffinePlaneParams,
    affine_plane_coloring,
    extremal_bipartite_split,
    field_ops,
    random_coloring,
)
from .eulerize import EulerizedColoring, ParityForest, eulerize, parity_forest
from .oracle import longest_circuit_exact, longest_trail_exact, worst_case_search

__version__ = "0.1.0"

__all__ = [
    "CaseTrace",
    "PeelReport",
    "SolveReport",
    "Trail",
    "case_diagnose",
    "check_trail",
    "euler_circuit",
    "guarantee_threshold",
    "min_degree_peel",
    "proof_trace",
    "solve",
    "verify",
    "ColorClassGraph",
    "Component",
    "EdgeColoring",
    "color_class",
    "components",
    "degree_parity",
    "max_component_edges",
    "new_coloring",
    "AffinePlaneParams",
    "affine_plane_coloring",
    "extremal_bipartite_split",
    "field_ops",
    "random_coloring",
    "EulerizedColoring",
    "ParityForest",
    "eulerize",
    "parity_forest",
    "longest_circuit_exact",
    "longest_trail_exact",
    "worst_case_search",
]
