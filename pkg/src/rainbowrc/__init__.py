"""Rainbow connection numbers near m: exact search, classification, certificates."""

from .characterize import (
    ClassLabel,
    certificate,
    class_label,
    compose_partition_coloring,
    extend_subdivision_coloring,
    rc_characterize,
    theta_coloring,
)
from .engine import (
    Bounds,
    BudgetExceeded,
    EdgeColoring,
    Exact,
    feasible_k,
    is_rainbow_connected,
    lower_bound,
    rc_band,
    rc_exact,
)
from .graph import Graph, build_graph, distance, structure_report
from .structure import block_kind, subdivide, unicyclic_decompose

__version__ = "0.1.0"

__all__ = [
    "Bounds", "BudgetExceeded", "ClassLabel", "EdgeColoring", "Exact", "Graph",
    "block_kind", "build_graph", "certificate", "class_label", "compose_partition_coloring",
    "distance", "extend_subdivision_coloring", "feasible_k", "is_rainbow_connected",
    "lower_bound", "rc_band", "rc_characterize", "rc_exact", "structure_report",
    "subdivide", "theta_coloring", "unicyclic_decompose",
]
