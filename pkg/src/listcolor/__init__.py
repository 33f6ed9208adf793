"""Exact list-coloring and precoloring extension via subset dynamic programming."""

from listcolor.bounds import FitReport, fit_constant, predicted_work, verify_fit_empirical
from listcolor.dp import (
    ColorabilityTable,
    SolveResult,
    SolveStats,
    preprocess_long_lists,
    reconstruct,
    restrict_lists,
    round1_init,
    round_update,
    solve,
)
from listcolor.graph import (
    Graph,
    Instance,
    InstanceParseError,
    format_instance,
    is_triangle_free,
    parse_instance,
    validate_coloring,
)
from listcolor.mis import count_mis, enumerate_mis

__all__ = [
    "ColorabilityTable",
    "FitReport",
    "Graph",
    "Instance",
    "InstanceParseError",
    "SolveResult",
    "SolveStats",
    "count_mis",
    "enumerate_mis",
    "fit_constant",
    "format_instance",
    "is_triangle_free",
    "parse_instance",
    "predicted_work",
    "preprocess_long_lists",
    "reconstruct",
    "restrict_lists",
    "round1_init",
    "round_update",
    "solve",
    "validate_coloring",
    "verify_fit_empirical",
]
