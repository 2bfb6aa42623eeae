"""Exact rainbow connection numbers and Nordhaus-Gaddum style census tools."""

from .graph import (
    INFINITE,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    canonical_key,
    complement,
    connected_domination_number,
    diameter,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .solver import (
    ColoringBindingError,
    EdgeColoring,
    EffortLimitError,
    Evidence,
    RcCertificate,
    find_rainbow_path,
    has_rainbow_k_coloring,
    is_rainbow_connected,
    rc_exact,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "ColoringBindingError",
    "DisconnectedGraphError",
    "EdgeColoring",
    "EffortLimitError",
    "Evidence",
    "Graph",
    "GraphFormatError",
    "RcCertificate",
    "canonical_key",
    "complement",
    "connected_domination_number",
    "diameter",
    "find_rainbow_path",
    "has_rainbow_k_coloring",
    "is_connected",
    "is_rainbow_connected",
    "parse_graph6",
    "rc_exact",
    "to_graph6",
]
