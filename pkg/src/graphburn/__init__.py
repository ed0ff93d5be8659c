"""Graph burning: simulation, exact burning numbers, bounds and ILT experiments."""

from .burning import check_sequence, simulate
from .graph import Graph, from_edge_list
from .solver import burning_number

__version__ = "0.1.0"

__all__ = ["Graph", "from_edge_list", "simulate", "check_sequence", "burning_number", "__version__"]
