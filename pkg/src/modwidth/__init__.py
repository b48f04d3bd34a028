"""Graph problems solved by dynamic programming over the modular decomposition.

Chromatic number, path partitions and Hamiltonicity run in time
exponential only in the modular-width of the input graph.
"""

from .coloring import ColoringWitness, chromatic_number, coloring_witness
from .errors import BudgetExceeded, CapacityError, InternalError, ParseError
from .graph import Graph, add_universal, substitute
from .ham import cycle_witness, ham_number, hamiltonian_cycle, hamiltonian_path, path_partition_witness
from .mdtree import modular_decomposition, modular_width, neighborhood_diversity, normalize

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CapacityError",
    "ColoringWitness",
    "Graph",
    "InternalError",
    "ParseError",
    "add_universal",
    "chromatic_number",
    "coloring_witness",
    "cycle_witness",
    "ham_number",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "modular_decomposition",
    "modular_width",
    "neighborhood_diversity",
    "normalize",
    "path_partition_witness",
    "substitute",
]
