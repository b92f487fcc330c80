"""Snake-in-the-box codes over A_{2n+1} under the Kendall tau metric.

Constructs cyclic push-to-the-top Gray codes whose codewords are pairwise at
Kendall distance at least two, in two flavors: the merged construction of
size (2n+1)!/2 - 2n + 1 (id ``he``) and the extended construction of size
(2n+1)!/2 - 2n + 3 (id ``extended``), plus an independent verifier.
"""

from ._kernels import BACKEND
from .assemble import he_snake
from .chain_graph import build_chain_graph, connection_endpoints, trace_chain_of
from .chains import Chain, ChainSet, build_all_chains, build_chain
from .errors import ConjectureUnresolved, ConstructionError, SnakeFileError
from .extended import embed_snake, extended_snake, search_extended
from .merge_tree import MergeTree, build_merge_tree, validate_merge_tree
from .partition import Necklace, class_of, enumerate_necklaces, necklace_of
from .perms import apply_inverse, apply_transition, compose, is_even, kendall_distance
from .snake import Snake
from .snakefile import read_snake, write_snake
from .spanning import select_spanning_tree
from .verify import check_upper_bounds, missing_codewords, verify_snake

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Chain",
    "ChainSet",
    "ConjectureUnresolved",
    "ConstructionError",
    "MergeTree",
    "Necklace",
    "Snake",
    "SnakeFileError",
    "apply_inverse",
    "apply_transition",
    "build_all_chains",
    "build_chain",
    "build_chain_graph",
    "build_merge_tree",
    "check_upper_bounds",
    "class_of",
    "compose",
    "connection_endpoints",
    "embed_snake",
    "enumerate_necklaces",
    "extended_snake",
    "he_snake",
    "is_even",
    "kendall_distance",
    "missing_codewords",
    "necklace_of",
    "read_snake",
    "search_extended",
    "select_spanning_tree",
    "trace_chain_of",
    "validate_merge_tree",
    "verify_snake",
    "write_snake",
]
