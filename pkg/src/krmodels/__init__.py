"""Combinatorial models for tensor products of single-column KR crystals.

The quantum alcove model (admissible subsets of a lambda-chain) and the
Kashiwara-Nakashima tableau model, with the explicit bijections between
them in classical types A, B, C, D.
"""

from .alcove import enumerate_admissible, fill, is_admissible, sfill
from .chains import LambdaChain, lambda_chain, omega_chain, validate_chain
from .inverse import (
    blocked_off,
    blocked_off_D,
    greedy,
    invert,
    mod_greedy,
    mod_reorder,
    reorder,
)
from .qbg import build_qbg, edge_fast_A, edge_fast_C, edge_kind
from .roots import LieType, Root, Weight, pairing, positive_roots, rho
from .tableaux import (
    enumerate_columns,
    enumerate_tensor,
    extend,
    is_kn_column,
    split_b,
    split_c,
    split_column,
    split_d,
    unextend,
    unsplit,
)
from .weyl import WeylElement, circle_dist, circle_min, reflection

__version__ = "0.1.0"

__all__ = [
    "LieType",
    "Root",
    "Weight",
    "WeylElement",
    "LambdaChain",
    "build_qbg",
    "blocked_off",
    "blocked_off_D",
    "circle_dist",
    "circle_min",
    "edge_fast_A",
    "edge_fast_C",
    "edge_kind",
    "enumerate_admissible",
    "enumerate_columns",
    "enumerate_tensor",
    "extend",
    "fill",
    "greedy",
    "invert",
    "is_admissible",
    "is_kn_column",
    "lambda_chain",
    "mod_greedy",
    "mod_reorder",
    "omega_chain",
    "pairing",
    "positive_roots",
    "reflection",
    "reorder",
    "rho",
    "sfill",
    "split_b",
    "split_c",
    "split_column",
    "split_d",
    "unextend",
    "unsplit",
    "validate_chain",
]
