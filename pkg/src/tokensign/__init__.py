"""Signed graphs, their k-token graphs, and measures of unbalance."""
from .core import (
    SignedGraph,
    SwitchingVector,
    balance_check,
    balancing_switching,
    family,
    format_graph,
    is_balanced,
    negate,
    parse_graph,
    signed_complement,
    switch,
)
from .equivalence import (
    canonical_signature,
    enumerate_switching_iso_classes,
    is_sign_symmetric,
    switching_equivalent,
    switching_isomorphism,
)
from .linalg import ExactMatrix, ExactPolynomial, adjacency, char_poly, eigenvalues_symmetric, laplacian
from .measures import ell, frustration_index, unbalance_level
from .token import binomial_matrix, lift_switching, signed_binomial_matrix, token_graph

__all__ = [
    "ExactMatrix", "ExactPolynomial", "SignedGraph", "SwitchingVector",
    "adjacency", "balance_check", "balancing_switching", "binomial_matrix",
    "canonical_signature", "char_poly", "eigenvalues_symmetric", "ell",
    "enumerate_switching_iso_classes", "family", "format_graph", "frustration_index",
    "is_balanced", "is_sign_symmetric", "laplacian", "lift_switching", "negate",
    "parse_graph", "signed_binomial_matrix", "signed_complement", "switch",
    "switching_equivalent", "switching_isomorphism", "token_graph", "unbalance_level",
]
