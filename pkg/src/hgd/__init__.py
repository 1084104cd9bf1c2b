"""Hypergraph decompositions: HD, GHD and FHD checking, structural properties,
and hardness generators."""

from .covers import EdgeWeighting, optimal_fractional_cover, optimal_integral_cover, rho, rho_star
from .decomposition import DecompositionError, DecompositionTree, Node, Violation, validate, width
from .fhd import fracdecomp, solve_fhd
from .fileio import ParseError, parse_decomposition, parse_hypergraph, write_decomposition, write_hypergraph
from .ghd import BudgetExceeded, f_bip, g_bmip, solve_ghd
from .hd import SolverError, hw, solve_hd
from .hypergraph import Hypergraph, HypergraphError, build_hypergraph
from .properties import analyze, c_miwidth, degree, iwidth, vc_dimension

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DecompositionError",
    "DecompositionTree",
    "EdgeWeighting",
    "Hypergraph",
    "HypergraphError",
    "Node",
    "ParseError",
    "SolverError",
    "Violation",
    "analyze",
    "build_hypergraph",
    "c_miwidth",
    "degree",
    "f_bip",
    "fracdecomp",
    "g_bmip",
    "hw",
    "iwidth",
    "optimal_fractional_cover",
    "optimal_integral_cover",
    "parse_decomposition",
    "parse_hypergraph",
    "rho",
    "rho_star",
    "solve_fhd",
    "solve_ghd",
    "solve_hd",
    "validate",
    "vc_dimension",
    "width",
    "write_decomposition",
    "write_hypergraph",
]
