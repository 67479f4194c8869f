"""Exact computations in the rational Chow ring of rational nodal curves with at most three nodes."""

from .polycore import Polynomial, NotDivisible, PolynomialParseError, parse, var
from .trees import Tree, parse_tree, named_tree, enumerate_trees, canonical_encode, automorphism_group
from .deformations import ordered_deformations, edge_correspondence
from .strata import StratumRing, stratum
from .classes import psi, normal_top_chern, mumford_k, chern_roots, chern_classes
from .extension import ClassTuple, extend_class, restrict_pushforward, substitution_map
from .chowring import (Presentation, builtin_generators, hilbert_profile, spanning_basis,
                       theorem_presentation, corrected_presentation, verify_presentation,
                       verify_relations)
from .report import Report, ReportFailure

__version__ = "0.1.0"
