"""Exact Weyl group combinatorics for stable pieces of G x G and of the wonderful compactification."""

from .rootdata import RootSystem, build_root_system, pos_roots_in_span, reflect
from .triples import PairContext, Triple, diag_triple, swap_triple, trivial_triple
from .weyl import WeylElt, WeylGroup, weyl_group

__version__ = "0.1.0"
