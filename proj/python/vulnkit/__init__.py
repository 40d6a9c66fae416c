"""Weighted vertex integrity and component order connectivity solvers."""

from ._vulnkit import *  # noqa: F401,F403
from ._vulnkit import ParseError, PreconditionError, WeightedGraph, IntervalModel  # noqa: F401


def integrity(g, limit=None):
    """Exact integrity value of ``g`` by enumeration."""
    return oracle_wvi(g, limit)[0]  # noqa: F405
