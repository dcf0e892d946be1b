"""Periodic graphs built from tiles: composition, reductions, exact crossing numbers and limit constants."""

from __future__ import annotations

from .crossing import (
    CrossingResult,
    CrossingWeights,
    Planarization,
    SolveOptions,
    c_n,
    crossing_number,
    t_n,
    verify_witness,
)
from .limits import BoundReport, ConstantLedger, estimate, lbound_constants, lemma_upper_constants, theorem_N
from .multigraph import MultiGraph
from .reduce import NotWeaklyLinkable, is_linked, is_weakly_linked, limit_decomposition, weakly_link
from .tile import Tile, big_m, compose, cyc, frame, power

__all__ = [
    "BoundReport", "ConstantLedger", "CrossingResult", "CrossingWeights", "MultiGraph",
    "NotWeaklyLinkable", "Planarization", "SolveOptions", "Tile", "big_m", "c_n", "compose",
    "crossing_number", "cyc", "estimate", "frame", "is_linked", "is_weakly_linked",
    "lbound_constants", "lemma_upper_constants", "limit_decomposition", "power", "t_n",
    "theorem_N", "verify_witness", "weakly_link",
]
