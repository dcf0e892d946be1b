"""Recompute the oracle values stored in tests/frozen.py and print them."""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import frozen  # noqa: E402
import oracles  # noqa: E402
from tilecross.generators import random_multigraph  # noqa: E402


def named() -> dict[str, int]:
    k = lambda n: (n, list(combinations(range(n), 2)))  # noqa: E731
    cases = {
        "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        "K4": k(4),
        "K5": k(5),
        "K33": (6, [(i, 3 + j) for i in range(3) for j in range(3)]),
        "K6": k(6),
        "Petersen": (
            10,
            [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)],
        ),
    }
    return {name: oracles.brute_crossing_number(n, e) for name, (n, e) in cases.items()}


def main() -> None:
    print("NAMED_CR =", named())
    indices, values = [], []
    for i, g in enumerate(nx.graph_atlas_g()):
        if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g):
            indices.append(i)
            values.append(oracles.brute_crossing_number(g.number_of_nodes(), list(g.edges())))
    print("ATLAS_INDICES =", indices)
    print("ATLAS_CR =", "".join(map(str, values)))
    rand = []
    for s in range(50):
        g = random_multigraph(s, **frozen.random_corpus_params(s))
        rand.append(oracles.brute_crossing_number(g.vertex_count, g.edges))
    print("RANDOM_CR =", rand)
    print("LBOUND_K1 =", oracles.lbound_by_hand(1, 1, Fraction(1), Fraction(1)))
    print("LEDGER_K1 =", oracles.ledger_by_hand(1, 1, Fraction(1), Fraction(1, 4)))
    print("MIN_CUT_K4 =", oracles.brute_min_cut(4, list(combinations(range(4), 2)), 0, 3))
    n, es = oracles.brute_cyc(3, [(0, 1), (1, 2)], [0, 1, 2], [0, 1, 2], 6)
    print("TILE_DISTANCE_GRID_0_3 =", oracles.brute_tile_distance(6, 3, es, 0, 6))
    n, es = oracles.brute_cyc(4, [(0, 3), (1, 2)], [0, 1], [2, 3], 1)
    print("X_C1 =", oracles.brute_crossing_number(n, es))
    print("X_T1 =", oracles.brute_tile_drawing_number(4, [(0, 3), (1, 2)], [0, 1], [2, 3]))


if __name__ == "__main__":
    main()
