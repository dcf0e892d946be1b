"""Write the bundled corpus of canonical tile and graph files to corpus/."""

from __future__ import annotations

import argparse
from pathlib import Path

from tilecross import generators as gen
from tilecross.io import cyc_json, dumps, serialize_graph, serialize_tile
from tilecross.multigraph import MultiGraph
from tilecross.tile import Tile, cyc, power


def tiles() -> dict[str, Tile]:
    out = dict(gen.named_tiles())
    out["triangle"] = Tile.build(3, [(0, 1), (1, 2), (2, 0)], (0,), (1,))
    out["ladder-rung"] = Tile.build(2, [(0, 1)], (0, 1), (0, 1))
    out["k4-width-2"] = Tile.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], (0, 1), (2, 3))
    out["two-parts"] = Tile.build(4, [(0, 1), (2, 3)], (0, 2), (1, 3))
    out["double-edge"] = Tile.build(2, [(0, 1), (0, 1)], (0,), (1,))
    out["crossing-x-squared"] = power(gen.crossing_tile(), 2)
    return out


def graphs() -> dict[str, MultiGraph]:
    return {
        "c4": gen.cycle(4),
        "k4": gen.complete(4),
        "k5": gen.complete(5),
        "k33": gen.complete_bipartite(3, 3),
        "k6": gen.complete(6),
        "petersen": gen.petersen(),
        "random-1": gen.random_multigraph(1, vertices=6, edges=11),
        "random-2": gen.random_multigraph(2, vertices=7, edges=12),
        "loops": MultiGraph(4, ((0, 0), (0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (2, 2))),
        "k33-parallel": MultiGraph(6, gen.complete_bipartite(3, 3).edges + ((0, 3),)),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", type=Path, default=Path(__file__).resolve().parent.parent / "corpus")
    args = ap.parse_args()
    (args.dir / "tiles").mkdir(parents=True, exist_ok=True)
    (args.dir / "graphs").mkdir(parents=True, exist_ok=True)
    for name, t in tiles().items():
        (args.dir / "tiles" / f"{name}.json").write_text(serialize_tile(t))
    for name, g in graphs().items():
        (args.dir / "graphs" / f"{name}.json").write_text(serialize_graph(g))
    # labelled export, usable with `cr --beta`
    (args.dir / "graphs" / "cyc-crossing-x-2.json").write_text(dumps(cyc_json(cyc(gen.crossing_tile(), 2))))
    print(f"wrote corpus to {args.dir}")


if __name__ == "__main__":
    main()
