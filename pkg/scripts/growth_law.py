"""Tabulate N(eps) on a halving grid and fit the log-log slope.

    python3 scripts/growth_law.py [tile.json] [--steps 6]
"""

from __future__ import annotations

import argparse
import math
from fractions import Fraction
from pathlib import Path

from tilecross.generators import edge_tile
from tilecross.io import parse_tile
from tilecross.limits import theorem_N


def slope(xs: list[float], ys: list[float]) -> float:
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("tile", nargs="?", type=Path)
    ap.add_argument("--steps", type=int, default=6)
    args = ap.parse_args()
    t = parse_tile(args.tile.read_text()) if args.tile else edge_tile()
    grid = [Fraction(1, 2**i) for i in range(args.steps)]
    Ns = []
    print(f"{'eps':>6}  {'eps1':>7}  {'N':>28}  ratio")
    for eps in grid:
        led = theorem_N(t, eps)
        ratio = f"{led.N / Ns[-1]:.2f}" if Ns else ""
        Ns.append(led.N)
        print(f"{str(eps):>6}  {str(led.epsilon1):>7}  {led.N:>28}  {ratio}")
    s = slope([-math.log(e) for e in grid], [math.log(n) for n in Ns])
    print(f"log-log slope: {s:.3f} (limit ratio 64 corresponds to slope 6)")


if __name__ == "__main__":
    main()
