"""Certified upper bounds on c(T) for every tile in the corpus.

    python3 scripts/estimate_tiles.py [--max-n 3] [--budget-seconds 30]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from tilecross.crossing import SolveOptions
from tilecross.io import parse_tile
from tilecross.limits import estimate

CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "tiles"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--budget-seconds", type=float)
    args = ap.parse_args()
    opts = SolveOptions(time_limit=args.budget_seconds)
    print(f"{'tile':<20} {'c_n':<16} {'t_n':<16} upper")
    for path in sorted(CORPUS.glob("*.json")):
        rep = estimate(parse_tile(path.read_text()), args.max_n, opts, name=path.stem)
        cs = ",".join(r.c_n.verdict() for r in rep.rows)
        ts = ",".join(r.t_n.verdict() for r in rep.rows)
        up = "?" if rep.certified_upper is None else str(rep.certified_upper)
        mark = " (exact)" if rep.exact is not None else ""
        print(f"{path.stem:<20} {cs:<16} {ts:<16} {up}{mark}")


if __name__ == "__main__":
    main()
