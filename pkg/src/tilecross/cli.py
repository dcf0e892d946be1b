"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when a bounded verdict
(search ceiling or time budget) is all that could be established.

With ``--out`` the machine-readable document goes to that file and a human
summary to standard output; without it the document goes to standard output
and the summary to standard error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from . import io as tio
from .crossing import CrossingResult, CrossingWeights, SolveOptions, crossing_number, c_n, t_n
from .limits import NotReducedError, estimate, theorem_N
from .multigraph import SearchBudgetExceeded
from .reduce import cycle_notation, limit_decomposition, weakly_link
from .tile import compose, cyc, power

EXIT_OK, EXIT_INVALID, EXIT_BOUNDED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nonneg_fraction(text: str) -> Fraction:
    x = _fraction(text)
    if x < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return x


def _eps(text: str) -> Fraction:
    x = _fraction(text)
    if not 0 < x <= 1:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1]: {text}")
    return x


def _positive_int(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text}")
    return x


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return x


def _id_list(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        ids = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated edge ids, got {text!r}") from None
    if any(i < 0 for i in ids):
        raise argparse.ArgumentTypeError("edge ids must be nonnegative")
    return ids


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tilecross", description="Tiles, crossing numbers and limit constants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name: str, help: str, out: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if out:
            sp.add_argument("--out", type=Path, help="write the machine-readable result here")
        return sp

    def solver_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--max-k", type=_nonneg_fraction, help="search ceiling on the crossing count (or weight)")
        sp.add_argument("--beta", type=_nonneg_fraction, help="weighted crossing number with this beta")
        sp.add_argument("--budget-seconds", type=_positive_float, help="time budget per solve")

    sp = cmd("validate", "check a tile or graph file", out=False)
    sp.add_argument("file", type=Path)

    sp = cmd("compose", "compose two tiles of equal width")
    sp.add_argument("first", type=Path)
    sp.add_argument("second", type=Path)

    sp = cmd("power", "n-th power of a tile")
    sp.add_argument("tile", type=Path)
    sp.add_argument("-n", type=_positive_int, required=True)

    sp = cmd("cyc", "cyc(T^n) with internal/external labels")
    sp.add_argument("tile", type=Path)
    sp.add_argument("-n", type=_positive_int, default=1)

    sp = cmd("reduce", "weakly linked equivalent tile and its permutation")
    sp.add_argument("tile", type=Path)
    sp.add_argument("--tile-out", type=Path, help="also write the reduced tile as a tile file")

    sp = cmd("decompose", "split into connected linked subtiles")
    sp.add_argument("tile", type=Path)
    sp.add_argument("--subtiles-dir", type=Path, help="also write each subtile as a tile file")

    sp = cmd("cr", "exact crossing number of a graph")
    sp.add_argument("graph", type=Path)
    sp.add_argument("--uncrossable", type=_id_list, default=(), help="comma-separated edge ids")
    solver_flags(sp)

    sp = cmd("tile-cr", "c_n = cr(cyc(T^n)) and the tile-drawing number t_n")
    sp.add_argument("tile", type=Path)
    sp.add_argument("-n", type=_positive_int, required=True)
    solver_flags(sp)

    sp = cmd("constants", "the theorem's constant ledger")
    sp.add_argument("tile", type=Path)
    sp.add_argument("--eps", type=_eps, required=True)

    sp = cmd("estimate", "certified bounds on c(T) from exact small cases")
    sp.add_argument("tile", type=Path)
    sp.add_argument("--max-n", type=_positive_int, required=True)
    sp.add_argument("--budget-seconds", type=_positive_float, help="time budget per solve")
    return p


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_tile(path: Path):
    text = _read(path)
    try:
        return tio.parse_tile(text)
    except tio.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_graph(path: Path):
    text = _read(path)
    try:
        return tio.parse_graph_document(text)
    except tio.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _result_json(res: CrossingResult) -> dict:
    doc = {"status": res.status, "verdict": res.verdict(), "lower": tio.number_json(res.lower)}
    if res.optimal:
        doc.update(res.witness.to_json(res.value))
    elif res.ceiling is not None:
        doc["ceiling"] = tio.number_json(res.ceiling)
    return doc


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max((len(name) for name, _ in rows), default=0)
    return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows)


class _Output:
    def __init__(self, out: Path | None, stdout: TextIO, stderr: TextIO):
        self.out = out
        self.stdout = stdout
        self.summary_stream = stdout if out is not None else stderr

    def document(self, obj: object) -> None:
        text = tio.dumps(obj)
        if self.out is None:
            self.stdout.write(text)
        else:
            self.out.write_text(text)

    def summary(self, text: str) -> None:
        self.summary_stream.write(text.rstrip("\n") + "\n")


def _solve_opts(args, uncrossable=(), labels=None) -> SolveOptions:
    weights = CrossingWeights(args.beta) if args.beta is not None else None
    return SolveOptions(
        uncrossable=frozenset(uncrossable),
        weights=weights,
        labels=labels,
        max_k=args.max_k,
        time_limit=args.budget_seconds,
    )


def _run(args, out: _Output) -> int:
    c = args.command
    if c == "validate":
        text = _read(args.file)
        try:
            if tio.is_tile_document(text):
                t = tio.parse_tile(text)
                out.stdout.write(f"tile: width {t.width}, |V| {t.graph.vertex_count}, |E| {t.graph.edge_count}\n")
            else:
                g, labels = tio.parse_graph_document(text)
                extra = ", labelled" if labels is not None else ""
                out.stdout.write(f"graph: |V| {g.vertex_count}, |E| {g.edge_count}{extra}\n")
        except tio.ParseError as exc:
            raise UsageError(f"{args.file}: {exc}") from None
        return EXIT_OK

    if c in ("compose", "power", "cyc"):
        if c == "compose":
            t1, t2 = _load_tile(args.first), _load_tile(args.second)
            if t1.width != t2.width:
                raise UsageError(f"cannot compose tiles of width {t1.width} and {t2.width}")
            t = compose(t1, t2)
        else:
            t = _load_tile(args.tile)
        if c == "power":
            t = power(t, args.n)
        if c == "cyc":
            cg = cyc(t, args.n)
            out.document(tio.cyc_json(cg))
            internal = sum(1 for lab in cg.labels if lab.internal)
            out.summary(
                f"cyc(T^{args.n}): |V| {cg.graph.vertex_count}, |E| {cg.graph.edge_count} "
                f"({internal} internal, {cg.graph.edge_count - internal} external)"
            )
            return EXIT_OK
        out.document(tio.tile_json(t))
        out.summary(f"tile: width {t.width}, |V| {t.graph.vertex_count}, |E| {t.graph.edge_count}")
        return EXIT_OK

    if c == "reduce":
        t = _load_tile(args.tile)
        w = weakly_link(t)
        doc = {
            "tile": tio.tile_json(w.tile),
            "width_before": t.width,
            "width": w.tile.width,
            "permutation": list(w.permutation),
            "cycles": cycle_notation(w.permutation),
            "paths": [{"vertices": list(p.vertices), "edges": list(p.edges)} for p in w.paths],
            "steps": [
                {"width_before": s.width_before, "cut_edges": list(s.cut_edges), "u": list(s.u), "v": list(s.v)}
                for s in w.steps
            ],
        }
        out.document(doc)
        if args.tile_out is not None:
            args.tile_out.write_text(tio.serialize_tile(w.tile))
        out.summary(
            f"weakly linked tile of width {w.tile.width} (from {t.width}) after {len(w.steps)} cut step(s); "
            f"permutation {cycle_notation(w.permutation)}"
        )
        return EXIT_OK

    if c == "decompose":
        t = _load_tile(args.tile)
        d = limit_decomposition(t)
        doc = {
            "m": d.m,
            "r": d.r,
            "permutation": list(d.weak.permutation),
            "subtiles": [tio.tile_json(s) for s in d.subtiles],
            "cycles": [
                {"length": cr.length, "blocks": list(cr.blocks), "tile": tio.tile_json(cr.tile)} for cr in d.cycles
            ],
            "identity": "c(T) = (c(T_1) + ... + c(T_r)) / m",
        }
        out.document(doc)
        if args.subtiles_dir is not None:
            args.subtiles_dir.mkdir(parents=True, exist_ok=True)
            for i, s in enumerate(d.subtiles, 1):
                (args.subtiles_dir / f"subtile-{i}.json").write_text(tio.serialize_tile(s))
        lengths = ", ".join(str(cr.length) for cr in d.cycles) or "none"
        terms = " + ".join(f"c(T_{i})" for i in range(1, d.r + 1)) or "0"
        out.summary(f"m = {d.m}, r = {d.r} subtiles, cycle lengths: {lengths}; c(T) = ({terms}) / {d.m}")
        return EXIT_OK

    if c == "cr":
        g, labels = _load_graph(args.graph)
        bad = [e for e in args.uncrossable if e >= g.edge_count]
        if bad:
            raise UsageError(f"--uncrossable: edge {bad[0]} not in graph (|E| = {g.edge_count})")
        if args.beta is not None and labels is None:
            raise UsageError("--beta needs a graph file with per-edge labels (as written by `cyc`)")
        kinds = tuple(lab.kind for lab in labels) if labels is not None else None
        res = crossing_number(g, _solve_opts(args, args.uncrossable, kinds if args.beta is not None else None))
        out.document(_result_json(res))
        out.summary(f"crossing number: {res.verdict()} ({res.status})")
        return EXIT_OK if res.optimal else EXIT_BOUNDED

    if c == "tile-cr":
        t = _load_tile(args.tile)
        opts = _solve_opts(args)
        rc, rt = c_n(t, args.n, opts), t_n(t, args.n, opts)
        out.document({"n": args.n, "c_n": _result_json(rc), "t_n": _result_json(rt)})
        out.summary(f"c_{args.n} = {rc.verdict()}, t_{args.n} = {rt.verdict()}")
        return EXIT_OK if rc.optimal and rt.optimal else EXIT_BOUNDED

    if c == "constants":
        t = _load_tile(args.tile)
        try:
            led = theorem_N(t, args.eps)
        except NotReducedError as exc:
            raise UsageError(str(exc)) from None
        rows = led.rows()
        doc = {name: (value if isinstance(value, bool) else tio.number_json(value)) for name, value in rows}
        doc["notes"] = list(led.notes)
        out.document(doc)
        out.summary(_table([(name, value) for name, value in rows]))
        for note in led.notes:
            out.summary(f"note: {note}")
        return EXIT_OK

    if c == "estimate":
        t = _load_tile(args.tile)
        rep = estimate(t, args.max_n, SolveOptions(time_limit=args.budget_seconds), name=args.tile.name)
        doc = {
            "tile": rep.name,
            "rows": [
                {
                    "n": r.n,
                    "c_n": _result_json(r.c_n),
                    "t_n": _result_json(r.t_n),
                }
                for r in rep.rows
            ],
            "certified_upper": tio.number_json(rep.certified_upper),
            "upper_from": rep.upper_from,
            "exact": tio.number_json(rep.exact),
            "lower_candidates": [
                {
                    "n": lc.n,
                    "epsilon": tio.number_json(lc.epsilon),
                    "value": tio.number_json(lc.value),
                    "binding": lc.binding,
                    "condition": lc.condition,
                }
                for lc in rep.lower_candidates
            ],
            "notes": rep.notes,
        }
        out.document(doc)
        lines = ["n  c_n  t_n  t_n/n"]
        for r in rep.rows:
            ratio = str(Fraction(r.t_n.value, r.n)) if r.t_n.optimal else "-"
            lines.append(f"{r.n}  {r.c_n.verdict()}  {r.t_n.verdict()}  {ratio}")
        lines.append(f"certified upper bound on c(T): {rep.certified_upper} ({rep.upper_from})")
        if rep.exact is not None:
            lines.append(f"c(T) = {rep.exact} exactly")
        for lc in rep.lower_candidates:
            lines.append(f"lower candidate n={lc.n}: {'binding' if lc.binding else 'non-binding'} ({lc.condition})")
        lines.extend(f"note: {note}" for note in rep.notes)
        out.summary("\n".join(lines))
        complete = all(r.c_n.optimal and r.t_n.optimal for r in rep.rows)
        return EXIT_OK if complete else EXIT_BOUNDED

    raise UsageError(f"unknown command {c!r}")


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INVALID
    out = _Output(getattr(args, "out", None), stdout, stderr)
    try:
        return _run(args, out)
    except (UsageError, ValueError) as exc:  # includes ParseError, NotWeaklyLinkable, NotReducedError
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except SearchBudgetExceeded as exc:
        stderr.write(f"bounded: {exc}\n")
        return EXIT_BOUNDED


def main() -> None:
    sys.exit(run())
