"""JSON file formats for graphs, tiles, labelled cyc exports and witnesses.

Canonical form: ``json.dumps`` with default separators on one line, keys in
the order vertices, edges, A, B (tiles) or vertices, edges, labels (labelled
graphs), followed by a newline.  Parsing a canonical file and serializing it
again reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .multigraph import MultiGraph
from .tile import EXTERNAL, INTERNAL, CycGraph, EdgeLabel, Tile

Path = tuple[Any, ...]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


_WS = " \t\n\r"


def _skip(text: str, i: int) -> int:
    while i < len(text) and text[i] in _WS:
        i += 1
    return i


def _locate(text: str, path: Path) -> int:
    """Offset of the value at ``path`` inside syntactically valid JSON text."""
    decoder = json.JSONDecoder()
    i = _skip(text, 0)
    for step in path:
        if text[i] == "{":
            i = _skip(text, i + 1)
            while text[i] != "}":
                key, i = decoder.raw_decode(text, i)
                i = _skip(text, i)
                i = _skip(text, i + 1)  # ':'
                if key == step:
                    break
                _, i = decoder.raw_decode(text, i)
                i = _skip(text, i)
                if text[i] == ",":
                    i = _skip(text, i + 1)
            else:
                return i
        elif text[i] == "[":
            i = _skip(text, i + 1)
            for _ in range(int(step)):
                _, i = decoder.raw_decode(text, i)
                i = _skip(text, i)
                i = _skip(text, i + 1)  # ','
        else:
            break
    return i


class _Checker:
    def __init__(self, text: str):
        self.text = text

    def fail(self, message: str, path: Path) -> ParseError:
        try:
            line, col = _line_col(self.text, _locate(self.text, path))
        except (ValueError, IndexError):
            line, col = None, None
        return ParseError(message, line, col)

    def integer(self, value: Any, path: Path, what: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(f"{what} must be an integer, got {json.dumps(value)}", path)
        return value


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _check_keys(ck: _Checker, data: Any, required: Sequence[str], optional: Sequence[str], kind: str) -> None:
    if not isinstance(data, dict):
        raise ck.fail(f"{kind} file must hold a JSON object", ())
    for key in required:
        if key not in data:
            raise ck.fail(f"missing key {key!r}", ())
    for key in data:
        if key not in required and key not in optional:
            raise ck.fail(f"unknown key {key!r}", (key,))


def _graph_from(ck: _Checker, data: dict) -> MultiGraph:
    n = ck.integer(data["vertices"], ("vertices",), "'vertices'")
    if n < 0:
        raise ck.fail(f"'vertices' must be nonnegative, got {n}", ("vertices",))
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ck.fail("'edges' must be a list", ("edges",))
    out = []
    for i, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise ck.fail(f"edges[{i}] must be a pair [u, v]", ("edges", i))
        pair = []
        for j, x in enumerate(e):
            x = ck.integer(x, ("edges", i, j), f"edges[{i}][{j}]")
            if not 0 <= x < n:
                raise ck.fail(f"edges[{i}][{j}] = {x} is not a vertex (vertices = {n})", ("edges", i, j))
            pair.append(x)
        out.append(tuple(pair))
    return MultiGraph(n, tuple(out))


def _labels_from(ck: _Checker, data: Any, m: int) -> tuple[EdgeLabel, ...]:
    if not isinstance(data, list) or len(data) != m:
        raise ck.fail(f"'labels' must be a list with one entry per edge ({m})", ("labels",))
    labels = []
    for i, lab in enumerate(data):
        if not isinstance(lab, dict) or set(lab) != {"kind", "copy"}:
            raise ck.fail(f"labels[{i}] must be an object with keys 'kind' and 'copy'", ("labels", i))
        if lab["kind"] not in (INTERNAL, EXTERNAL):
            raise ck.fail(f"labels[{i}].kind must be 'internal' or 'external'", ("labels", i, "kind"))
        copy = ck.integer(lab["copy"], ("labels", i, "copy"), f"labels[{i}].copy")
        labels.append(EdgeLabel(lab["kind"], copy))
    return tuple(labels)


def parse_graph(text: str) -> MultiGraph:
    return parse_graph_document(text)[0]


def parse_graph_document(text: str) -> tuple[MultiGraph, tuple[EdgeLabel, ...] | None]:
    """A graph file, optionally carrying per-edge internal/external labels."""
    data = _load(text)
    ck = _Checker(text)
    _check_keys(ck, data, ("vertices", "edges"), ("labels",), "graph")
    g = _graph_from(ck, data)
    labels = _labels_from(ck, data["labels"], g.edge_count) if "labels" in data else None
    return g, labels


def parse_tile(text: str) -> Tile:
    data = _load(text)
    ck = _Checker(text)
    _check_keys(ck, data, ("vertices", "edges", "A", "B"), (), "tile")
    g = _graph_from(ck, data)
    seqs = []
    for name in ("A", "B"):
        seq = data[name]
        if not isinstance(seq, list):
            raise ck.fail(f"'{name}' must be a list", (name,))
        for i, x in enumerate(seq):
            x = ck.integer(x, (name, i), f"{name}[{i}]")
            if not 0 <= x < g.vertex_count:
                raise ck.fail(f"{name}[{i}] = {x} is not a vertex (vertices = {g.vertex_count})", (name, i))
        seqs.append(tuple(seq))
    if len(seqs[0]) != len(seqs[1]):
        raise ck.fail(f"A and B differ in length ({len(seqs[0])} vs {len(seqs[1])})", ("B",))
    return Tile(g, seqs[0], seqs[1])


def is_tile_document(text: str) -> bool:
    data = _load(text)
    return isinstance(data, dict) and ("A" in data or "B" in data)


def dumps(obj: Any) -> str:
    return json.dumps(obj) + "\n"


def graph_json(g: MultiGraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def tile_json(t: Tile) -> dict:
    return {**graph_json(t.graph), "A": list(t.A), "B": list(t.B)}


def cyc_json(c: CycGraph) -> dict:
    return {**graph_json(c.graph), "labels": [{"kind": lab.kind, "copy": lab.copy} for lab in c.labels]}


def serialize_graph(g: MultiGraph) -> str:
    return dumps(graph_json(g))


def serialize_tile(t: Tile) -> str:
    return dumps(tile_json(t))


def number_json(x: Fraction | int | None) -> int | str | None:
    """Whole numbers as JSON integers, other rationals as "p/q" strings."""
    if x is None:
        return None
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
