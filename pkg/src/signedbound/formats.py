"""Text formats for signed graphs, weighted graphs, planar maps and their outputs.

``.sg``   ``sg <n> <m>`` then ``u v s`` lines with ``s`` in ``+``/``-``
``.swg``  ``swg <n> <m>`` then ``u v w`` lines, ``w`` a nonzero integer
``.pm``   ``pm <n> <m>``, ``u v`` lines, then ``rot <v>: <edge ids>`` lines
``.labels`` one ``<edge id> <label index>`` line per edge

``#`` starts a comment; blank lines are ignored.  Writers emit exactly the
form the readers accept, so written files round-trip byte for byte.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path
from typing import Iterator

from .core import NEG, POS, SignedGraph
from .edgecolor import EdgeColoring, PlanarMap
from .weighted import WeightedSignedGraph, canonicalize_weight


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected integer {what}, got {tok!r}", no) from None


def _header(lines, magic: str) -> tuple[int, int, int]:
    try:
        no, toks = next(lines)
    except StopIteration:
        raise FormatError(f"empty input; expected '{magic} <n> <m>'", 1) from None
    if len(toks) != 3 or toks[0] != magic:
        raise FormatError(f"expected header '{magic} <n> <m>'", no)
    n, m = _int(toks[1], no, "n"), _int(toks[2], no, "m")
    if n < 0 or m < 0:
        raise FormatError("negative count in header", no)
    return no, n, m


def _vertex(tok: str, no: int, n: int) -> int:
    v = _int(tok, no, "vertex")
    if not 0 <= v < n:
        raise FormatError(f"vertex {v} out of range 0..{n - 1}", no)
    return v


def parse_sg(text: str) -> SignedGraph:
    lines = _lines(text)
    _, n, m = _header(lines, "sg")
    edges = []
    for no, toks in lines:
        if len(toks) != 3 or toks[2] not in ("+", "-"):
            raise FormatError("expected 'u v s' with s in {+,-}", no)
        edges.append((_vertex(toks[0], no, n), _vertex(toks[1], no, n), POS if toks[2] == "+" else NEG))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    return SignedGraph(n, tuple(edges))


def format_sg(G: SignedGraph) -> str:
    out = [f"sg {G.n} {G.m}"]
    out += [f"{u} {v} {'+' if s == POS else '-'}" for u, v, s in G.edges]
    return "\n".join(out) + "\n"


def parse_swg(text: str, k: int | None = None) -> WeightedSignedGraph:
    """Read a weighted graph; with ``k`` given, weights are canonicalised (with a warning)."""
    lines = _lines(text)
    _, n, m = _header(lines, "swg")
    edges = []
    for no, toks in lines:
        if len(toks) != 3:
            raise FormatError("expected 'u v w'", no)
        u, v = _vertex(toks[0], no, n), _vertex(toks[1], no, n)
        w = _int(toks[2], no, "weight")
        if w == 0:
            raise FormatError("zero weight", no)
        if k is not None:
            if abs(w) > k:
                raise FormatError(f"weight {w} exceeds k = {k} in magnitude", no)
            c = canonicalize_weight(w, k)
            if c != w:
                warnings.warn(f"line {no}: weight {w} rewritten as {c}", stacklevel=2)
            w = c
        edges.append((u, v, w))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    return WeightedSignedGraph(n, tuple(edges), k)


def format_swg(H: WeightedSignedGraph) -> str:
    out = [f"swg {H.n} {H.m}"] + [f"{u} {v} {w}" for u, v, w in H.edges]
    return "\n".join(out) + "\n"


def parse_pm(text: str) -> PlanarMap:
    lines = _lines(text)
    _, n, m = _header(lines, "pm")
    edges = []
    rotation: dict[int, tuple[int, ...]] = {}
    for no, toks in lines:
        if toks[0] == "rot":
            if len(toks) < 2 or not toks[1].endswith(":"):
                raise FormatError("expected 'rot <v>: <edge ids>'", no)
            v = _vertex(toks[1][:-1], no, n)
            if v in rotation:
                raise FormatError(f"second rotation for vertex {v}", no)
            rotation[v] = tuple(_int(t, no, "edge id") for t in toks[2:])
        else:
            if rotation:
                raise FormatError("edge line after rotation lines", no)
            if len(toks) != 2:
                raise FormatError("expected 'u v'", no)
            edges.append((_vertex(toks[0], no, n), _vertex(toks[1], no, n)))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    if len(rotation) != n:
        raise FormatError(f"expected {n} rotation lines, found {len(rotation)}")
    try:
        return PlanarMap(n, tuple(edges), tuple(rotation[v] for v in range(n)))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_pm(M: PlanarMap) -> str:
    out = [f"pm {M.n} {M.m}"] + [f"{u} {v}" for u, v in M.edges]
    out += [f"rot {v}: " + " ".join(map(str, rot)) for v, rot in enumerate(M.rotation)]
    return "\n".join(out) + "\n"


def format_labels(labels) -> str:
    return "".join(f"{e} {lab}\n" for e, lab in enumerate(labels))


def parse_labels(text: str) -> tuple[int, ...]:
    pairs = []
    for no, toks in _lines(text):
        if len(toks) != 2:
            raise FormatError("expected '<edge id> <label>'", no)
        pairs.append((_int(toks[0], no, "edge id"), _int(toks[1], no, "label")))
    ids = [e for e, _ in pairs]
    if ids != list(range(len(pairs))):
        raise FormatError("label lines must list edge ids 0..m-1 in order")
    return tuple(lab for _, lab in pairs)


def format_coloring(c: EdgeColoring) -> str:
    return "".join(f"color {e} {col}\n" for e, col in enumerate(c.colors))


def parse_coloring(text: str, k: int) -> EdgeColoring:
    colors = []
    for no, toks in _lines(text):
        if len(toks) != 3 or toks[0] != "color":
            raise FormatError("expected 'color <edge id> <label>'", no)
        if _int(toks[1], no, "edge id") != len(colors):
            raise FormatError("colour lines must list edge ids 0..m-1 in order", no)
        colors.append(_int(toks[2], no, "label"))
    return EdgeColoring(tuple(colors), k)


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
