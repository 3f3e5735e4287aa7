"""Edge-colouring planar 2k-regular multigraphs whose duals are partial 3-trees.

The dual, signed negative on the duals of a perfect matching, has every face
a negative ``2k``-cycle; mapping it to ``SPC(2k - 1)`` and reading the label
of each image edge gives a proper ``2k``-edge-colouring of the primal map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import networkx as nx
import numpy as np

from .bounds import all_cliques, enumerate_wide_cliques, map_partial_ttree, prune_to_closed
from .core import NEG, POS, Graph, SignedGraph, components, is_bipartite, negative_girth
from .spc import spc_distance_graph
from .ttree import NotPartialTTree, recognize_partial_ttree

ODD_CUT_LIMIT = 24


class PreconditionError(ValueError):
    """A named hypothesis of the colouring pipeline does not hold."""

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


@dataclass(frozen=True)
class PlanarMap:
    """A multigraph with a rotation system.

    ``rotation[v]`` lists the edge ids at ``v`` in cyclic order; a loop's id
    appears twice, its first occurrence being the edge's first end.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        rotation = tuple(tuple(int(e) for e in r) for r in self.rotation)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotation", rotation)
        if len(rotation) != self.n:
            raise ValueError(f"need one rotation per vertex, got {len(rotation)} for n={self.n}")
        seen: dict[tuple[int, int], int] = {}
        for v, rot in enumerate(rotation):
            for e in rot:
                if not 0 <= e < len(edges):
                    raise ValueError(f"rotation at {v} names unknown edge {e}")
                if v not in edges[e]:
                    raise ValueError(f"edge {e} is not incident with vertex {v}")
                seen[e, v] = seen.get((e, v), 0) + 1
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range")
            want = {(e, u): 2} if u == v else {(e, u): 1, (e, v): 1}
            for key, count in want.items():
                if seen.get(key, 0) != count:
                    raise ValueError(f"edge {e} must appear {count} time(s) in the rotation at {key[1]}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def dart_positions(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Dart ``(edge, side)`` -> ``(vertex, index in rotation)``; side 0 leaves ``u``."""
        out = {}
        for v, rot in enumerate(self.rotation):
            for i, e in enumerate(rot):
                u, w = self.edges[e]
                if u == w:
                    side = 0 if (e, 0) not in out else 1
                else:
                    side = 0 if v == u else 1
                out[e, side] = (v, i)
        return out


@dataclass(frozen=True)
class EdgeColoring:
    """Colour per edge id; colour ``2k - 1`` is the label ``J``."""

    colors: tuple[int, ...]
    k: int


def _trace(M: PlanarMap) -> list[list[tuple[int, int]]]:
    pos = M.dart_positions()
    at = {where: dart for dart, where in pos.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for start in sorted(pos):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            e, side = d
            v, i = pos[e, 1 - side]
            d = at[v, (i + 1) % len(M.rotation[v])]
        if d != start:
            raise ValueError("rotation system does not trace closed faces")
        faces.append(face)
    return faces


def faces_from_rotation(M: PlanarMap) -> list[tuple[int, ...]]:
    """Faces as cyclic edge-id sequences; checks Euler's formula per component."""
    faces = _trace(M)
    c = len(components(M.graph()))
    if M.n - M.m + len(faces) != 1 + c:
        raise ValueError(
            f"rotation is not planar: n - m + f = {M.n - M.m + len(faces)}, expected {1 + c}"
        )
    return [tuple(e for e, _ in f) for f in faces]


@dataclass(frozen=True)
class Dual:
    """Dual map: vertex ``i`` is face ``faces[i]``; dual edge ``e`` crosses primal edge ``e``."""

    map: PlanarMap
    faces: tuple[tuple[int, ...], ...]

    @property
    def graph(self) -> Graph:
        return self.map.graph()


def dual_graph(M: PlanarMap) -> Dual:
    if len(components(M.graph())) != 1:
        raise ValueError("dual is defined here for connected maps only")
    darts = _trace(M)
    faces_from_rotation(M)
    face_of = {}
    for f, face in enumerate(darts):
        for d in face:
            face_of[d] = f
    edges = tuple((face_of[e, 0], face_of[e, 1]) for e in range(M.m))
    rotation = tuple(tuple(e for e, _ in face) for face in darts)
    dual = PlanarMap(len(darts), edges, rotation)
    return Dual(dual, tuple(tuple(e for e, _ in face) for face in darts))


def _simple_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for e, (u, v) in enumerate(G.edges):
        if u != v and not H.has_edge(u, v):
            H.add_edge(u, v, eid=e)
    return H


def perfect_matching(G: Graph) -> tuple[int, ...] | None:
    """Edge ids of a perfect matching (lowest id per vertex pair), or ``None``."""
    if G.n % 2:
        return None
    H = _simple_nx(G)
    matching = nx.max_weight_matching(H, maxcardinality=True)
    if 2 * len(matching) != G.n:
        return None
    return tuple(sorted(H[u][v]["eid"] for u, v in matching))


def tutte_violator(G: Graph) -> frozenset[int] | None:
    """A set ``U`` with more odd components in ``G - U`` than ``|U|``, or ``None``.

    Uses the Gallai-Edmonds decomposition: ``D`` is the set of vertices
    missed by some maximum matching and ``U = N(D) - D``.
    """
    if G.n % 2:
        return frozenset()
    H = _simple_nx(G)
    nu = len(nx.max_weight_matching(H, maxcardinality=True))
    if 2 * nu == G.n:
        return None
    D = set()
    for v in range(G.n):
        Hv = H.copy()
        Hv.remove_node(v)
        if len(nx.max_weight_matching(Hv, maxcardinality=True)) == nu:
            D.add(v)
    U = frozenset(set().union(*(set(H[v]) for v in D)) - D)
    rest = H.copy()
    rest.remove_nodes_from(U)
    odd = sum(len(c) % 2 for c in nx.connected_components(rest))
    if odd <= len(U):
        raise AssertionError("Gallai-Edmonds set does not violate Tutte's condition")
    return U


def min_odd_cut_at_least(G: Graph, r: int) -> tuple[bool, frozenset[int] | None]:
    """Every cut ``(X, V - X)`` with an odd side has at least ``r`` edges?

    Exhaustive over subsets avoiding the last vertex; returns a smallest
    violating odd side when the answer is no.
    """
    n = G.n
    if n > ODD_CUT_LIMIT:
        raise PreconditionError("unchecked", f"odd-cut check limited to {ODD_CUT_LIMIT} vertices")
    if n < 2:
        return True, None
    best_size, best_mask = None, None
    pairs = [(u, v) for u, v in G.edges if u != v]
    bits = n - 1
    chunk = 1 << 18
    for start in range(1, 1 << bits, chunk):
        masks = np.arange(start, min(start + chunk, 1 << bits), dtype=np.int64)
        cut = np.zeros(len(masks), dtype=np.int64)
        for u, v in pairs:
            cut += ((masks >> u) & 1) != ((masks >> v) & 1)
        size = np.zeros(len(masks), dtype=np.int64)
        for i in range(bits):
            size += (masks >> i) & 1
        odd = (size % 2 == 1) | ((n - size) % 2 == 1)
        bad = odd & (cut < r)
        if bad.any():
            idx = np.flatnonzero(bad)
            j = idx[np.argmin(cut[idx])]
            if best_size is None or cut[j] < best_size:
                best_size, best_mask = int(cut[j]), int(masks[j])
    if best_mask is None:
        return True, None
    X = {i for i in range(bits) if best_mask >> i & 1}
    if len(X) % 2 == 0:
        X = set(range(n)) - X
    return False, frozenset(X)


def verify_edge_coloring(G: Graph | PlanarMap, c: EdgeColoring | Sequence[int], r: int) -> bool:
    colors = tuple(c.colors if isinstance(c, EdgeColoring) else c)
    edges = G.edges
    if len(colors) != len(edges):
        raise ValueError(f"{len(colors)} colours for {len(edges)} edges")
    if any(not 0 <= col < r for col in colors):
        return False
    at: dict[int, set[int]] = {}
    for (u, v), col in zip(edges, colors):
        if u == v:
            return False
        for x in (u, v):
            if col in at.setdefault(x, set()):
                return False
            at[x].add(col)
    n = G.n
    degrees = [0] * n
    for u, v in edges:
        degrees[u] += 1
        degrees[v] += 1
    if len(set(degrees)) == 1 and degrees[0] == r:
        # regular of degree r: each colour class must cover every vertex
        return all(len(at.get(x, ())) == r for x in range(n))
    return True


@lru_cache(maxsize=None)
def spc_certificate(k: int):
    """The closed set of all ``4``-cliques of the distance graph of ``SPC(2k - 1)``."""
    D = spc_distance_graph(k)
    W, _ = prune_to_closed(all_cliques(D, 3), enumerate_wide_cliques(3, k))
    if len(W) == 0:
        raise AssertionError(f"SPC({2 * k - 1}) certificate is empty")
    return W


def edge_color(M: PlanarMap, k: int) -> EdgeColoring:
    """Proper ``2k``-edge-colouring of ``M`` through a map of its signed dual."""
    r = 2 * k
    if k < 2:
        raise PreconditionError("degree", "only even degree r = 2k >= 4 is handled")
    G = M.graph()
    if len(components(G)) != 1:
        raise PreconditionError("disconnected", "the map must be connected")
    degrees = [G.degree(v) for v in range(G.n)]
    if any(d != r for d in degrees):
        raise PreconditionError("not-regular", f"every vertex must have degree {r}")
    ok, X = min_odd_cut_at_least(G, r)
    if not ok:
        raise PreconditionError(
            "odd-cut", f"odd set {sorted(X)} is separated by fewer than {r} edges"
        )
    matching = perfect_matching(G)
    if matching is None:
        raise PreconditionError("no-perfect-matching", "no perfect matching exists")
    dual = dual_graph(M)
    Hg = dual.graph
    in_matching = set(matching)
    H = SignedGraph(
        Hg.n, tuple((u, v, NEG if e in in_matching else POS) for e, (u, v) in enumerate(Hg.edges))
    )
    if not is_bipartite(H):
        raise AssertionError("dual of an even-regular plane map is not bipartite")
    try:
        seq = recognize_partial_ttree(H, 3)
    except NotPartialTTree:
        raise PreconditionError("dual-treewidth", "the dual is not a partial 3-tree") from None
    # faces of the dual are the primal vertices: each meets the matching once
    for v in range(G.n):
        if sum(1 for e in M.rotation[v] if e in in_matching) != 1:
            raise AssertionError(f"face around vertex {v} is not negative")
    g = negative_girth(H)
    if g is None or g < r:
        raise AssertionError(f"signed dual has negative girth {g} < {r}")
    cert = spc_certificate(k)
    f = map_partial_ttree(H, seq, spc_distance_graph(k).base, cert)
    n = 2 * k - 1
    full = (1 << n) - 1
    colors = []
    for e, (a, b, s) in enumerate(H.edges):
        x, y = f.image[a], f.image[b]
        d = x ^ y
        if f.switching.flip[a] != f.switching.flip[b]:
            s = -s
        if d == full and s == NEG:
            colors.append(n)
        elif s == POS and d and d & (d - 1) == 0:
            colors.append(d.bit_length() - 1)
        else:
            raise AssertionError(f"dual edge {e} does not land on an edge of SPC({n})")
    coloring = EdgeColoring(tuple(colors), k)
    if not verify_edge_coloring(G, coloring, r):
        raise AssertionError("pipeline produced an improper colouring")
    return coloring
