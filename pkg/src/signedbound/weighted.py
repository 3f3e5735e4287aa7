"""Signed edge-weighted graphs, the bar-bar gadget expansion and 2k-wideness.

A weight ``w`` on an edge ``xy`` stands for a pair of internally disjoint
``x``-``y`` paths of lengths ``|w|`` and ``2k - |w|`` with opposite signs,
the first carrying the sign of ``w``.  Weights ``+k`` and ``-k`` describe the
same gadget, so magnitude-``k`` weights are always stored as ``+k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import NEG, POS, SignedGraph, negative_girth, solve_parity_constraints


def canonicalize_weight(w: int, k: int) -> int:
    w = int(w)
    if w == 0 or abs(w) > k:
        raise ValueError(f"weight {w} outside 1..{k} in magnitude")
    return k if w == -k else w


def weight_values(k: int) -> tuple[int, ...]:
    """All canonical weights for parameter ``k``: ``-(k-1)..-1, 1..k``."""
    return tuple(range(-(k - 1), 0)) + tuple(range(1, k + 1))


@dataclass(frozen=True)
class WeightedSignedGraph:
    """``(H, w)`` on vertices ``0..n-1``; edge ids are tuple positions.

    When ``k`` is given, every weight is range-checked and canonicalised.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()
    k: int | None = None

    def __post_init__(self):
        edges = []
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), int(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            if w == 0:
                raise ValueError(f"zero weight on edge {u}-{v}")
            if self.k is not None:
                w = canonicalize_weight(w, self.k)
            edges.append((u, v, w))
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight_map(self) -> dict[tuple[int, int], int]:
        """Pair -> weight for simple graphs (both orientations)."""
        out: dict[tuple[int, int], int] = {}
        for u, v, w in self.edges:
            if out.get((u, v), w) != w:
                raise ValueError(f"conflicting parallel weights on {u}-{v}")
            out[u, v] = out[v, u] = w
        return out


def is_bipartite_weighted(H: WeightedSignedGraph) -> bool:
    return solve_parity_constraints(H.n, ((u, v, w % 2) for u, v, w in H.edges)) is not None


def barbar_expand(H: WeightedSignedGraph, k: int) -> SignedGraph:
    """Replace every weighted edge by its negative ``2k``-cycle gadget.

    Original vertices keep their ids; internal vertices are numbered from
    ``n`` in edge order, short path first.  A negative path carries its one
    negative edge first, next to the edge's first endpoint.
    """
    edges: list[tuple[int, int, int]] = []
    nxt = H.n
    for x, y, w in H.edges:
        w = canonicalize_weight(w, k)
        sign = POS if w > 0 else NEG
        for length, s in ((abs(w), sign), (2 * k - abs(w), -sign)):
            path = [x] + list(range(nxt, nxt + length - 1)) + [y]
            nxt += length - 1
            for i in range(length):
                edges.append((path[i], path[i + 1], NEG if (s == NEG and i == 0) else POS))
    return SignedGraph(nxt, tuple(edges))


def triangle_is_2k_wide(a: int, b: int, c: int, k: int) -> bool:
    if (a + b + c) % 2:
        raise ValueError(f"triangle ({a}, {b}, {c}) has odd weight sum")
    for w in (a, b, c):
        if w == 0 or abs(w) > k:
            raise ValueError(f"weight {w} outside 1..{k} in magnitude")
    x, y, z = sorted((a, b, c), key=abs)
    if x * y * z < 0:
        return abs(x) + abs(y) + abs(z) >= 2 * k
    return abs(x) + abs(y) >= abs(z)


@dataclass(frozen=True)
class WeightedClique:
    """A complete weighted graph on labelled vertices.

    ``weights`` lists the pair weights in ``itertools.combinations`` order of
    ``vertices``.
    """

    vertices: tuple[int, ...]
    weights: tuple[int, ...]
    k: int

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("clique vertices must be distinct")
        pairs = len(vertices) * (len(vertices) - 1) // 2
        if len(self.weights) != pairs:
            raise ValueError(f"expected {pairs} weights, got {len(self.weights)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(
            self, "weights", tuple(canonicalize_weight(w, self.k) for w in self.weights)
        )

    @classmethod
    def from_pairs(
        cls, vertices: Sequence[int], weight: Mapping[tuple[int, int], int], k: int
    ) -> WeightedClique:
        ws = []
        for u, v in itertools.combinations(vertices, 2):
            if (u, v) in weight:
                ws.append(weight[u, v])
            elif (v, u) in weight:
                ws.append(weight[v, u])
            else:
                raise ValueError(f"missing pair {u}-{v}")
        return cls(tuple(vertices), tuple(ws), k)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def pair_weights(self) -> dict[tuple[int, int], int]:
        out = {}
        for (u, v), w in zip(itertools.combinations(self.vertices, 2), self.weights):
            out[u, v] = out[v, u] = w
        return out

    def weight(self, u: int, v: int) -> int:
        return self.pair_weights()[u, v]

    def as_graph(self) -> WeightedSignedGraph:
        index = {v: i for i, v in enumerate(self.vertices)}
        return WeightedSignedGraph(
            self.size,
            tuple(
                (index[u], index[v], w)
                for (u, v), w in zip(itertools.combinations(self.vertices, 2), self.weights)
            ),
            self.k,
        )

    def switched(self, flipped: Iterable[int]) -> WeightedClique:
        flip = set(flipped)
        ws = tuple(
            canonicalize_weight(-w if ((u in flip) != (v in flip)) else w, self.k)
            for (u, v), w in zip(itertools.combinations(self.vertices, 2), self.weights)
        )
        return WeightedClique(self.vertices, ws, self.k)


def clique_is_2k_wide(K: WeightedClique) -> bool:
    if not is_bipartite_weighted(K.as_graph()):
        raise ValueError("clique is not bipartite (some triangle has odd weight sum)")
    w = K.pair_weights()
    return all(
        triangle_is_2k_wide(w[x, y], w[y, z], w[x, z], K.k)
        for x, y, z in itertools.combinations(K.vertices, 3)
    )


def is_2k_wide(H: WeightedSignedGraph, k: int) -> bool:
    """Negative girth of the expansion equals ``2k`` (computed, not assumed)."""
    if H.m == 0:
        return True
    return negative_girth(barbar_expand(H, k)) == 2 * k
