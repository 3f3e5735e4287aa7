"""Partial t-tree recognition, t-tree completion and distance weights.

A :class:`CliqueSequence` lists vertices in construction order: the first
``t + 1`` form the seed clique, and every later vertex is joined to a
``t``-clique of the vertices before it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import (
    Graph,
    SignedGraph,
    components,
    graph_distances,
    is_bipartite,
    negative_girth,
    signed_distances,
)
from .weighted import WeightedSignedGraph

_INF = float("inf")


class NotPartialTTree(ValueError):
    """Raised when a graph has treewidth larger than the requested ``t``."""


@dataclass(frozen=True)
class CliqueSequence:
    t: int
    order: tuple[int, ...]
    attach: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))
        object.__setattr__(
            self, "attach", tuple(tuple(int(v) for v in a) for a in self.attach)
        )
        seed = min(len(self.order), self.t + 1)
        if len(self.attach) != len(self.order) - seed:
            raise ValueError("one attachment set per non-seed vertex required")
        if len(set(self.order)) != len(self.order):
            raise ValueError("order repeats a vertex")

    @property
    def seed(self) -> tuple[int, ...]:
        return self.order[: min(len(self.order), self.t + 1)]

    @property
    def added(self) -> tuple[int, ...]:
        return self.order[len(self.seed):]

    def cliques(self) -> list[tuple[int, ...]]:
        """Seed clique followed by ``attach + (v,)`` for every later vertex."""
        return [self.seed] + [a + (v,) for v, a in zip(self.added, self.attach)]

    def to_json(self) -> dict:
        return {"t": self.t, "order": list(self.order), "attach": [list(a) for a in self.attach]}

    @classmethod
    def from_json(cls, data: dict) -> CliqueSequence:
        return cls(int(data["t"]), tuple(data["order"]), tuple(tuple(a) for a in data["attach"]))


def _simple_adjacency(G: Graph | SignedGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for u, v, *_ in G.edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}: partial t-trees are loopless")
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _elimination_order(adj: list[set[int]], t: int) -> list[int] | None:
    """Eliminate until at most ``t + 1`` vertices remain, each of degree ``<= t``.

    Depth-first over elimination choices.  The graph reached after
    eliminating a set does not depend on the order, so failed remaining sets
    are memoised.  A simplicial candidate is always safe and is taken alone.
    """
    n = len(adj)
    failed: set[frozenset[int]] = set()

    def eliminate(cur: dict[int, set[int]], v: int) -> dict[int, set[int]]:
        nbrs = cur[v]
        nxt = {u: set(ns) for u, ns in cur.items() if u != v}
        for u in nbrs:
            nxt[u].discard(v)
            nxt[u].update(w for w in nbrs if w != u)
        return nxt

    def search(cur: dict[int, set[int]], order: list[int]) -> list[int] | None:
        if len(cur) <= t + 1:
            return order
        key = frozenset(cur)
        if key in failed:
            return None
        cands = sorted((len(ns), v) for v, ns in cur.items() if len(ns) <= t)
        simplicial = [
            v for _, v in cands
            if all(b in cur[a] for a, b in itertools.combinations(cur[v], 2))
        ]
        choices = simplicial[:1] if simplicial else [v for _, v in cands]
        for v in choices:
            got = search(eliminate(cur, v), order + [v])
            if got is not None:
                return got
        failed.add(key)
        return None

    start = {v: set(adj[v]) for v in range(n)}
    return search(start, [])


def recognize_partial_ttree(G: Graph | SignedGraph, t: int) -> CliqueSequence:
    """A clique sequence of a ``t``-tree containing ``G`` (parallel edges collapsed).

    Raises :class:`NotPartialTTree` when the treewidth exceeds ``t``.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    adj = _simple_adjacency(G)
    elim = _elimination_order(adj, t)
    if elim is None:
        raise NotPartialTTree(f"graph has treewidth greater than {t}")
    eliminated = set(elim)
    seed = sorted(v for v in range(G.n) if v not in eliminated)
    # replay the elimination to record each vertex's later neighbours
    cur = [set(a) for a in adj]
    later: dict[int, set[int]] = {}
    for v in elim:
        nbrs = set(cur[v])
        later[v] = nbrs
        for u in nbrs:
            cur[u].discard(v)
            cur[u].update(w for w in nbrs if w != u)
        cur[v] = set()
    cliques: list[tuple[int, ...]] = [tuple(seed)]
    order = list(seed)
    attach: list[tuple[int, ...]] = []
    for v in reversed(elim):
        need = later[v]
        host = next(c for c in cliques if need <= set(c))
        pad = [u for u in sorted(host) if u not in need][: t - len(need)]
        a = tuple(sorted(need | set(pad)))
        attach.append(a)
        order.append(v)
        cliques.append(a + (v,))
    return CliqueSequence(t, tuple(order), tuple(attach))


def complete_to_ttree(G: Graph | SignedGraph, seq: CliqueSequence) -> Graph:
    """The simple ``t``-tree completion described by ``seq``; validates ``seq``."""
    if sorted(seq.order) != list(range(G.n)):
        raise ValueError("sequence order is not a permutation of the vertices")
    if len(seq.order) > seq.t + 1 and len(seq.seed) != seq.t + 1:
        raise ValueError("seed clique must have t + 1 vertices")
    adj: list[set[int]] = [set() for _ in range(G.n)]
    edges: list[tuple[int, int]] = []

    def add(u: int, v: int) -> None:
        if v not in adj[u]:
            adj[u].add(v)
            adj[v].add(u)
            edges.append((min(u, v), max(u, v)))

    for u, v in itertools.combinations(seq.seed, 2):
        add(u, v)
    placed = set(seq.seed)
    for v, a in zip(seq.added, seq.attach):
        if len(a) != seq.t or len(set(a)) != seq.t:
            raise ValueError(f"attachment set of {v} must have {seq.t} distinct vertices")
        if not set(a) <= placed:
            raise ValueError(f"attachment set of {v} uses vertices not yet placed")
        if any(y not in adj[x] for x, y in itertools.combinations(a, 2)):
            raise ValueError(f"attachment set of {v} is not a clique")
        for u in a:
            add(u, v)
        placed.add(v)
    for u, v, *_ in G.edges:
        if u != v and v not in adj[u]:
            raise ValueError(f"edge {u}-{v} of the graph is missing from the completion")
    return Graph(G.n, tuple(sorted(edges)))


def eq1_weights(G: SignedGraph, seq: CliqueSequence, k: int) -> WeightedSignedGraph:
    """Weight every completion edge by signed distance in ``G``, capped at ``k``.

    ``w(uv)`` is the algebraic distance when ``d(u, v) <= k``; otherwise it
    is ``k`` or ``k - 1``, whichever has the parity of ``d(u, v)``.
    """
    if k < 2:
        raise ValueError("k must be at least 2 (weight k - 1 must be nonzero)")
    if not is_bipartite(G):
        raise ValueError("graph is not bipartite")
    g = negative_girth(G)
    if g is not None and g < 2 * k:
        raise ValueError(f"negative girth {g} is below 2k = {2 * k}")
    if len(components(G)) > 1:
        raise ValueError("graph must be connected; handle components separately")
    H = complete_to_ttree(G, seq)
    cache: dict[int, tuple[list[float], list[float], list[float]]] = {}
    edges = []
    for u, v in H.edges:
        if u not in cache:
            plus, minus = signed_distances(G, u)
            cache[u] = (plus, minus, graph_distances(G, u))
        plus, minus, dist = cache[u]
        d = dist[v]
        if d <= k:
            if plus[v] == d and minus[v] == d and d < k:
                raise AssertionError(
                    f"vertices {u},{v} at distance {d} < k joined by paths of both signs"
                )
            w = int(d) if plus[v] == d else -int(d)
            if w == -k:
                w = k
        else:
            w = k if (d - k) % 2 == 0 else k - 1
        edges.append((u, v, w))
    return WeightedSignedGraph(G.n, tuple(edges), k)


def induced_subgraph(G: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, list[int]]:
    """Subgraph on ``vertices`` relabelled ``0..``; returns it with the old ids."""
    keep = sorted(vertices)
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (index[u], index[v], s) for u, v, s in G.edges if u in index and v in index
    )
    return SignedGraph(len(keep), edges), keep
