"""Signed multigraphs, switching, signed distances and the homomorphism oracle.

Vertices are the integers ``0..n-1``.  Edge ids are positions in the edge
tuple, so they are dense and unique by construction.  Signs are ``+1``/``-1``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

POS = 1
NEG = -1
_INF = float("inf")


@dataclass(frozen=True)
class Graph:
    """Unsigned multigraph; loops and parallel edges allowed."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        """Simple support: neighbour sets without loops or multiplicity."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        # loops count twice
        return sum((u == v) + (w == v) for u, w in self.edges)


@dataclass(frozen=True)
class SignedGraph:
    """A signed multigraph ``(G, sigma)``.

    ``labels`` is optional per-edge metadata (the projective cube uses it to
    carry the generator each edge realises); it is ignored by every signed
    operation.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        edges = tuple((int(u), int(v), int(s)) for u, v, s in self.edges)
        for u, v, s in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            if s not in (POS, NEG):
                raise ValueError(f"edge sign must be +1 or -1, got {s}")
        object.__setattr__(self, "edges", edges)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(edges):
                raise ValueError("one label per edge required")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per vertex: ``(edge_id, other_end, sign)``; a loop is listed once."""
        inc: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v, s) in enumerate(self.edges):
            inc[u].append((eid, v, s))
            if u != v:
                inc[v].append((eid, u, s))
        return tuple(tuple(i) for i in inc)

    @cached_property
    def pair_signs(self) -> dict[tuple[int, int], int]:
        """Bitmask of edge signs per vertex pair (bit 0: positive, bit 1: negative).

        Keys are stored in both orientations; loops under ``(v, v)``.
        """
        out: dict[tuple[int, int], int] = {}
        for u, v, s in self.edges:
            bit = 1 if s == POS else 2
            out[u, v] = out.get((u, v), 0) | bit
            out[v, u] = out[u, v]
        return out

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        return self.underlying().neighbours

    def underlying(self) -> Graph:
        return Graph(self.n, tuple((u, v) for u, v, _ in self.edges))

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def with_signs(self, signs: Sequence[int]) -> SignedGraph:
        return SignedGraph(
            self.n, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs)), self.labels
        )


@dataclass(frozen=True)
class Switching:
    """Which vertices are switched (``True`` = switched)."""

    flip: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "flip", tuple(bool(f) for f in self.flip))

    @classmethod
    def identity(cls, n: int) -> Switching:
        return cls((False,) * n)

    @classmethod
    def at(cls, n: int, vertices: Iterable[int]) -> Switching:
        chosen = set(vertices)
        return cls(tuple(v in chosen for v in range(n)))

    def __len__(self) -> int:
        return len(self.flip)

    def sign(self, v: int) -> int:
        return NEG if self.flip[v] else POS


@dataclass(frozen=True)
class VertexMap:
    """A homomorphism candidate: vertex images plus a switching of the source."""

    image: tuple[int, ...]
    switching: Switching

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(i) for i in self.image))
        if len(self.image) != len(self.switching):
            raise ValueError("image and switching sizes differ")


class Cycle(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:  # type: ignore[override]
        return len(self.edges)


def cycle_sign(G: SignedGraph, edge_ids: Iterable[int]) -> int:
    s = POS
    for e in edge_ids:
        s *= G.edges[e][2]
    return s


# ---------------------------------------------------------------------------
# Switching
# ---------------------------------------------------------------------------


def switch_at(G: SignedGraph, S: Switching) -> SignedGraph:
    if len(S) != G.n:
        raise ValueError(f"switching has size {len(S)}, graph has {G.n} vertices")
    edges = tuple(
        (u, v, s if (u == v or S.flip[u] == S.flip[v]) else -s) for u, v, s in G.edges
    )
    return SignedGraph(G.n, edges, G.labels)


def solve_parity_constraints(
    n: int, constraints: Iterable[tuple[int, int, int]]
) -> Switching | None:
    """Find flips with ``flip[u] xor flip[v] == p`` for every ``(u, v, p)``.

    Spanning-forest propagation per component, then verification of the
    remaining constraints.  ``None`` when inconsistent.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    cons = list(constraints)
    for u, v, p in cons:
        if u == v:
            if p:
                return None
            continue
        adj[u].append((v, p))
        adj[v].append((u, p))
    flip: list[int | None] = [None] * n
    for root in range(n):
        if flip[root] is not None:
            continue
        flip[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, p in adj[x]:
                want = flip[x] ^ p
                if flip[y] is None:
                    flip[y] = want
                    queue.append(y)
    for u, v, p in cons:
        if flip[u] ^ flip[v] != p:
            return None
    return Switching(tuple(bool(f) for f in flip))


def _same_underlying(G1: SignedGraph, G2: SignedGraph) -> bool:
    if G1.n != G2.n or G1.m != G2.m:
        return False
    return all(
        {u1, v1} == {u2, v2} for (u1, v1, _), (u2, v2, _) in zip(G1.edges, G2.edges)
    )


def is_switching_equivalent(G1: SignedGraph, G2: SignedGraph) -> Switching | None:
    """A switching ``S`` with ``switch_at(G2, S) == G1``, or ``None``."""
    if not _same_underlying(G1, G2):
        raise ValueError("switching equivalence needs identical underlying multigraphs")
    return solve_parity_constraints(
        G1.n,
        ((u, v, int(s1 != s2)) for (u, v, s1), (_, _, s2) in zip(G1.edges, G2.edges)),
    )


# ---------------------------------------------------------------------------
# Distances on the double cover
# ---------------------------------------------------------------------------


def signed_distances(G: SignedGraph, x: int) -> tuple[list[float], list[float]]:
    """Shortest positive and negative walk lengths from ``x`` to every vertex.

    BFS on the signed double cover; ``inf`` marks unreachable states.
    """
    dist = [[_INF, _INF] for _ in range(G.n)]
    dist[x][0] = 0
    queue = deque([(x, 0)])
    inc = G.incidence
    while queue:
        v, p = queue.popleft()
        d = dist[v][p] + 1
        for _, w, s in inc[v]:
            q = p ^ (s == NEG)
            if dist[w][q] == _INF:
                dist[w][q] = d
                queue.append((w, q))
    return [a for a, _ in dist], [b for _, b in dist]


def d_plus(G: SignedGraph, x: int, y: int) -> int | None:
    d = signed_distances(G, x)[0][y]
    return None if d == _INF else int(d)


def d_minus(G: SignedGraph, x: int, y: int) -> int | None:
    d = signed_distances(G, x)[1][y]
    return None if d == _INF else int(d)


def algebraic_distance(G: SignedGraph, x: int, y: int) -> int | None:
    """``d(x, y)`` signed by a shortest path; positive on ties, ``None`` if unreachable."""
    plus, minus = signed_distances(G, x)
    return _algebraic(plus[y], minus[y])


def _algebraic(plus: float, minus: float) -> int | None:
    d = min(plus, minus)
    if d == _INF:
        return None
    # a walk as short as the graph distance is a path
    return int(d) if plus == d else -int(d)


def algebraic_distance_table(G: SignedGraph) -> list[list[int | None]]:
    table = []
    for x in range(G.n):
        plus, minus = signed_distances(G, x)
        table.append([_algebraic(p, m) for p, m in zip(plus, minus)])
    return table


def graph_distances(G: SignedGraph | Graph, x: int) -> list[float]:
    dist = [_INF] * G.n
    dist[x] = 0
    queue = deque([x])
    nbrs = G.neighbours
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if dist[w] == _INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def components(G: SignedGraph | Graph) -> list[list[int]]:
    seen = [False] * G.n
    out = []
    nbrs = G.neighbours
    for r in range(G.n):
        if seen[r]:
            continue
        seen[r] = True
        comp, stack = [], [r]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def _shortest_odd_closed_walk(G: SignedGraph, odd_edge: Sequence[bool]) -> Cycle | None:
    """Shortest closed walk using an odd number of ``odd_edge`` edges.

    A globally shortest such walk has no repeated vertex (splitting it at a
    repeat leaves a shorter walk with the same parity), so it is a cycle.
    """
    best: Cycle | None = None
    inc = G.incidence
    for r in range(G.n):
        parent: dict[tuple[int, int], tuple[int, int, int]] = {(r, 0): (-1, -1, -1)}
        dist = {(r, 0): 0}
        queue = deque([(r, 0)])
        found = False
        while queue and not found:
            v, p = queue.popleft()
            if best is not None and dist[v, p] + 1 >= len(best):
                break
            for eid, w, _ in inc[v]:
                q = p ^ odd_edge[eid]
                if (w, q) not in dist:
                    dist[w, q] = dist[v, p] + 1
                    parent[w, q] = (v, p, eid)
                    if (w, q) == (r, 1):
                        found = True
                        break
                    queue.append((w, q))
        if not found:
            continue
        verts, edges = [], []
        state = (r, 1)
        while state != (r, 0):
            v, p, eid = parent[state]
            edges.append(eid)
            verts.append(state[0])
            state = (v, p)
        # edge i joins vertex i and vertex i + 1 (cyclically), starting at r
        cyc = Cycle((r,) + tuple(reversed(verts))[:-1], tuple(reversed(edges)))
        if best is None or len(cyc) < len(best):
            best = cyc
    return best


def shortest_negative_cycle(G: SignedGraph) -> Cycle | None:
    return _shortest_odd_closed_walk(G, [s == NEG for _, _, s in G.edges])


def shortest_odd_cycle(G: SignedGraph) -> Cycle | None:
    return _shortest_odd_closed_walk(G, [True] * G.m)


def negative_girth(G: SignedGraph) -> int | None:
    c = shortest_negative_cycle(G)
    return None if c is None else len(c)


def is_bipartite(G: SignedGraph | Graph) -> bool:
    return solve_parity_constraints(G.n, ((u, v, 1) for u, v, *_ in G.edges)) is not None


def iter_cycles(G: SignedGraph, max_length: int | None = None) -> Iterator[Cycle]:
    """Every cycle of the multigraph exactly once (loops and digons included).

    Exhaustive; meant for small graphs and bounded lengths.
    """
    limit = G.m if max_length is None else max_length
    for eid, (u, v, _) in enumerate(G.edges):
        if u == v and limit >= 1:
            yield Cycle((u,), (eid,))
    parallel: dict[tuple[int, int], list[int]] = {}
    for eid, (u, v, _) in enumerate(G.edges):
        if u != v:
            parallel.setdefault((min(u, v), max(u, v)), []).append(eid)
    if limit >= 2:
        for (u, v), ids in sorted(parallel.items()):
            for e1, e2 in itertools.combinations(ids, 2):
                yield Cycle((u, v), (e1, e2))
    if limit < 3:
        return
    nbrs = G.neighbours
    for s in range(G.n):
        path = [s]
        on_path = {s}

        def extend() -> Iterator[list[int]]:
            v = path[-1]
            for w in sorted(nbrs[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield list(path)
                if w <= s or w in on_path or len(path) >= limit:
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.discard(w)

        for verts in extend():
            hops = [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]
            choices = [parallel[min(a, b), max(a, b)] for a, b in hops]
            for combo in itertools.product(*choices):
                yield Cycle(tuple(verts), tuple(combo))


def _cycle_matches(G: SignedGraph, cyc: Cycle, sign: int | None, parity: str) -> bool:
    if sign is not None and cycle_sign(G, cyc.edges) != sign:
        return False
    if parity == "even" and len(cyc) % 2:
        return False
    if parity == "odd" and len(cyc) % 2 == 0:
        return False
    return True


def _shortest_cycle_search(G: SignedGraph, sign: int | None, parity: str) -> Cycle | None:
    # loops and digons first, then a bounded simple-cycle search from each
    # minimum vertex with a distance lower bound back to the start
    best: Cycle | None = None
    for cyc in iter_cycles(G, max_length=2):
        if _cycle_matches(G, cyc, sign, parity) and (best is None or len(cyc) < len(best)):
            best = cyc
    if best is not None and len(best) == 1:
        return best
    nbrs = G.neighbours
    pair_signs = G.pair_signs
    edge_of: dict[tuple[int, int, int], int] = {}
    for eid, (u, v, s) in enumerate(G.edges):
        if u != v:
            edge_of.setdefault((u, v, s), eid)
            edge_of.setdefault((v, u, s), eid)
    want_neg = None if sign is None else (sign == NEG)
    for s in range(G.n):
        allowed = [w >= s for w in range(G.n)]
        back = [_INF] * G.n
        back[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if allowed[w] and back[w] == _INF:
                    back[w] = back[v] + 1
                    queue.append(w)
        path = [s]
        on_path = {s}

        def sign_options(a: int, b: int) -> tuple[int, ...]:
            mask = pair_signs[a, b]
            return tuple(x for x, bit in ((POS, 1), (NEG, 2)) if mask & bit)

        def dfs(v: int, length: int, neg: int, chosen: list[int]) -> None:
            nonlocal best
            for w in sorted(nbrs[v]):
                if w == s and length >= 2 and path[1] < path[-1]:
                    total = length + 1
                    if best is not None and total >= len(best):
                        continue
                    if parity == "even" and total % 2:
                        continue
                    if parity == "odd" and total % 2 == 0:
                        continue
                    for sg in sign_options(v, s):
                        nneg = neg ^ (sg == NEG)
                        if want_neg is None or nneg == want_neg:
                            edges = chosen + [edge_of[v, s, sg]]
                            best = Cycle(tuple(path), tuple(edges))
                            break
                    continue
                if w < s or w == s or w in on_path:
                    continue
                if best is not None and length + 1 + back[w] >= len(best):
                    continue
                path.append(w)
                on_path.add(w)
                for sg in sign_options(v, w):
                    dfs(w, length + 1, neg ^ (sg == NEG), chosen + [edge_of[v, w, sg]])
                path.pop()
                on_path.discard(w)

        dfs(s, 0, 0, [])
    return best


def find_shortest_cycle(
    G: SignedGraph, sign: int | None = None, parity: str = "any"
) -> Cycle | None:
    """Shortest cycle with the requested sign (``+1``, ``-1`` or ``None``) and parity."""
    if parity not in ("even", "odd", "any"):
        raise ValueError(f"parity must be even, odd or any, got {parity!r}")
    if sign not in (POS, NEG, None):
        raise ValueError(f"sign must be +1, -1 or None, got {sign!r}")
    if sign == NEG and parity == "any":
        return shortest_negative_cycle(G)
    if sign is None and parity == "odd":
        return shortest_odd_cycle(G)
    return _shortest_cycle_search(G, sign, parity)


def shortest_cycle(G: SignedGraph, sign: int | None = None, parity: str = "any") -> int | None:
    c = find_shortest_cycle(G, sign, parity)
    return None if c is None else len(c)


def contains_Ok_element(G: SignedGraph, k: int) -> Cycle | None:
    """A cycle of ``G`` that does not map to the negative ``k``-cycle, or ``None``.

    Such a cycle is a positive odd cycle, a negative cycle shorter than ``k``,
    or a negative cycle whose length has the other parity from ``k``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k % 2 == 0:
        # every odd cycle is excluded, leaving short negative ones
        odd = shortest_odd_cycle(G)
        if odd is not None:
            return odd
    else:
        # excluded: sign != (-1)^length, i.e. negative in the negated signature
        flipped = SignedGraph(G.n, tuple((u, v, -s) for u, v, s in G.edges))
        bad = shortest_negative_cycle(flipped)
        if bad is not None:
            return bad
    neg = shortest_negative_cycle(G)
    if neg is not None and len(neg) < k:
        return neg
    return None


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------


def _search_order(G: SignedGraph) -> list[int]:
    # connected greedy order: most already-placed neighbours, then degree, then id
    nbrs = G.neighbours
    deg = [G.degree(v) for v in range(G.n)]
    placed_nbrs = [0] * G.n
    order: list[int] = []
    used = [False] * G.n
    for _ in range(G.n):
        v = min(
            (v for v in range(G.n) if not used[v]),
            key=lambda v: (-placed_nbrs[v], -deg[v], v),
        )
        used[v] = True
        order.append(v)
        for w in nbrs[v]:
            placed_nbrs[w] += 1
    return order


def _swap_mask(mask: int) -> int:
    return ((mask & 1) << 1) | ((mask & 2) >> 1)


def find_homomorphism(G: SignedGraph, B: SignedGraph) -> VertexMap | None:
    """Exhaustive backtracking search for a signed homomorphism ``G -> B``.

    Values are ``(image, switched)`` pairs tried in target-id order, unswitched
    first; domains are filtered forward along edges.  The returned witness is
    the first one in that order.  Exponential in the worst case.
    """
    if G.n == 0:
        return VertexMap((), Switching(()))
    if B.n == 0:
        return None
    values = range(2 * B.n)  # value = 2 * image + flip
    # allowed[(mask, value)] -> values admissible at the other end of a
    # G-pair whose signs are ``mask``
    b_pairs = B.pair_signs
    allowed: dict[tuple[int, int], frozenset[int]] = {}

    def admissible(mask: int, val: int) -> frozenset[int]:
        key = (mask, val)
        got = allowed.get(key)
        if got is None:
            a, fa = divmod(val, 2)
            out = []
            for b in range(B.n):
                have = b_pairs.get((a, b), 0)
                for fb in (0, 1):
                    need = mask if fa == fb else _swap_mask(mask)
                    if need & have == need:
                        out.append(2 * b + fb)
            got = allowed[key] = frozenset(out)
        return got

    g_pairs: dict[int, dict[int, int]] = {v: {} for v in range(G.n)}
    loop_mask = [0] * G.n
    for u, v, s in G.edges:
        bit = 1 if s == POS else 2
        if u == v:
            loop_mask[u] |= bit
        else:
            g_pairs[u][v] = g_pairs[u].get(v, 0) | bit
            g_pairs[v][u] = g_pairs[v].get(u, 0) | bit

    domains: list[set[int]] = []
    for v in range(G.n):
        dom = set(values)
        if loop_mask[v]:
            dom = {
                val for val in dom
                if b_pairs.get((val // 2, val // 2), 0) & loop_mask[v] == loop_mask[v]
            }
        domains.append(dom)

    order = _search_order(G)
    # first vertex of each component stays unswitched (switching a whole
    # component maps solutions to solutions, so the first witness is kept)
    seen_comp: set[int] = set()
    comp_of = [0] * G.n
    for ci, comp in enumerate(components(G)):
        for v in comp:
            comp_of[v] = ci
    for v in order:
        if comp_of[v] not in seen_comp:
            seen_comp.add(comp_of[v])
            domains[v] = {val for val in domains[v] if val % 2 == 0}

    assignment: dict[int, int] = {}

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for val in sorted(domains[v]):
            trail: list[tuple[int, set[int]]] = []
            ok = True
            for w, mask in g_pairs[v].items():
                if w in assignment:
                    continue
                keep = domains[w] & admissible(mask, val)
                if not keep:
                    ok = False
                    break
                if len(keep) != len(domains[w]):
                    trail.append((w, domains[w]))
                    domains[w] = keep
            if ok:
                assignment[v] = val
                if search(i + 1):
                    return True
                del assignment[v]
            for w, old in reversed(trail):
                domains[w] = old
        return False

    if not search(0):
        return None
    image = tuple(assignment[v] // 2 for v in range(G.n))
    flips = tuple(bool(assignment[v] % 2) for v in range(G.n))
    return VertexMap(image, Switching(flips))


def verify_homomorphism(G: SignedGraph, B: SignedGraph, f: VertexMap) -> bool:
    if len(f.image) != G.n:
        raise ValueError(f"map has {len(f.image)} images, graph has {G.n} vertices")
    if any(not (0 <= i < B.n) for i in f.image):
        return False
    pairs = B.pair_signs
    for u, v, s in G.edges:
        if u != v and f.switching.flip[u] != f.switching.flip[v]:
            s = -s
        bit = 1 if s == POS else 2
        if not pairs.get((f.image[u], f.image[v]), 0) & bit:
            return False
    return True


def find_isomorphism(G: SignedGraph, H: SignedGraph) -> VertexMap | None:
    """A bijection plus switching of ``G`` turning it into ``H`` edge-for-edge.

    Pair multiplicities must agree exactly; signs must agree after switching.
    Backtracking; small graphs only.
    """
    if G.n != H.n or G.m != H.m:
        return None

    def pair_multisets(X: SignedGraph) -> dict[tuple[int, int], tuple[int, int]]:
        out: dict[tuple[int, int], list[int]] = {}
        for u, v, s in X.edges:
            key = (u, v) if u <= v else (v, u)
            cnt = out.setdefault(key, [0, 0])
            cnt[0 if s == POS else 1] += 1
        return {key: (a, b) for key, (a, b) in out.items()}

    gm, hm = pair_multisets(G), pair_multisets(H)

    def count(m: dict, a: int, b: int) -> tuple[int, int]:
        return m.get((a, b) if a <= b else (b, a), (0, 0))

    def total(c: tuple[int, int]) -> int:
        return c[0] + c[1]

    g_deg = sorted(G.degree(v) for v in range(G.n))
    if g_deg != sorted(H.degree(v) for v in range(H.n)):
        return None
    order = _search_order(G)
    image: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, x: int) -> bool:
        if G.degree(v) != H.degree(x):
            return False
        if total(count(gm, v, v)) != total(count(hm, x, x)):
            return False
        for w, y in image.items():
            if total(count(gm, v, w)) != total(count(hm, x, y)):
                return False
        return True

    def finish() -> VertexMap | None:
        cons = []
        for (a, b), cg in gm.items():
            ch = count(hm, image[a], image[b])
            same, flipped = cg == ch, cg == (ch[1], ch[0])
            if a == b:
                if not same:
                    return None
            elif same and flipped:
                continue
            elif same:
                cons.append((a, b, 0))
            elif flipped:
                cons.append((a, b, 1))
            else:
                return None
        sw = solve_parity_constraints(G.n, cons)
        if sw is None:
            return None
        return VertexMap(tuple(image[v] for v in range(G.n)), sw)

    def search(i: int) -> VertexMap | None:
        if i == len(order):
            return finish()
        v = order[i]
        for x in range(H.n):
            if x in used or not consistent(v, x):
                continue
            image[v] = x
            used.add(x)
            got = search(i + 1)
            if got is not None:
                return got
            del image[v]
            used.discard(x)
        return None

    return search(0)


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


def _cycle_edges(length: int) -> list[tuple[int, int]]:
    if length == 1:
        return [(0, 0)]
    if length == 2:
        return [(0, 1), (1, 0)]
    return [(i, (i + 1) % length) for i in range(length)]


_FORBIDDEN_3TREE_MINORS = {
    "k5": (5, [(i, j) for i, j in itertools.combinations(range(5), 2)]),
    # two triangles 0-1-2 and 3-4-5, each inner vertex joined to two outer ones
    "octahedron": (
        6,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
         (0, 4), (1, 5), (2, 3), (0, 3), (1, 4), (2, 5)],
    ),
    "wagner": (8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]),
    "pentagonal_prism": (
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)],
    ),
}

FORBIDDEN_MINORS_PARTIAL_3_TREES = tuple(_FORBIDDEN_3TREE_MINORS)


def named_graph(name: str, **params) -> SignedGraph:
    """Small fixture graphs.

    ``negative_cycle(length)``, ``positive_cycle(length)``,
    ``complete(n, sign=+1)``, ``circular_clique(p, q)`` (all edges negative),
    and the forbidden minors of partial 3-trees ``k5``, ``octahedron``,
    ``wagner``, ``pentagonal_prism`` (all edges positive unless ``sign``).
    """
    if name in ("negative_cycle", "positive_cycle"):
        length = int(params["length"])
        if length < 1:
            raise ValueError("cycle length must be positive")
        pairs = _cycle_edges(length)
        signs = [POS] * len(pairs)
        if name == "negative_cycle":
            signs[-1] = NEG
        return SignedGraph(length, tuple((u, v, s) for (u, v), s in zip(pairs, signs)))
    if name == "complete":
        n = int(params["n"])
        sign = int(params.get("sign", POS))
        return SignedGraph(n, tuple((i, j, sign) for i, j in itertools.combinations(range(n), 2)))
    if name == "circular_clique":
        p, q = int(params["p"]), int(params["q"])
        if q < 1 or p < 2 * q:
            raise ValueError(f"circular clique needs p >= 2q >= 2, got p={p}, q={q}")
        edges = []
        for i, j in itertools.combinations(range(p), 2):
            if q <= j - i <= p - q:
                edges.append((i, j, NEG))
        return SignedGraph(p, tuple(edges))
    if name in _FORBIDDEN_3TREE_MINORS:
        n, pairs = _FORBIDDEN_3TREE_MINORS[name]
        sign = int(params.get("sign", POS))
        return SignedGraph(n, tuple((u, v, sign) for u, v in pairs))
    raise ValueError(f"unknown graph name {name!r}")
