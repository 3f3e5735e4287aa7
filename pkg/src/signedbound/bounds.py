"""Deciding whether a signed bipartite graph bounds signed bipartite partial t-trees.

The target ``B`` (bipartite, negative girth exactly ``2k``) is replaced by
its distance graph ``D``: pairs on a common negative ``2k``-cycle, weighted
by algebraic distance.  Starting from all ``(t+1)``-cliques of ``D``,
cliques that cannot host some legal one-vertex extension are pruned until a
fixed point.  A nonempty fixed point is a certificate; an empty one is
replayed backwards into a partial t-tree with no homomorphism to ``B``.

Extensions are matched up to switching: an extension vector ``b`` over a
``t``-clique ``S`` is available when some ``u`` has weights ``b`` or the
switched weights ``-b`` (with ``-k`` read as ``+k``) towards ``S``.  This is
what a homomorphism needs, since the new vertex may be switched.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .core import (
    SignedGraph,
    Switching,
    VertexMap,
    algebraic_distance_table,
    components,
    contains_Ok_element,
    find_homomorphism,
    is_bipartite,
    iter_cycles,
    negative_girth,
    cycle_sign,
    NEG,
)
from .ttree import CliqueSequence, eq1_weights, induced_subgraph, recognize_partial_ttree
from .weighted import (
    WeightedSignedGraph,
    barbar_expand,
    canonicalize_weight,
    triangle_is_2k_wide,
    weight_values,
)

log = logging.getLogger(__name__)

Vector = tuple[int, ...]
Defect = tuple[tuple[int, ...], Vector]  # (t-subset S, sorted-order extension vector)


def _canon(w: int, k: int) -> int:
    return k if w == -k else w


def _negate(vec: Iterable[int], k: int) -> Vector:
    return tuple(_canon(-w, k) for w in vec)


# ---------------------------------------------------------------------------
# The list L(t+1, 2k)
# ---------------------------------------------------------------------------


def _canonical_form(weights: dict[tuple[int, int], int], size: int) -> Vector:
    best = None
    for perm in itertools.permutations(range(size)):
        form = tuple(weights[perm[i], perm[j]] for i, j in itertools.combinations(range(size), 2))
        if best is None or form < best:
            best = form
    return best


@dataclass(frozen=True)
class WideCliqueList:
    """Unlabelled wide bipartite ``(t+1)``-cliques in canonical form.

    Each member lists weights in ``combinations(range(t+1), 2)`` order and is
    the lexicographically least such tuple over vertex orderings.
    """

    t: int
    k: int
    cliques: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __contains__(self, item) -> bool:
        return item in self._members

    @cached_property
    def _members(self) -> frozenset[Vector]:
        return frozenset(self.cliques)

    @cached_property
    def extension_index(self) -> dict[Vector, frozenset[Vector]]:
        """Weight pattern of an ordered ``t``-clique -> legal extension vectors."""
        size = self.t + 1
        out: dict[Vector, set[Vector]] = defaultdict(set)
        pairs = list(itertools.combinations(range(size), 2))
        for form in self.cliques:
            w = {}
            for (i, j), val in zip(pairs, form):
                w[i, j] = w[j, i] = val
            for perm in itertools.permutations(range(size)):
                base, x = perm[:-1], perm[-1]
                key = tuple(w[base[i], base[j]] for i, j in itertools.combinations(range(self.t), 2))
                out[key].add(tuple(w[b, x] for b in base))
        return {key: frozenset(v) for key, v in out.items()}


def enumerate_wide_cliques(t: int, k: int) -> WideCliqueList:
    """All wide bipartite ``(t+1)``-cliques, vertex by vertex with triangle pruning."""
    if t < 1 or k < 1:
        raise ValueError("t and k must be at least 1")
    size = t + 1
    values = weight_values(k)
    found: set[Vector] = set()
    w: dict[tuple[int, int], int] = {}

    def extend(j: int, i: int) -> None:
        # assign w(i, j) for i < j, then move on
        if j == size:
            found.add(_canonical_form(w, size))
            return
        if i == j:
            extend(j + 1, 0)
            return
        for val in values:
            ok = True
            for h in range(i):
                a, b = w[h, i], w[h, j]
                if (a + b + val) % 2 or not triangle_is_2k_wide(a, b, val, k):
                    ok = False
                    break
            if not ok:
                continue
            w[i, j] = w[j, i] = val
            extend(j, i + 1)
        w.pop((i, j), None)
        w.pop((j, i), None)

    extend(1, 0)
    return WideCliqueList(t, k, tuple(sorted(found)))


# ---------------------------------------------------------------------------
# Distance graphs and clique sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistanceGraph:
    """Pairs of ``base`` on a common negative ``2k``-cycle with their weights.

    ``weights`` maps ``(u, v)`` with ``u < v`` to a canonical weight.
    """

    base: SignedGraph
    k: int
    weights: dict[tuple[int, int], int] = field(repr=False)

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.weights:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def weight(self, u: int, v: int) -> int | None:
        return self.weights.get((u, v) if u < v else (v, u))

    def as_weighted_graph(self) -> WeightedSignedGraph:
        return WeightedSignedGraph(
            self.n, tuple((u, v, w) for (u, v), w in sorted(self.weights.items())), self.k
        )

    def clique_weights(self, vertices: Sequence[int]) -> Vector:
        return tuple(self.weight(u, v) for u, v in itertools.combinations(vertices, 2))


def check_target(B: SignedGraph, k: int) -> None:
    if not is_bipartite(B):
        raise ValueError("target is not bipartite (it contains a positive odd cycle)")
    g = negative_girth(B)
    if g != 2 * k:
        raise ValueError(f"target negative girth is {g}, expected exactly 2k = {2 * k}")


def build_distance_graph(B: SignedGraph, k: int) -> DistanceGraph:
    check_target(B, k)
    pairs: set[tuple[int, int]] = set()
    for cyc in iter_cycles(B, max_length=2 * k):
        if len(cyc) == 2 * k and cycle_sign(B, cyc.edges) == NEG:
            pairs.update(itertools.combinations(sorted(set(cyc.vertices)), 2))
    table = algebraic_distance_table(B)
    weights = {}
    for u, v in sorted(pairs):
        weights[u, v] = canonicalize_weight(table[u][v], k)
    return DistanceGraph(B, k, weights)


@dataclass(frozen=True, eq=False)
class CliqueSet:
    """Labelled ``(t+1)``-cliques of a distance graph (sorted vertex tuples)."""

    graph: DistanceGraph
    t: int
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "cliques", tuple(sorted(tuple(sorted(c)) for c in set(map(tuple, self.cliques))))
        )

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def k(self) -> int:
        return self.graph.k

    @cached_property
    def members(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.cliques)

    @cached_property
    def extensions(self) -> dict[tuple[int, ...], dict[Vector, tuple[int, ...]]]:
        """Sorted ``t``-subset -> extension vector -> vertices realising it."""
        out: dict[tuple[int, ...], dict[Vector, list[int]]] = defaultdict(lambda: defaultdict(list))
        for K in self.cliques:
            for i, u in enumerate(K):
                S = K[:i] + K[i + 1:]
                out[S][tuple(self.graph.weight(s, u) for s in S)].append(u)
        return {S: {vec: tuple(us) for vec, us in d.items()} for S, d in out.items()}

    def with_cliques(self, cliques: Iterable[tuple[int, ...]]) -> CliqueSet:
        return CliqueSet(self.graph, self.t, tuple(cliques))

    def to_json(self, base_ref: str | None = None) -> dict:
        pairs = lambda K: [[[u, v], self.graph.weight(u, v)] for u, v in itertools.combinations(K, 2)]
        return {
            "t": self.t,
            "k": self.k,
            "B": base_ref,
            "cliques": [{"vertices": list(K), "weights": pairs(K)} for K in self.cliques],
        }

    @classmethod
    def from_json(cls, data: dict, B: SignedGraph) -> CliqueSet:
        k, t = int(data["k"]), int(data["t"])
        weights: dict[tuple[int, int], int] = {}
        cliques = []
        for entry in data["cliques"]:
            for (u, v), w in entry["weights"]:
                key = (min(u, v), max(u, v))
                if weights.setdefault(key, w) != w:
                    raise ValueError(f"certificate gives two weights for pair {key}")
            cliques.append(tuple(entry["vertices"]))
        table = algebraic_distance_table(B)
        for (u, v), w in weights.items():
            if table[u][v] is None or canonicalize_weight(table[u][v], k) != w:
                raise ValueError(f"certificate weight of {u}-{v} disagrees with the target")
        return cls(DistanceGraph(B, k, weights), t, tuple(cliques))


def _is_wide_clique(D: DistanceGraph, K: Sequence[int]) -> bool:
    for a, b, c in itertools.combinations(K, 3):
        x, y, z = D.weight(a, b), D.weight(b, c), D.weight(a, c)
        if (x + y + z) % 2 or not triangle_is_2k_wide(x, y, z, D.k):
            return False
    return True


def all_cliques(D: DistanceGraph, t: int) -> CliqueSet:
    adj = D.adjacency
    found: list[tuple[int, ...]] = []

    def grow(clique: list[int], cands: list[int]) -> None:
        if len(clique) == t + 1:
            found.append(tuple(clique))
            return
        for i, v in enumerate(cands):
            grow(clique + [v], [u for u in cands[i + 1:] if u in adj[v]])

    grow([], list(range(D.n)))
    wide = [K for K in found if _is_wide_clique(D, K)]
    if len(wide) != len(found):
        log.warning("dropped %d non-wide cliques from the distance graph", len(found) - len(wide))
    return CliqueSet(D, t, tuple(wide))


# ---------------------------------------------------------------------------
# Closedness and pruning
# ---------------------------------------------------------------------------


def _missing_extensions(
    W: CliqueSet, L: WideCliqueList, S: tuple[int, ...], allow_switching: bool
) -> list[Vector]:
    D = W.graph
    pattern = D.clique_weights(S)
    required = L.extension_index.get(pattern, frozenset())
    available = W.extensions.get(S, {})
    missing = []
    for vec in sorted(required):
        if vec in available:
            continue
        if allow_switching and _negate(vec, D.k) in available:
            continue
        missing.append(vec)
    return missing


def _check_params(W: CliqueSet, L: WideCliqueList) -> None:
    if W.t != L.t or W.k != L.k:
        raise ValueError(f"clique set has (t, k) = ({W.t}, {W.k}), list has ({L.t}, {L.k})")


def subset_defects(
    W: CliqueSet, L: WideCliqueList, allow_switching: bool = True, threads: int = 1
) -> dict[tuple[int, ...], list[Vector]]:
    """Per ``t``-subset of a member: the legal extensions no member provides."""
    _check_params(W, L)
    subsets = sorted(W.extensions)
    work = lambda S: (S, _missing_extensions(W, L, S, allow_switching))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, subsets, chunksize=256))
    else:
        results = [work(S) for S in subsets]
    return {S: miss for S, miss in results if miss}


def closedness_defects(
    W: CliqueSet, L: WideCliqueList, allow_switching: bool = True, threads: int = 1
) -> list[tuple[tuple[int, ...], Defect]]:
    """``(clique, (S, b))`` for every member with some unmet extension.

    ``S`` is a ``t``-subset of the clique and ``b`` (indexed like sorted
    ``S``) the first missing extension vector; one defect per clique.
    """
    bad = subset_defects(W, L, allow_switching, threads)
    out = []
    for K in W.cliques:
        for i in range(len(K)):
            S = K[:i] + K[i + 1:]
            if S in bad:
                out.append((K, (S, bad[S][0])))
                break
    return out


def is_closed(W: CliqueSet, L: WideCliqueList, allow_switching: bool = True) -> bool:
    return not closedness_defects(W, L, allow_switching)


@dataclass(frozen=True, eq=False)
class PruneTrace:
    """The initial clique set and, per round, the removed cliques with a defect each."""

    initial: CliqueSet
    rounds: tuple[tuple[tuple[tuple[int, ...], Defect], ...], ...]
    allow_switching: bool = True

    def to_json(self) -> dict:
        return {
            "t": self.initial.t,
            "k": self.initial.k,
            "initial": len(self.initial),
            "allow_switching": self.allow_switching,
            "rounds": [
                [
                    {"clique": list(K), "subset": list(S), "extension": list(b)}
                    for K, (S, b) in rnd
                ]
                for rnd in self.rounds
            ],
        }

    def sets(self) -> list[CliqueSet]:
        """``W_0, W_1, ...``: the clique set before each round and after the last."""
        out = [self.initial]
        cur = set(self.initial.cliques)
        for rnd in self.rounds:
            cur -= {K for K, _ in rnd}
            out.append(self.initial.with_cliques(cur))
        return out


def prune_to_closed(
    W0: CliqueSet,
    L: WideCliqueList,
    allow_switching: bool = True,
    one_per_round: bool = False,
    threads: int = 1,
) -> tuple[CliqueSet, PruneTrace]:
    """Remove defective cliques until none is left; the result is the largest closed subset."""
    _check_params(W0, L)
    W = W0
    rounds = []
    while True:
        defects = closedness_defects(W, L, allow_switching, threads)
        if not defects:
            break
        if one_per_round:
            defects = defects[:1]
        rounds.append(tuple(defects))
        removed = {K for K, _ in defects}
        W = W.with_cliques(K for K in W.cliques if K not in removed)
    return W, PruneTrace(W0, tuple(rounds), allow_switching)


# ---------------------------------------------------------------------------
# Verdicts and counterexamples
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BoundVerdict:
    bounds: bool
    certificate: CliqueSet | None
    counterexample: SignedGraph | None
    trace: PruneTrace
    oracle_verified: bool | None = None
    note: str = ""


def check_bound(
    B: SignedGraph,
    t: int,
    k: int,
    *,
    distance_graph: DistanceGraph | None = None,
    L: WideCliqueList | None = None,
    verify_limit: int = 25,
    threads: int = 1,
) -> BoundVerdict:
    """Does ``B`` bound signed bipartite partial ``t``-trees of negative girth ``>= 2k``?"""
    check_target(B, k)
    D = distance_graph if distance_graph is not None else build_distance_graph(B, k)
    L = L if L is not None else enumerate_wide_cliques(t, k)
    W0 = all_cliques(D, t)
    W, trace = prune_to_closed(W0, L, threads=threads)
    if len(W):
        return BoundVerdict(True, W, None, trace)
    if t < 2:
        return BoundVerdict(
            False, None, None, trace,
            note="no counterexample for t = 1: gadget expansion leaves the class of trees",
        )
    G, verified = build_counterexample(trace, L, t, k, verify_limit=verify_limit)
    return BoundVerdict(False, None, G, trace, verified)


class _Fragment:
    """A recursive obstruction: weights on a new vertex and the fragments above it."""

    __slots__ = ("drop", "vector", "children")

    def __init__(self, drop: int, vector: Vector, children: list[tuple[int, ...]]):
        self.drop = drop          # position in the clique not reused
        self.vector = vector      # weights from the kept positions to the new vertex
        self.children = children  # keys of fragments glued on the new clique


def _placement_key(K: Sequence[int], flips: Sequence[int]) -> tuple:
    # a placement up to global switching: normalise the first vertex to +1
    if flips[0] < 0:
        flips = [-f for f in flips]
    pairs = sorted(zip(K, flips))
    lead = pairs[0][1]
    return tuple((v, f * lead) for v, f in pairs)


def build_counterexample(
    trace: PruneTrace,
    L: WideCliqueList,
    t: int,
    k: int,
    *,
    verify_limit: int = 25,
    max_vertices: int = 20000,
) -> tuple[SignedGraph, bool | None]:
    """Replay a pruning that ended empty into a graph with no map to the target.

    Every way of placing a clique of the weighted t-tree on a removed clique
    ``K`` (with switching) is blocked by attaching a new vertex that realises
    one of ``K``'s missing extensions; the cliques the new vertex could then
    land on were removed earlier and are blocked recursively.  Defects are
    chosen to minimise the size of this tree.  A root clique from the list is
    blocked on every placement; the result is the gadget expansion.

    Returns the graph and whether the exhaustive oracle confirmed it (``None``
    when it is larger than ``verify_limit`` vertices).
    """
    if not trace.allow_switching:
        raise ValueError("counterexamples are built from pruning up to switching")
    W_sets = trace.sets()
    if len(W_sets[-1]):
        raise ValueError("pruning did not end with an empty clique set")
    if not len(L):
        raise ValueError("the list of wide cliques is empty")
    D = trace.initial.graph
    if trace.initial.t != t or D.k != k:
        raise ValueError("trace parameters disagree with t, k")
    removed_round = {}
    for r, rnd in enumerate(trace.rounds):
        for K, _ in rnd:
            removed_round[K] = r
    adj = D.adjacency

    cost: dict[tuple, int] = {}
    plan: dict[tuple, _Fragment] = {}

    def solve(key: tuple) -> int:
        if key in cost:
            return cost[key]
        K = tuple(v for v, _ in key)
        flip = dict(key)
        r = removed_round[K]
        Wr = W_sets[r]
        best: tuple[int, _Fragment] | None = None
        for drop in range(len(K)):
            S = K[:drop] + K[drop + 1:]
            for b in _missing_extensions(Wr, L, S, True):
                children = []
                total = 1
                cands = set.intersection(*(set(adj[s]) for s in S)) - set(K)
                for u in sorted(cands):
                    vec = tuple(D.weight(s, u) for s in S)
                    for delta in (1, -1):
                        if vec != (b if delta == 1 else _negate(b, k)):
                            continue
                        K2 = tuple(sorted(S + (u,)))
                        if K2 not in removed_round or removed_round[K2] >= r:
                            raise AssertionError("missing extension is present in W_r")
                        child = _placement_key(
                            [*S, u], [flip[s] for s in S] + [delta]
                        )
                        children.append(child)
                        total += solve(child)
                        if best is not None and total >= best[0]:
                            break
                if best is None or total < best[0]:
                    vector = tuple(_canon(flip[s] * bs, k) for s, bs in zip(S, b))
                    best = (total, _Fragment(drop, vector, children))
        if best is None:
            raise AssertionError(f"removed clique {K} has no defect in its round")
        cost[key], plan[key] = best
        return best[0]

    # root: the list element whose placements are cheapest to block
    W0 = trace.initial
    best_root: tuple[int, Vector, list[tuple[tuple[int, ...], tuple]]] | None = None
    size = t + 1
    pairs = list(itertools.combinations(range(size), 2))
    for form in L:
        xw = {}
        for (i, j), val in zip(pairs, form):
            xw[i, j] = xw[j, i] = val
        placements: dict[tuple, tuple[int, ...]] = {}
        for K in W0.cliques:
            for perm in itertools.permutations(K):
                for fl in itertools.product((1, -1), repeat=t):
                    flips = (1,) + fl
                    if all(
                        D.weight(perm[i], perm[j]) == _canon(flips[i] * flips[j] * xw[i, j], k)
                        for i, j in pairs
                    ):
                        key = _placement_key(perm, flips)
                        placements.setdefault(key, perm)
        total = sum(solve(key) for key in placements)
        if best_root is None or total < best_root[0]:
            best_root = (total, form, sorted(placements.items()))
        if total == 0:
            break
    total, form, placements = best_root
    if total + size > max_vertices:
        raise ValueError(f"counterexample would have {total + size} weighted vertices")

    edges: list[tuple[int, int, int]] = []
    for (i, j), val in zip(pairs, form):
        edges.append((i, j, val))
    counter = [size]

    def glue(key: tuple, hvertices: list[int]) -> None:
        # hvertices[i] is the H-vertex placed on the i-th vertex of key
        frag = plan[key]
        kept = hvertices[: frag.drop] + hvertices[frag.drop + 1:]
        x = counter[0]
        counter[0] += 1
        for h, val in zip(kept, frag.vector):
            edges.append((h, x, val))
        K = [v for v, _ in key]
        S = K[: frag.drop] + K[frag.drop + 1:]
        for child in frag.children:
            order = {v: i for i, v in enumerate(S)}
            hv = []
            for v, _ in child:
                hv.append(kept[order[v]] if v in order else x)
            glue(child, hv)

    for key, perm in placements:
        position = {v: i for i, v in enumerate(perm)}
        glue(key, [position[v] for v, _ in key])

    H = WeightedSignedGraph(counter[0], tuple(edges), k)
    G = barbar_expand(H, k)
    verified: bool | None = None
    if G.n <= verify_limit:
        if find_homomorphism(G, D.base) is not None:
            raise AssertionError("constructed counterexample maps to the target")
        verified = True
    return G, verified


# ---------------------------------------------------------------------------
# Building homomorphisms from a certificate
# ---------------------------------------------------------------------------


def _place_clique(
    weights: dict[tuple[int, int], int], verts: Sequence[int], cert: CliqueSet, exact: bool = False
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Images and flips putting the weighted clique on ``verts`` into a member of ``cert``."""
    D = cert.graph
    k = D.k
    size = len(verts)
    full = size == cert.t + 1
    members = cert.members
    in_cert = sorted({v for K in cert.cliques for v in K})
    adj = D.adjacency
    images: list[int] = []
    flips: list[int] = []

    def fits(candidate: tuple[int, ...]) -> bool:
        S = tuple(sorted(candidate))
        if full:
            return S in members
        if len(S) == cert.t:
            return S in cert.extensions
        return any(set(S) <= set(K) for K in cert.cliques)

    def search(i: int) -> bool:
        if i == size:
            return fits(tuple(images))
        pool = in_cert if i == 0 else sorted(set.intersection(*(set(adj[y]) for y in images)) - set(images))
        for y in pool:
            for f in ((1,) if (i == 0 or exact) else (1, -1)):
                if all(
                    D.weight(images[j], y) == _canon(flips[j] * f * weights[verts[j], verts[i]], k)
                    for j in range(i)
                ):
                    images.append(y)
                    flips.append(f)
                    if search(i + 1):
                        return True
                    images.pop()
                    flips.pop()
        return False

    if not search(0):
        return None
    return tuple(images), tuple(flips)


def find_isomorphic_copy(X, certificate: CliqueSet, exact: bool = False):
    """A member of ``certificate`` carrying the weighted clique ``X``.

    ``X`` is a canonical weight tuple (from the list) or a mapping from pairs
    of ``0..t`` to weights.  Returns ``(images, flips)`` where ``images[i]``
    hosts vertex ``i`` of ``X`` and ``flips`` is the switching (``+1``/``-1``)
    that turns ``X``'s weights into the host's.  With ``exact`` no switching
    is allowed.  ``None`` if there is no copy.
    """
    size = certificate.t + 1
    w = _clique_weight_map(X, size)
    return _place_clique(w, list(range(size)), certificate, exact)


def _clique_weight_map(X, size: int) -> dict[tuple[int, int], int]:
    if isinstance(X, dict):
        w = {}
        for (i, j), val in X.items():
            w[i, j] = w[j, i] = val
        return w
    w = {}
    for (i, j), val in zip(itertools.combinations(range(size), 2), X):
        w[i, j] = w[j, i] = val
    return w


def walk_to_copy(X, certificate: CliqueSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reach a copy of ``X`` from the first member by one-vertex replacements.

    Every vertex is first replaced by one at weight ``k`` or ``k - 1`` from
    all others (the parity chosen to match ``X``), then each such vertex is
    replaced by one realising ``X``'s weights to the already placed ones.
    Each step is a legal extension, so closedness provides it.
    """
    if not len(certificate):
        raise ValueError("certificate is empty")
    D = certificate.graph
    k = D.k
    size = certificate.t + 1
    xw = _clique_weight_map(X, size)
    # parity classes of X (odd weight = different classes)
    colour = [0] * size
    for i in range(1, size):
        colour[i] = xw[0, i] % 2
    K0 = certificate.cliques[0]
    cur = list(K0)           # host vertices, position i eventually hosts X's i
    flips = [1] * size
    # current weighted clique in switched coordinates
    cw = lambda i, j: _canon(flips[i] * flips[j] * D.weight(cur[i], cur[j]), k)
    kcol = [0] * size
    for i in range(1, size):
        kcol[i] = cw(0, i) % 2
    # give the first replacement the colour of host 0, and fix the offset
    offset = kcol[0] ^ colour[0]
    node_colour = list(kcol)

    def target_weight(ci: int, cj: int) -> int:
        return k if (ci ^ cj) == k % 2 else k - 1

    def replace(pos: int, want: dict[int, int]) -> None:
        others = [i for i in range(size) if i != pos]
        S_vertices = [cur[i] for i in others]
        order = sorted(range(len(others)), key=lambda j: S_vertices[j])
        S = tuple(S_vertices[j] for j in order)
        ext = certificate.extensions.get(S, {})
        need = tuple(_canon(flips[others[j]] * want[others[j]], k) for j in order)
        for delta, vec in ((1, need), (-1, _negate(need, k))):
            if vec in ext:
                cur[pos] = ext[vec][0]
                flips[pos] = delta
                return
        raise AssertionError("certificate is not closed: walk step unavailable")

    # phase 1: all weights k or k-1, parity classes taken from X
    for pos in range(size):
        node_colour[pos] = colour[pos] ^ offset
        want = {i: target_weight(node_colour[pos], node_colour[i]) for i in range(size) if i != pos}
        replace(pos, want)
    # phase 2: realise X one vertex at a time
    for pos in range(size):
        want = {}
        for i in range(size):
            if i == pos:
                continue
            want[i] = xw[pos, i] if i < pos else target_weight(node_colour[pos], node_colour[i])
        replace(pos, want)
    for i, j in itertools.combinations(range(size), 2):
        if cw(i, j) != xw[i, j]:
            raise AssertionError("walk ended on a clique not matching X")
    return tuple(cur), tuple(flips)


def map_partial_ttree(
    G: SignedGraph, seq: CliqueSequence, B: SignedGraph, certificate: CliqueSet
) -> VertexMap:
    """Homomorphism ``G -> B`` built clique by clique along ``seq``."""
    if certificate.graph.base is not B and certificate.graph.base != B:
        raise ValueError("certificate belongs to a different target")
    if not len(certificate):
        raise ValueError("certificate is empty")
    if seq.t != certificate.t:
        raise ValueError(f"sequence is for t = {seq.t}, certificate for t = {certificate.t}")
    k = certificate.k
    D = certificate.graph
    H = eq1_weights(G, seq, k)
    hw = H.weight_map()
    image: dict[int, int] = {}
    flip: dict[int, int] = {}
    seed = list(seq.seed)
    if len(seed) == 1:
        any_vertex = certificate.cliques[0][0]
        image[seed[0]], flip[seed[0]] = any_vertex, 1
    else:
        placed = _place_clique(hw, seed, certificate)
        if placed is None:
            raise AssertionError("no copy of the seed clique in the certificate")
        for v, y, f in zip(seed, *placed):
            image[v], flip[v] = y, f
    for v, A in zip(seq.added, seq.attach):
        S = tuple(sorted(image[a] for a in A))
        by_image = {image[a]: a for a in A}
        need = tuple(_canon(flip[by_image[s]] * hw[by_image[s], v], k) for s in S)
        ext = certificate.extensions.get(S, {})
        if need in ext:
            image[v], flip[v] = ext[need][0], 1
        elif _negate(need, k) in ext:
            image[v], flip[v] = ext[_negate(need, k)][0], -1
        else:
            raise AssertionError(f"certificate lacks an extension needed for vertex {v}")
    return VertexMap(
        tuple(image[v] for v in range(G.n)),
        Switching(tuple(flip[v] < 0 for v in range(G.n))),
    )


def map_to_bound(G: SignedGraph, B: SignedGraph, certificate: CliqueSet) -> VertexMap:
    """Recognise and map each component of ``G`` separately."""
    image = [0] * G.n
    flip = [False] * G.n
    for comp in components(G):
        sub, old = induced_subgraph(G, comp)
        seq = recognize_partial_ttree(sub, certificate.t)
        f = map_partial_ttree(sub, seq, B, certificate)
        for i, v in enumerate(old):
            image[v] = f.image[i]
            flip[v] = f.switching.flip[i]
    return VertexMap(tuple(image), Switching(tuple(flip)))


def check_source(G: SignedGraph, k: int) -> None:
    """Reject graphs outside the class: those containing an ``O_{2k}`` element."""
    witness = contains_Ok_element(G, 2 * k)
    if witness is not None:
        raise ValueError(
            f"graph contains a cycle of length {len(witness)} that cannot map to C_-{2 * k}"
        )
