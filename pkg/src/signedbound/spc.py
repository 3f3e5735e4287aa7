"""Signed projective cubes.

Vertices of ``SPC(n)`` are the integers ``0..2**n - 1`` read as bit vectors;
bit ``i`` is the generator ``e_{i+1}``.  Label index ``i`` (``0 <= i < n``)
names ``e_{i+1}`` and label index ``n`` names ``J``, the all-ones vector.
``SPC(n)`` has a positive edge labelled ``e_i`` between vectors differing in
bit ``i`` and a negative edge labelled ``J`` between complementary vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .core import NEG, POS, SignedGraph, Switching, VertexMap, solve_parity_constraints
from .weighted import WeightedClique, canonicalize_weight, clique_is_2k_wide

MAX_N = 20


def vertex_from_str(bits: str) -> int:
    """``"100"`` -> the vector with ``e_1`` set (leftmost character is bit 0)."""
    return sum(1 << i for i, ch in enumerate(bits) if ch == "1")


def vertex_to_str(v: int, n: int) -> str:
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def label_vector(label: int, n: int) -> int:
    return (1 << n) - 1 if label == n else 1 << label


def labels_sum(labels, n: int) -> int:
    out = 0
    for s in labels:
        out ^= label_vector(s, n)
    return out


def spc(n: int) -> SignedGraph:
    """``SPC(n)`` with per-edge label indices in ``labels``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_N:
        raise ValueError(f"SPC({n}) has 2^{n} vertices; refusing beyond n = {MAX_N}")
    full = (1 << n) - 1
    edges, labels = [], []
    for v in range(1 << n):
        for i in range(n):
            w = v ^ (1 << i)
            if v < w:
                edges.append((v, w, POS))
                labels.append(i)
    for v in range(1 << n):
        if v < v ^ full:
            edges.append((v, v ^ full, NEG))
            labels.append(n)
    return SignedGraph(1 << n, tuple(edges), tuple(labels))


@dataclass(frozen=True)
class PairPosition:
    s_plus: frozenset[int]
    s_minus: frozenset[int]
    ad: int


def spc_pair_position(n: int, u: int, v: int) -> PairPosition:
    if u == v:
        raise ValueError("a vertex has no position relative to itself")
    diff = u ^ v
    s_plus = frozenset(i for i in range(n) if diff >> i & 1)
    s_minus = frozenset(range(n + 1)) - s_plus
    h, m = len(s_plus), len(s_minus)
    ad = -m if m < h else h
    return PairPosition(s_plus, s_minus, ad)


def spc_weight(n: int, u: int, v: int) -> int:
    h = bin(u ^ v).count("1")
    m = n + 1 - h
    return -m if m < h else h


@lru_cache(maxsize=None)
def spc_distance_graph(k: int):
    """The complete distance graph of ``SPC(2k - 1)`` from pair positions."""
    from .bounds import DistanceGraph

    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k - 1
    if n > 11:
        raise ValueError(f"SPC({n}) distance graph is beyond desk scale")
    weights = {
        (u, v): spc_weight(n, u, v) for u, v in itertools.combinations(range(1 << n), 2)
    }
    return DistanceGraph(spc(n), k, weights)


def _s_minus_sets(n: int, triple: Sequence[int]) -> list[frozenset[int]]:
    a, b, c = triple
    return [spc_pair_position(n, p, q).s_minus for p, q in ((a, b), (b, c), (c, a))]


def _linear_image(mu: Mapping[int, int], n: int) -> list[int]:
    # images of the unit vectors e_1..e_n
    return [label_vector(mu[i], n) for i in range(n)]


def _apply_linear(cols: list[int], a: int) -> int:
    out = 0
    i = 0
    while a:
        if a & 1:
            out ^= cols[i]
        a >>= 1
        i += 1
    return out


def spc_triple_automorphism(
    n: int, xyz: Sequence[int], uvt: Sequence[int]
) -> VertexMap | None:
    """An automorphism of ``SPC(n)`` (with its switching) sending ``xyz`` to ``uvt``.

    For each of the four switchings of ``(x, y, z)`` (complementing an even
    number of the three ``S^-`` sets), the sets split ``S_n`` into the part
    common to all three and one private part per pair.  A label permutation
    matching the parts, followed by a translation, gives the map.
    """
    if len(set(xyz)) != 3 or len(set(uvt)) != 3:
        raise ValueError("triples must consist of distinct vertices")
    full_labels = frozenset(range(n + 1))
    target = _s_minus_sets(n, uvt)
    source = _s_minus_sets(n, xyz)

    def parts(sets: list[frozenset[int]]) -> list[list[int]]:
        common = sets[0] & sets[1] & sets[2]
        return [sorted(common)] + [sorted(s - common) for s in sets]

    t_parts = parts(target)
    x, y, z = xyz
    u = uvt[0]
    for flipped in ((), (0, 2), (0, 1), (1, 2)):
        src = [full_labels - s if i in flipped else s for i, s in enumerate(source)]
        if [len(s) for s in src] != [len(s) for s in target]:
            continue
        s_parts = parts(src)
        mu: dict[int, int] = {}
        for sp, tp in zip(s_parts, t_parts):
            mu.update(zip(sp, tp))
        cols = _linear_image(mu, n)
        image = tuple(u ^ _apply_linear(cols, a ^ x) for a in range(1 << n))
        if len(set(image)) != len(image):
            raise AssertionError("label permutation did not induce a bijection")
        if (image[x], image[y], image[z]) != tuple(uvt):
            raise AssertionError("automorphism does not carry the triple")
        G = spc(n)
        full = (1 << n) - 1
        cons = []
        for p, q, s in G.edges:
            d = image[p] ^ image[q]
            t_sign = NEG if (d == full and n > 1) else POS
            if n == 1:
                # SPC(1) has both signs on its single pair
                continue
            cons.append((p, q, int(s != t_sign)))
        sw = solve_parity_constraints(1 << n, cons)
        if sw is None:
            raise AssertionError("no switching realises the label permutation")
        return VertexMap(image, sw)
    return None


@dataclass(frozen=True)
class K4Realization:
    """Images of the four clique vertices and the switching applied to the clique."""

    vertices: tuple[int, int, int, int]
    switching: Switching


def _as_k4_weights(weights, k: int) -> dict[tuple[int, int], int]:
    if isinstance(weights, WeightedClique):
        if weights.size != 4:
            raise ValueError("expected a 4-clique")
        pos = {v: i for i, v in enumerate(weights.vertices)}
        return {
            (pos[a], pos[b]): w for (a, b), w in weights.pair_weights().items()
        }
    if isinstance(weights, Mapping):
        out = {}
        for (a, b), w in weights.items():
            out[a, b] = out[b, a] = canonicalize_weight(w, k)
        return out
    ws = list(weights)
    if len(ws) != 6:
        raise ValueError("expected six weights in pair order 01,02,03,12,13,23")
    out = {}
    for (a, b), w in zip(itertools.combinations(range(4), 2), ws):
        out[a, b] = out[b, a] = canonicalize_weight(w, k)
    return out


def _negative_rep(w: int, k: int) -> int:
    # magnitude of the negative member of the pair (w, w') with |w| + |w'| = 2k
    return -w if w < 0 else 2 * k - w


def _realize_switched(w: dict[tuple[int, int], int], k: int) -> tuple[int, ...] | None:
    n = 2 * k - 1
    m = {pair: _negative_rep(val, k) for pair, val in w.items()}

    def t_opposite(apex: int) -> int:
        a, b, c = (p for p in range(4) if p != apex)
        return (m[a, b] + m[b, c] + m[a, c] - 2 * k) // 2

    ts = [t_opposite(p) for p in range(4)]
    apex = min(range(4), key=lambda p: (ts[p], p))
    if ts[apex] < 1:
        return None
    x, y, z = (p for p in range(4) if p != apex)
    v = apex
    # a, b, c on the triangle opposite v; alpha, beta, gamma on the spokes
    a, b, c = m[y, z], m[z, x], m[x, y]
    alpha, beta, gamma = m[v, x], m[v, y], m[v, z]
    t0 = ts[v]
    t1, t2, t3 = ts[x], ts[y], ts[z]
    sizes = [t0, t1 - t0, t2 - t0, t3 - t0, a - t1, b - t2, c - t3]
    if min(sizes) < 0 or sum(sizes) != 2 * k:
        raise AssertionError(f"inconsistent part sizes {sizes}")
    pool = [n] + list(range(n))  # J first, then e_1.. in order
    parts: list[list[int]] = []
    start = 0
    for size in sizes:
        parts.append(pool[start:start + size])
        start += size
    p0, p1, p2, p3, pa, pb, pc = parts
    s_alpha = p0 + p2 + p3 + pa
    s_beta = p0 + p1 + p3 + pb
    s_gamma = p0 + p1 + p2 + pc
    if (len(s_alpha), len(s_beta), len(s_gamma)) != (alpha, beta, gamma):
        raise AssertionError("spoke sets have the wrong sizes")
    image = [0] * 4
    image[v] = 0
    image[x] = labels_sum(s_alpha, n)
    image[y] = labels_sum(s_beta, n)
    image[z] = labels_sum(s_gamma, n)
    return tuple(image)


def realize_k4_in_spc(k: int, weights) -> K4Realization:
    """Four vertices of ``SPC(2k - 1)`` whose algebraic distances realise a wide K4.

    ``weights`` is a :class:`WeightedClique`, a pair mapping, or six weights
    in pair order ``01, 02, 03, 12, 13, 23``.  The K4 is switched first when
    needed so that every triangle's negative representation has slack at
    least one (the common part must contain ``J``); the switching used is
    returned alongside the vertices, and the distances are checked against
    the switched weights before returning.
    """
    w = _as_k4_weights(weights, k)
    clique = WeightedClique.from_pairs(range(4), w, k)
    if not clique_is_2k_wide(clique):
        raise ValueError("K4 is not 2k-wide")
    n = 2 * k - 1
    for flipped in ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)):
        sw = clique.switched(flipped)
        ws = sw.pair_weights()
        image = _realize_switched(ws, k)
        if image is None:
            continue
        for p, q in itertools.combinations(range(4), 2):
            if spc_weight(n, image[p], image[q]) != ws[p, q]:
                raise AssertionError(f"pair {p}{q} realised with the wrong distance")
        return K4Realization(image, Switching.at(4, flipped))
    raise AssertionError("no switching of the K4 admits the seven-part realisation")


def edc(G: SignedGraph) -> SignedGraph:
    """Extended double cover: ``x+`` is ``x``, ``x-`` is ``x + n``."""
    n = G.n
    edges = [(x, x + n, NEG) for x in range(n)]
    for u, v, s in G.edges:
        if s == POS:
            edges += [(u, v, POS), (u + n, v + n, POS)]
        else:
            edges += [(u, v + n, POS), (u + n, v, POS)]
    return SignedGraph(2 * n, tuple(edges))
