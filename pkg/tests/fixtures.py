"""Shared fixture builders for the test-suite."""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from signedbound.core import NEG, POS, SignedGraph
from signedbound.edgecolor import PlanarMap


def polyhedron_map(points) -> PlanarMap:
    """Plane map of the 1-skeleton of a convex polyhedron (shortest edges).

    Rotations are taken counterclockwise around each outward position vector.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    dist = {(i, j): np.linalg.norm(pts[i] - pts[j]) for i, j in itertools.combinations(range(n), 2)}
    shortest = min(dist.values())
    edges = [pair for pair, d in sorted(dist.items()) if abs(d - shortest) < 1e-9]
    rotation = []
    for v in range(n):
        normal = pts[v] / np.linalg.norm(pts[v])
        ref = None
        items = []
        for e, (a, b) in enumerate(edges):
            if v not in (a, b):
                continue
            w = b if a == v else a
            d = pts[w] - pts[v]
            d = d - np.dot(d, normal) * normal
            if ref is None:
                ref = d / np.linalg.norm(d)
                perp = np.cross(normal, ref)
            items.append((math.atan2(np.dot(d, perp), np.dot(d, ref)) % (2 * math.pi), e))
        rotation.append(tuple(e for _, e in sorted(items)))
    return PlanarMap(n, tuple(edges), tuple(rotation))


def octahedron_map() -> PlanarMap:
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    return polyhedron_map(pts)


def cube_map() -> PlanarMap:
    return polyhedron_map(list(itertools.product((-1, 1), repeat=3)))


def cuboctahedron_map() -> PlanarMap:
    pts = set()
    for a, b in itertools.product((-1, 1), repeat=2):
        pts |= {(a, b, 0), (a, 0, b), (0, a, b)}
    return polyhedron_map(sorted(pts))


def digon_map(multiplicity: int = 4) -> PlanarMap:
    edges = tuple((0, 1) for _ in range(multiplicity))
    return PlanarMap(2, edges, (tuple(range(multiplicity)), tuple(reversed(range(multiplicity)))))


def loop_map() -> PlanarMap:
    return PlanarMap(1, ((0, 0),), ((0, 0),))


def odd_cut_map() -> PlanarMap:
    """4-regular plane multigraph: two triangles with doubled sides, joined by two edges.

    Blob ``i`` has vertices a, b, c = 3i, 3i+1, 3i+2 with a-b and b-c doubled;
    the bridges a0-a1 and c0-c1 give an odd cut of size two.
    """
    edges = []
    for base in (0, 3):
        a, b, c = base, base + 1, base + 2
        edges += [(a, b), (a, b), (b, c), (b, c), (a, c)]
    edges += [(0, 3), (2, 5)]
    # e: 0,1 a0b0; 2,3 b0c0; 4 a0c0; 5,6 a1b1; 7,8 b1c1; 9 a1c1; 10 a0a1; 11 c0c1
    rotation = (
        (0, 1, 4, 10),   # a0
        (0, 2, 3, 1),    # b0
        (2, 11, 4, 3),   # c0
        (5, 10, 9, 6),   # a1
        (5, 6, 8, 7),    # b1
        (7, 8, 9, 11),   # c1
    )
    return PlanarMap(6, tuple(edges), rotation)


def random_partial_ttree(rng: random.Random, n: int, t: int, keep: float = 0.7) -> SignedGraph:
    """A random signed bipartite simple partial ``t``-tree (negative girth >= 4)."""
    cliques = [tuple(range(min(n, t + 1)))]
    pairs = set(itertools.combinations(cliques[0], 2))
    for v in range(t + 1, n):
        host = rng.choice(cliques)
        drop = rng.randrange(len(host))
        attach = host[:drop] + host[drop + 1:]
        cliques.append(tuple(sorted(attach + (v,))))
        pairs |= {(u, v) for u in attach}
    colour = [rng.randrange(2) for _ in range(n)]
    edges = []
    for u, v in sorted(pairs):
        if colour[u] != colour[v] and rng.random() < keep:
            edges.append((u, v, rng.choice((POS, NEG))))
    return SignedGraph(n, tuple(edges))
