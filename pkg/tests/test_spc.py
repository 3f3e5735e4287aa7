from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedbound.bounds import enumerate_wide_cliques
from signedbound.core import (
    NEG,
    POS,
    algebraic_distance,
    find_isomorphism,
    is_bipartite,
    named_graph,
    negative_girth,
    verify_homomorphism,
)
from signedbound.spc import (
    edc,
    label_vector,
    labels_sum,
    realize_k4_in_spc,
    spc,
    spc_distance_graph,
    spc_pair_position,
    spc_triple_automorphism,
    spc_weight,
    vertex_from_str,
    vertex_to_str,
)
from signedbound.weighted import WeightedClique, clique_is_2k_wide


def test_vertex_strings():
    assert vertex_from_str("100") == 1
    assert vertex_from_str("011") == 6
    assert vertex_to_str(6, 3) == "011"
    for v in range(16):
        assert vertex_from_str(vertex_to_str(v, 4)) == v


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_spc_shape(n):
    G = spc(n)
    assert G.n == 2 ** n
    assert G.m == n * 2 ** (n - 1) + 2 ** (n - 1)
    assert negative_girth(G) == n + 1
    assert is_bipartite(G) == (n % 2 == 1)
    for (u, v, s), lab in zip(G.edges, G.labels):
        assert u ^ v == label_vector(lab, n)
        assert (s == NEG) == (lab == n)


def test_spc_refuses_large():
    with pytest.raises(ValueError):
        spc(21)
    with pytest.raises(ValueError):
        spc(0)


def test_labels_sum_j():
    assert labels_sum([3], 3) == 7
    assert labels_sum([0, 1, 2, 3], 3) == 0


@pytest.mark.parametrize("n", [3, 5])
def test_spc_weight_matches_bfs(n):
    G = spc(n)
    for u in range(G.n):
        for v in range(G.n):
            if u != v:
                assert spc_weight(n, u, v) == algebraic_distance(G, u, v)


def test_pair_position():
    pos = spc_pair_position(3, 0, 1)
    assert pos.s_plus == {0} and pos.s_minus == {1, 2, 3} and pos.ad == 1
    pos = spc_pair_position(3, 0, 7)
    assert pos.ad == -1 and pos.s_minus == {3}
    pos = spc_pair_position(3, 0, 3)
    assert pos.ad == 2
    with pytest.raises(ValueError):
        spc_pair_position(3, 2, 2)


def test_distance_graph_complete():
    D = spc_distance_graph(2)
    assert D.n == 8 and len(D.weights) == 28
    assert set(D.weights.values()) <= {-1, 1, 2}


def _triple_profile(n, triple):
    a, b, c = triple
    return sorted(len(spc_pair_position(n, p, q).s_minus) for p, q in ((a, b), (b, c), (c, a)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_triple_automorphism_random_n5(seed):
    rng = random.Random(seed)
    n = 5
    xyz = tuple(rng.sample(range(32), 3))
    # an image triple: apply a random label permutation plus translation
    perm = list(range(n + 1))
    rng.shuffle(perm)
    cols = [label_vector(perm[i], n) for i in range(n)]

    def lin(a):
        out = 0
        for i in range(n):
            if a >> i & 1:
                out ^= cols[i]
        return out

    shift = rng.randrange(32)
    uvt = tuple(shift ^ lin(a) for a in xyz)
    f = spc_triple_automorphism(n, xyz, uvt)
    assert f is not None
    assert tuple(f.image[v] for v in xyz) == uvt
    assert len(set(f.image)) == 32
    assert verify_homomorphism(spc(n), spc(n), f)


def test_triple_automorphism_none_on_mismatch():
    # (0, 1, 3) has pair weights 1, 1, 2 while (0, 3, 5) has 2, 2, 2
    n = 3
    assert _triple_profile(n, (0, 1, 3)) != _triple_profile(n, (0, 3, 5))
    assert spc_triple_automorphism(n, (0, 1, 3), (0, 3, 5)) is None
    with pytest.raises(ValueError):
        spc_triple_automorphism(n, (0, 0, 1), (0, 1, 2))


def test_realize_examples():
    r = realize_k4_in_spc(2, (2, 2, 2, 2, 2, 2))
    n = 3
    for p, q in itertools.combinations(range(4), 2):
        assert spc_weight(n, r.vertices[p], r.vertices[q]) == 2
    with pytest.raises(ValueError):
        realize_k4_in_spc(3, (1, -1, 2, 2, 1, 3))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_realize_all_wide_k4_up_to_switching(k):
    n = 2 * k - 1
    for form in enumerate_wide_cliques(3, k):
        K = WeightedClique(tuple(range(4)), form, k)
        r = realize_k4_in_spc(k, K)
        switched = K.switched([v for v in range(4) if r.switching.flip[v]]).pair_weights()
        for p, q in itertools.combinations(range(4), 2):
            assert spc_weight(n, r.vertices[p], r.vertices[q]) == switched[p, q]
        assert clique_is_2k_wide(K)


def test_edc_fixtures():
    E = edc(named_graph("negative_cycle", length=4))
    C = named_graph("circular_clique", p=8, q=3)
    assert E.m == C.m == 12
    assert find_isomorphism(E, C) is not None
    assert find_isomorphism(edc(spc(2)), spc(3)) is not None


def test_edc_structure():
    G = named_graph("negative_cycle", length=3)
    E = edc(G)
    assert E.n == 6 and E.m == 3 + 2 * 3
    assert sum(1 for *_, s in E.edges if s == NEG) == 3
    assert all(s == POS for *_, s in E.edges[3:])
