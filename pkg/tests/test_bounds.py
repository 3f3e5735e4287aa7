from __future__ import annotations

import itertools
import json
import random

import pytest

from fixtures import random_partial_ttree
from signedbound.bounds import (
    CliqueSet,
    all_cliques,
    build_counterexample,
    build_distance_graph,
    check_bound,
    check_source,
    check_target,
    closedness_defects,
    enumerate_wide_cliques,
    find_isomorphic_copy,
    is_closed,
    walk_to_copy,
    map_to_bound,
    prune_to_closed,
)
from signedbound.core import (
    NEG,
    POS,
    SignedGraph,
    contains_Ok_element,
    find_homomorphism,
    is_bipartite,
    named_graph,
    negative_girth,
    verify_homomorphism,
)
from signedbound.spc import spc, spc_distance_graph, spc_weight
from signedbound.ttree import recognize_partial_ttree
from signedbound.weighted import WeightedSignedGraph, barbar_expand, weight_values


def brute_wide_cliques(t, k):
    """Independent enumeration: every weight tuple, full expansion girth, canonical form."""
    size = t + 1
    pairs = list(itertools.combinations(range(size), 2))
    found = set()
    for ws in itertools.product(weight_values(k), repeat=len(pairs)):
        H = WeightedSignedGraph(size, tuple((i, j, w) for (i, j), w in zip(pairs, ws)))
        if negative_girth(barbar_expand(H, k)) != 2 * k:
            continue
        # bipartite: every cycle of the expansion even
        if not is_bipartite(barbar_expand(H, k)):
            continue
        w = dict(zip(pairs, ws))
        w.update({(j, i): x for (i, j), x in w.items()})
        forms = [
            tuple(w[p[i], p[j]] for i, j in pairs) for p in itertools.permutations(range(size))
        ]
        found.add(min(forms))
    return sorted(found)


@pytest.mark.parametrize("t,k", [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 2)])
def test_enumeration_matches_brute_force(t, k):
    assert list(enumerate_wide_cliques(t, k)) == brute_wide_cliques(t, k)


def test_l34_and_l44_counts():
    assert len(enumerate_wide_cliques(2, 2)) == 4
    assert len(enumerate_wide_cliques(3, 2)) == 11


def test_extension_index_l34():
    L = enumerate_wide_cliques(2, 2)
    # over an edge of weight 2 a new vertex may see (1,1), (-1,-1), (1,-1), (2,2), ...
    assert set(L.extension_index[(2,)]) == {(1, 1), (-1, -1), (-1, 1), (1, -1), (2, 2)}
    assert all(len(v) == 2 for v in L.extension_index[(1,)])


def test_distance_graph_spc3():
    D = build_distance_graph(spc(3), 2)
    assert len(D.weights) == 28
    for (u, v), w in D.weights.items():
        assert w == spc_weight(3, u, v) == spc_distance_graph(2).weight(u, v)


def test_distance_graph_c4_and_c6():
    D = build_distance_graph(named_graph("negative_cycle", length=4), 2)
    assert D.weights == {(0, 1): 1, (0, 2): 2, (0, 3): -1, (1, 2): 1, (1, 3): 2, (2, 3): 1}
    D = build_distance_graph(named_graph("negative_cycle", length=6), 3)
    assert len(D.weights) == 15 and D.weight(0, 3) == 3


def test_check_target():
    with pytest.raises(ValueError, match="bipartite"):
        check_target(named_graph("negative_cycle", length=3), 2)
    with pytest.raises(ValueError, match="girth"):
        check_target(named_graph("negative_cycle", length=6), 2)
    check_target(spc(3), 2)


def test_spc3_cliques_and_closedness():
    D = spc_distance_graph(2)
    W = all_cliques(D, 3)
    L = enumerate_wide_cliques(3, 2)
    assert len(W) == 70
    assert is_closed(W, L)
    closed, trace = prune_to_closed(W, L)
    assert len(closed) == 70 and trace.rounds == ()


def test_exact_closedness_fails_spc3():
    # without switching every clique of SPC(3) lacks some extension
    W = all_cliques(spc_distance_graph(2), 3)
    L = enumerate_wide_cliques(3, 2)
    assert len(closedness_defects(W, L, allow_switching=False)) == 70
    closed, _ = prune_to_closed(W, L, allow_switching=False)
    assert len(closed) == 0


def test_threads_agree():
    W = all_cliques(build_distance_graph(named_graph("negative_cycle", length=4), 2), 2)
    L = enumerate_wide_cliques(2, 2)
    a = prune_to_closed(W, L, threads=1)
    b = prune_to_closed(W, L, threads=3)
    assert a[1].to_json() == b[1].to_json()


def test_one_per_round_same_fixed_point():
    W = all_cliques(build_distance_graph(named_graph("negative_cycle", length=4), 2), 2)
    L = enumerate_wide_cliques(2, 2)
    a, _ = prune_to_closed(W, L)
    b, tr = prune_to_closed(W, L, one_per_round=True)
    assert a.cliques == b.cliques == ()
    assert all(len(r) == 1 for r in tr.rounds)


def test_param_mismatch():
    W = all_cliques(spc_distance_graph(2), 3)
    with pytest.raises(ValueError):
        prune_to_closed(W, enumerate_wide_cliques(2, 2))


def test_certificate_json_roundtrip():
    B = spc(3)
    W = all_cliques(build_distance_graph(B, 2), 3)
    data = json.loads(json.dumps(W.to_json("spc3.sg")))
    W2 = CliqueSet.from_json(data, B)
    assert W2.cliques == W.cliques and W2.t == 3 and W2.k == 2
    data["cliques"][0]["weights"][0][1] = -data["cliques"][0]["weights"][0][1]
    with pytest.raises(ValueError):
        CliqueSet.from_json(data, B)


def test_copies_up_to_switching():
    W = all_cliques(spc_distance_graph(2), 3)
    L = enumerate_wide_cliques(3, 2)
    missing_exact = [X for X in L if find_isomorphic_copy(X, W, exact=True) is None]
    assert all(find_isomorphic_copy(X, W) is not None for X in L)
    assert len(missing_exact) == 5


def test_walk_to_copy_reaches_every_element():
    W = all_cliques(spc_distance_graph(2), 3)
    D = W.graph
    for X in enumerate_wide_cliques(3, 2):
        images, flips = walk_to_copy(X, W)
        assert tuple(sorted(images)) in W.members
        for (i, j), w in zip(itertools.combinations(range(4), 2), X):
            got = flips[i] * flips[j] * D.weight(images[i], images[j])
            assert (2 if got == -2 else got) == w


def test_check_bound_yes_spc3():
    v = check_bound(spc(3), 3, 2)
    assert v.bounds and len(v.certificate) == 70 and v.counterexample is None


def test_check_bound_t1():
    v = check_bound(named_graph("negative_cycle", length=4), 1, 2)
    assert v.bounds


def test_check_bound_no_c4():
    B = named_graph("negative_cycle", length=4)
    v = check_bound(B, 2, 2)
    assert not v.bounds and v.certificate is None
    G = v.counterexample
    assert G.n == 9 and v.oracle_verified
    assert find_homomorphism(G, B) is None
    # the counterexample lies in the class
    assert is_bipartite(G)
    assert negative_girth(G) >= 4
    recognize_partial_ttree(G, 2)


def test_counterexample_needs_empty_trace():
    W = all_cliques(spc_distance_graph(2), 3)
    L = enumerate_wide_cliques(3, 2)
    _, trace = prune_to_closed(W, L)
    with pytest.raises(ValueError):
        build_counterexample(trace, L, 3, 2)


def test_map_partial_2trees_to_spc3():
    B = spc(3)
    cert = check_bound(B, 2, 2).certificate
    rng = random.Random(17)
    for _ in range(40):
        G = random_partial_ttree(rng, rng.randint(1, 16), 2)
        f = map_to_bound(G, B, cert)
        assert verify_homomorphism(G, B, f)


def test_map_trees_to_c6():
    # C_-6 bounds trees of negative girth >= 6 (t = 1)
    B = named_graph("negative_cycle", length=6)
    v = check_bound(B, 1, 3)
    assert v.bounds
    P = SignedGraph(5, ((0, 1, NEG), (1, 2, POS), (2, 3, NEG), (3, 4, NEG)))
    f = map_to_bound(P, B, v.certificate)
    assert verify_homomorphism(P, B, f)


def test_check_source():
    check_source(named_graph("negative_cycle", length=4), 2)
    with pytest.raises(ValueError):
        check_source(SignedGraph(2, ((0, 1, POS), (0, 1, NEG))), 2)
    with pytest.raises(ValueError):
        check_source(named_graph("positive_cycle", length=3), 2)
    C6 = named_graph("negative_cycle", length=6)
    assert contains_Ok_element(C6, 4) is None
    assert contains_Ok_element(C6, 3) is not None
    assert contains_Ok_element(C6, 8) is not None
