from itertools import combinations

import pytest

from quasidom.canon import canonical_label
from quasidom.domination import min_quasiperfect_bruteforce
from quasidom.enumeration import (
    EnumerationReport,
    GraphFilter,
    LimitError,
    connected_classes,
    enumerate_connected,
    graph_classes,
    witness_search,
)
from quasidom.graph import Graph
from util import isomorphic_by_permutation

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def test_connected_counts():
    for n, count in CONNECTED_COUNTS.items():
        assert len(connected_classes(n)) == count
    assert len(connected_classes(8)) == 11117


def test_labels_unique_through_n7():
    for n in range(1, 8):
        labels = [canonical_label(g) for g in connected_classes(n)]
        assert len(labels) == len(set(labels))


def test_all_graph_counts():
    for n, count in ALL_COUNTS.items():
        assert len(graph_classes(n)) == count


def test_tree_counts():
    for n, count in TREE_COUNTS.items():
        assert len(connected_classes(n, degree_cap=None, trees_only=True)) == count


def naive_connected_classes(n):
    """Oracle: every edge subset, keep connected, dedup by canonical label."""
    pairs = [(i, j) for j in range(n) for i in range(j)]
    seen = {}
    for bits in range(1 << len(pairs)):
        edges = [pairs[t] for t in range(len(pairs)) if bits >> t & 1]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            seen.setdefault(canonical_label(g), g)
    return seen


def test_augmentation_matches_naive_oracle():
    for n in range(1, 7):
        oracle = naive_connected_classes(n)
        mine = {canonical_label(g) for g in connected_classes(n)}
        assert mine == set(oracle)


def test_representatives_pairwise_nonisomorphic():
    for n in range(1, 6):
        reps = connected_classes(n)
        for g1, g2 in combinations(reps, 2):
            assert not isomorphic_by_permutation(g1, g2)


def test_representatives_sorted_and_canonical():
    reps = connected_classes(6)
    labels = [canonical_label(g) for g in reps]
    assert labels == sorted(labels)
    from quasidom import graph6

    assert all(graph6.encode(g) == lab for g, lab in zip(reps, labels))


def test_eight_graphs_of_order5_with_max_degree3():
    rep = enumerate_connected(GraphFilter(n=5, delta=3))
    assert rep.count == 8
    # the unrestricted (possibly disconnected) count differs; report it openly
    unrestricted = sum(1 for g in graph_classes(5) if g.max_degree == 3)
    assert unrestricted == 12


def test_reference_count_16():
    rep = enumerate_connected(GraphFilter(n=7, delta=4, gamma=3, max_leaves=2))
    assert rep.count == 16


def test_claw_free_count_3():
    rep = enumerate_connected(GraphFilter(n=7, delta=4, gamma=3, claw_free=True))
    assert rep.count == 3


def test_cubic_counts():
    assert enumerate_connected(GraphFilter(n=4, cubic=True)).count == 1
    assert enumerate_connected(GraphFilter(n=6, cubic=True)).count == 2
    assert enumerate_connected(GraphFilter(n=8, cubic=True)).count == 5


def test_filter_soundness():
    filt = GraphFilter(n=6, delta=3, max_leaves=1)
    collected = []
    report = enumerate_connected(filt, collected.append)
    assert report.count == len(collected)
    for g in collected:
        assert g.n == 6 and g.max_degree == 3 and g.leaf_count <= 1
        assert g.is_connected()
    filt = GraphFilter(n=6, gamma=2, cograph=True)
    for g in enumerate_connected(filt, None).representatives:
        from quasidom import graph6

        decoded = graph6.decode(g)
        assert decoded.is_cograph()
        assert min_quasiperfect_bruteforce(decoded, decoded.max_degree)[0] == 2


def test_contradictory_filters_yield_empty():
    rep = enumerate_connected(GraphFilter(n=5, delta=3, cubic=True))
    assert rep.count == 0  # cubic graphs have even order


def test_order_limits():
    with pytest.raises(LimitError):
        enumerate_connected(GraphFilter(n=11))
    with pytest.raises(LimitError):
        enumerate_connected(GraphFilter(n=10))  # unfiltered cap is 9
    with pytest.raises(LimitError):
        witness_search(9)
    with pytest.raises(LimitError):
        graph_classes(10)
    # a degree bound unlocks n=10
    enumerate_connected(GraphFilter(n=10, tree=True, delta=3))


def test_report_json_shape():
    rep = enumerate_connected(GraphFilter(n=5, delta=3))
    payload = rep.to_json()
    assert payload["count"] == 8
    assert payload["filter"] == {"n": 5, "delta": 3}
    assert "elapsed_s" in payload
    assert isinstance(rep, EnumerationReport)


def test_witness_examples():
    assert not witness_search(5, delta=3, gamma11=4).exists
    assert witness_search(6, delta=4, gamma=2, gamma11=6, claw_free=True).exists
    assert not witness_search(6, delta=3, gamma11_min=4).exists


def test_witness_determinism_and_predicate():
    first = witness_search(6, delta=4, gamma=2, gamma11=6, claw_free=True)
    second = witness_search(6, delta=4, gamma=2, gamma11=6, claw_free=True)
    assert first.witness == second.witness
    dense = witness_search(5, predicate=lambda g: g.edge_count == 10)
    assert dense.witness is not None and dense.witness.edge_count == 10


def test_chain_summaries_on_request():
    rep = enumerate_connected(GraphFilter(n=4, tree=True), with_chains=True)
    assert rep.count == 2
    assert rep.chains is not None and len(rep.chains) == 2
    assert all(c[2] in (1, 2) for c in rep.chains)
    assert "chains" in rep.to_json()
    bare = enumerate_connected(GraphFilter(n=4, tree=True))
    assert bare.chains is None and "chains" not in bare.to_json()


def test_all_graph_count_n8():
    assert len(graph_classes(8)) == 12346


def test_cubic_n10_at_the_order_cap():
    rep = enumerate_connected(GraphFilter(n=10, cubic=True))
    assert rep.count == 19
