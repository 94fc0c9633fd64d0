import random

import pytest
from hypothesis import given

from quasidom import graph6
from quasidom.enumeration import connected_classes
from quasidom.graph import Graph
from util import complete, cycle, raw_graphs


def test_k3_encodes_by_hand():
    # header chr(3+63)='B'; bits x(0,1) x(0,2) x(1,2) = 111, padded 111000 -> 'w'
    assert graph6.encode(complete(3)) == "Bw"


def test_single_vertex():
    assert graph6.encode(Graph(1, (0,))) == "@"
    assert graph6.decode("@") == Graph(1, (0,))


def test_known_lines():
    assert graph6.decode("Bw") == complete(3)
    assert graph6.encode(cycle(5)) == "Dhc"


def test_round_trip_enumerated():
    for n in range(1, 9):
        for g in connected_classes(n):
            assert graph6.decode(graph6.encode(g)) == g


@given(raw_graphs(max_n=9))
def test_round_trip_random(g):
    assert graph6.decode(graph6.encode(g)) == g


def test_large_order_header():
    random.seed(7)
    for n in (63, 64):
        g = Graph.from_edges(
            n, [(i, j) for j in range(n) for i in range(j) if random.random() < 0.1]
        )
        line = graph6.encode(g)
        assert line.startswith("~")
        assert graph6.decode(line) == g


def test_optional_prefix_header():
    assert graph6.decode(">>graph6<<Bw") == complete(3)


def test_malformed_inputs():
    with pytest.raises(graph6.Graph6Error):
        graph6.decode("")
    with pytest.raises(graph6.Graph6Error):
        graph6.decode("B\x1f")  # character below the alphabet
    with pytest.raises(graph6.Graph6Error):
        graph6.decode("Bww")  # too many adjacency characters
    with pytest.raises(graph6.Graph6Error):
        graph6.decode("D")  # too few
    with pytest.raises(graph6.Graph6Error):
        graph6.decode("~?")  # truncated wide header


def test_nonzero_padding_rejected():
    # K3 has three data bits; set one of the three padding bits
    bad = chr(3 + 63) + chr(0b111100 + 63)
    with pytest.raises(graph6.Graph6Error):
        graph6.decode(bad)


def test_order_above_cap_rejected():
    line = "~" + chr(63) + chr(1 + 63) + chr(63)  # n = 4096
    with pytest.raises(graph6.Graph6Error):
        graph6.decode(line)
