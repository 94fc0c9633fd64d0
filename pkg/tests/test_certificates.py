import pytest

from quasidom.domination import (
    find_certificates,
    is_k_quasiperfect,
    solve,
    tree_gamma11_case,
    tree_gamma11_set,
)
from quasidom.enumeration import connected_classes
from quasidom.families import build, parse_spec
from quasidom.graph import Graph
from util import biclique, bull, complete, cycle, path


def ladder23():
    # 2x3 grid: corners of degree 2, middle column of degree 3
    return Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])


def test_k33_cycle_certificates():
    certs = find_certificates(biclique(3, 3))
    cycles = [c for c in certs if c.kind == "degree3-cycle"]
    assert cycles and all(c.bound == 2 for c in cycles)
    assert solve(biclique(3, 3), 1).value == 2


def test_ladder_path_certificate():
    certs = find_certificates(ladder23())
    kinds = {c.kind for c in certs}
    assert "degree2-path" in kinds
    best = min(c.bound for c in certs)
    assert best == 2
    assert solve(ladder23(), 1).value == 2


def test_low_degree_input_is_an_error():
    with pytest.raises(ValueError):
        find_certificates(cycle(6))  # no degree-3 vertex at all
    with pytest.raises(ValueError):
        find_certificates(complete(5))


def test_k4_triangle_certificates():
    certs = find_certificates(complete(4))
    assert len(certs) == 4
    assert all(c.kind == "degree3-cycle" and c.bound == 1 for c in certs)


def test_bull_has_no_certificates():
    # consistent with the bull being the unique max-degree-3 exception
    assert find_certificates(bull()) == []


def test_certificate_complements_are_perfect_codes():
    for n in range(4, 8):
        for g in connected_classes(n, 3):
            if g.max_degree != 3:
                continue
            for cert in find_certificates(g):
                code = cert.code(g)
                assert is_k_quasiperfect(g, code, 1)
                assert cert.bound == g.n - len(cert.vertices)
                assert solve(g, 1).value <= cert.bound


# -- tree constructions ----------------------------------------------------------


def spider(*legs):
    return build(parse_spec("spider:" + ",".join(str(x) for x in legs)))


def test_spider_cases():
    case, s = tree_gamma11_case(spider(1, 1, 4))
    assert case == "case-1" and s.vertices == (0, 5, 6)
    case, s = tree_gamma11_case(spider(1, 2, 3))
    assert case == "case-2" and len(s) == 3
    case, s = tree_gamma11_case(spider(2, 2, 2))
    assert case == "case-3" and len(s) == 3


def test_two_branch_tree_uses_leaf_removal():
    # path 0..4 with pendants at 1 and 3: two degree-3 vertices, four leaves
    t = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)])
    case, s = tree_gamma11_case(t)
    assert case == "four-leaves"
    assert len(s) == 3
    assert is_k_quasiperfect(t, s, 1)


def test_tree_construction_validates_input():
    with pytest.raises(ValueError):
        tree_gamma11_set(cycle(7))  # not a tree
    with pytest.raises(ValueError):
        tree_gamma11_set(path(8))  # max degree 2
    with pytest.raises(ValueError):
        tree_gamma11_set(spider(1, 1, 2))  # order 5 < 7


def test_all_small_trees_get_valid_codes():
    for n in range(7, 10):
        for t in connected_classes(n, 3, trees_only=True):
            if t.max_degree != 3:
                continue
            s = tree_gamma11_set(t)
            assert len(s) == n - 4
            assert is_k_quasiperfect(t, s, 1)
            assert solve(t, 1).value <= n - 4
