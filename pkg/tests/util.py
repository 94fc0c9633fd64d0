"""Shared test helpers: tiny builders, permutation oracles, random strategies."""

from itertools import combinations, permutations

from hypothesis import strategies as st

from quasidom.graph import Graph


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star(n):
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def biclique(p, q):
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def bull():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def permuted(g, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def isomorphic_by_permutation(g1, g2):
    """Ground-truth isomorphism test by trying every permutation."""
    if g1.n != g2.n or sorted(g1.degree_sequence) != sorted(g2.degree_sequence):
        return False
    edges2 = set(g2.edges())
    for perm in permutations(range(g1.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in g1.edges()}
        if mapped == edges2:
            return True
    return False


def has_induced_p4(g):
    """Independent induced-path-on-4 detector (degree profile 1,1,2,2)."""
    from quasidom.graph import induced_subgraph

    for quad in combinations(range(g.n), 4):
        sub = induced_subgraph(g, quad)
        if sorted(sub.degree_sequence) == [1, 1, 2, 2] and sub.is_connected():
            return True
    return False


@st.composite
def raw_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    return Graph.from_edges(n, sorted(chosen))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):  # random spanning tree first
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, sorted(edges | extra))
