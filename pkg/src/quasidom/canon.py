"""Canonical labeling via equitable partition refinement and backtracking.

The canonical form of a graph is the lexicographically smallest adjacency
encoding reachable by orderings compatible with the refinement tree: refine
the ordered partition to equitability, then individualize each vertex of the
first non-singleton cell in turn and recurse. Two graphs get equal labels
exactly when they are isomorphic.

A partition whose cells induce only complete/empty blocks (between and inside
cells) yields the same encoding under every compatible ordering, so such
nodes are encoded directly instead of being expanded; this keeps highly
symmetric graphs (cliques, bicliques, unions of cliques) cheap.
"""

from __future__ import annotations

from . import graph6
from .graph import Graph, iter_bits


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition.

    Fragments replace their parent cell in place, ordered by neighbor count,
    so the resulting cell order is an isomorphism invariant.
    """
    cells = list(cells)
    queue = list(cells)
    while queue:
        splitter = queue.pop()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell.bit_count() > 1:
                buckets: dict[int, int] = {}
                m = cell
                while m:
                    low = m & -m
                    m ^= low
                    key = (adj[low.bit_length() - 1] & splitter).bit_count()
                    buckets[key] = buckets.get(key, 0) | low
                if len(buckets) > 1:
                    frags = [buckets[k] for k in sorted(buckets)]
                    cells[i : i + 1] = frags
                    queue.extend(frags)
                    i += len(frags)
                    continue
            i += 1
    return cells


def _is_block_uniform(adj: tuple[int, ...], cells: list[int]) -> bool:
    # cells are equitable here, so testing one vertex per cell suffices
    for i, cell in enumerate(cells):
        v = (cell & -cell).bit_length() - 1
        size = cell.bit_count()
        if size > 1:
            inner = (adj[v] & cell).bit_count()
            if inner != 0 and inner != size - 1:
                return False
        for other in cells[i + 1 :]:
            cross = (adj[v] & other).bit_count()
            if cross != 0 and cross != other.bit_count():
                return False
    return True


def _encode(adj: tuple[int, ...], order: tuple[int, ...]) -> int:
    code = 0
    for i, v in enumerate(order):
        row = adj[v]
        for u in order[i + 1 :]:
            code = code << 1 | (row >> u & 1)
    return code


def canonical_ordering(g: Graph) -> tuple[int, ...]:
    """A vertex ordering realizing the canonical form of ``g``."""
    adj = g.adj
    n = g.n
    best: list = [None, ()]  # [code, order]

    def consider(order: tuple[int, ...]) -> None:
        code = _encode(adj, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order

    def search(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = idx
                break
        if target < 0:
            consider(tuple(c.bit_length() - 1 for c in cells))
            return
        if _is_block_uniform(adj, cells):
            consider(tuple(v for c in cells for v in iter_bits(c)))
            return
        cell = cells[target]
        prefix = cells[:target]
        suffix = cells[target + 1 :]
        for v in iter_bits(cell):
            search(prefix + [1 << v, cell ^ (1 << v)] + suffix)

    search([g.full_mask])
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabeling of ``g``."""
    order = canonical_ordering(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        rows[i] = row
    return Graph(g.n, tuple(rows))


def canonical_label(g: Graph) -> str:
    """Canonical string: equal labels exactly for isomorphic graphs."""
    return graph6.encode(canonical_graph(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.degree_sequence != g2.degree_sequence:
        return False
    return canonical_label(g1) == canonical_label(g2)


__all__ = ["canonical_graph", "canonical_label", "canonical_ordering", "is_isomorphic"]
