"""Immutable simple graphs on at most 64 vertices, backed by per-vertex bitsets.

Vertices are dense integers 0..n-1 and every adjacency row is an int bitmask,
so neighborhood intersections (|N(v) & S|) are single popcount operations.
Graphs are values: all operators return new graphs and instances are safe to
share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    leaf_count: int
    degree_sequence: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Graph:
    """A finite simple undirected graph with vertex ids 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("number of adjacency rows does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered vertex pairs; duplicate edges collapse."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- basic accessors ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for off in iter_bits(row):
                yield (v, v + 1 + off)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # -- degree statistics ----------------------------------------------------

    @property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    @property
    def leaf_count(self) -> int:
        return sum(1 for row in self.adj if row.bit_count() == 1)

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def degree_stats(self) -> DegreeStats:
        return DegreeStats(
            self.max_degree, self.min_degree, self.leaf_count, self.degree_sequence
        )

    # -- connectivity ---------------------------------------------------------

    def _reachable_from(self, start_mask: int) -> int:
        seen = start_mask
        frontier = start_mask
        adj = self.adj
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self._reachable_from(1) == self.full_mask

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        remaining = self.full_mask
        out = []
        while remaining:
            start = remaining & -remaining
            comp = self._reachable_from(start)
            out.append(comp)
            remaining &= ~comp
        return out

    def distance(self, u: int, v: int) -> int:
        """Shortest-path hop count; raises on vertices in different components."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self.adj[w]
            frontier = nxt & ~seen
            if frontier >> v & 1:
                return d
            seen |= frontier
        raise ValueError(f"vertices {u} and {v} are in different components")

    # -- structural predicates --------------------------------------------------

    def has_universal_vertex(self) -> bool:
        target = self.n - 1
        return any(row.bit_count() == target for row in self.adj)

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def is_claw_free(self) -> bool:
        """True iff no vertex has three pairwise non-adjacent neighbors."""
        adj = self.adj
        for v in range(self.n):
            nb = adj[v]
            if nb.bit_count() < 3:
                continue
            for a in iter_bits(nb):
                rest_a = nb & ~adj[a]
                rest_a &= ~((1 << (a + 1)) - 1)
                for b in iter_bits(rest_a):
                    if rest_a & ~adj[b] & ~((1 << (b + 1)) - 1):
                        return False
        return True

    def is_cograph(self) -> bool:
        """Recursive test: single vertex, or a disjoint union of cographs, or a
        join of cographs (complement disconnected)."""
        if self.n == 1:
            return True
        comps = self.components()
        if len(comps) == 1:
            comps = complement(self).components()
            if len(comps) == 1:
                return False
        return all(induced_subgraph(self, iter_bits(c)).is_cograph() for c in comps)


# -- operators -----------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    rows = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1 = g1.n
    mask1 = (1 << n1) - 1
    mask2 = ((1 << g2.n) - 1) << n1
    rows = [row | mask2 for row in g1.adj]
    rows += [(row << n1) | mask1 for row in g2.adj]
    return Graph(n1 + g2.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0..k-1 in sorted order."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise ValueError("vertex outside graph")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


# -- vertex subsets --------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of the vertices of one graph, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("member outside 0..n-1")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)


# -- induced paths and cycles -----------------------------------------------------


def induced_cycles(
    g: Graph, within: int | None = None, min_length: int = 3
) -> list[tuple[int, ...]]:
    """All induced (chordless) cycles with vertices inside the ``within`` mask.

    An induced cycle is determined by its vertex set; each is reported once, as
    the vertex tuple in traversal order starting from its smallest vertex.
    """
    allowed = g.full_mask if within is None else within
    adj = g.adj
    found: dict[frozenset[int], tuple[int, ...]] = {}

    def grow(start: int, path: list[int], used: int, forbidden: int) -> None:
        tail = path[-1]
        # candidates: adjacent to the tail, above start, unseen, chordless so far
        cand = adj[tail] & allowed & ~used & ~forbidden
        cand &= ~((1 << (start + 1)) - 1)
        for w in iter_bits(cand):
            if adj[w] >> start & 1:
                if len(path) + 1 >= min_length:
                    key = frozenset(path + [w])
                    if key not in found:
                        found[key] = tuple(path + [w])
                # w closes back to start; extending would carry the chord w-start
                continue
            grow(start, path + [w], used | 1 << w, forbidden | (adj[tail] & ~(1 << w)))

    for s in iter_bits(allowed):
        for a in iter_bits(adj[s] & allowed):
            if a <= s:
                continue
            grow(s, [s, a], (1 << s) | (1 << a), 0)
    return sorted(found.values(), key=lambda c: (len(c), c))


def induced_paths_between(
    g: Graph, u: int, v: int, interior: int | None = None
) -> list[tuple[int, ...]]:
    """All induced paths from u to v whose interior vertices lie in ``interior``."""
    if u == v:
        raise ValueError("endpoints must differ")
    interior_mask = g.full_mask if interior is None else interior
    interior_mask &= ~(1 << u) & ~(1 << v)
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def grow(path: list[int], used: int, forbidden: int) -> None:
        tail = path[-1]
        cand = adj[tail] & ~used & ~forbidden
        if cand >> v & 1:
            out.append(tuple(path + [v]))
        for w in iter_bits(cand & interior_mask):
            grow(path + [w], used | 1 << w, forbidden | (adj[tail] & ~(1 << w)))

    grow([u], 1 << u, 0)
    return sorted(out, key=lambda p: (len(p), p))


# -- text interchange ---------------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Render as ``"n; u v; u v; ..."``."""
    parts = [str(g.n)]
    parts += [f"{u} {v}" for u, v in g.edges()]
    return "; ".join(parts)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n; u v; u v; ..."`` edge-list format."""
    chunks = [c.strip() for c in text.split(";")]
    if not chunks or not chunks[0]:
        raise ValueError("edge list must start with the vertex count")
    try:
        n = int(chunks[0])
    except ValueError:
        raise ValueError(f"bad vertex count {chunks[0]!r}") from None
    edges = []
    for chunk in chunks[1:]:
        if not chunk:
            continue
        fields = chunk.split()
        if len(fields) != 2:
            raise ValueError(f"bad edge {chunk!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph.from_edges(n, edges)


__all__ = [
    "MAX_VERTICES",
    "DegreeStats",
    "Graph",
    "VertexSet",
    "complement",
    "disjoint_union",
    "format_edge_list",
    "induced_cycles",
    "induced_paths_between",
    "induced_subgraph",
    "iter_bits",
    "join",
    "parse_edge_list",
]
