"""Exact k-quasiperfect domination: solver, chain, certificates, tree codes.

A set S is k-quasiperfect dominating when every vertex outside S has at least
one and at most k neighbors inside S. The solver iterates the target
cardinality upward from the domination lower bound and runs an include/exclude
branch and bound with constraint propagation, so reported minima are exact and
witnesses are the lexicographically smallest minimum codes.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, VertexSet, induced_cycles, induced_paths_between, iter_bits


# -- membership tests ---------------------------------------------------------


def _violations(adj: tuple[int, ...], full: int, mask: int, k: int) -> list[tuple[int, int]]:
    bad = []
    for v in iter_bits(full & ~mask):
        cnt = (adj[v] & mask).bit_count()
        if cnt < 1 or cnt > k:
            bad.append((v, cnt))
    return bad


def _is_valid(adj: tuple[int, ...], full: int, mask: int, k: int) -> bool:
    for v in iter_bits(full & ~mask):
        cnt = (adj[v] & mask).bit_count()
        if cnt < 1 or cnt > k:
            return False
    return True


def is_k_quasiperfect(g: Graph, s: VertexSet, k: int) -> bool:
    """True iff every vertex outside ``s`` has 1..k neighbors inside it."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _is_valid(g.adj, g.full_mask, s.mask, k)


def quasiperfect_violations(g: Graph, s: VertexSet, k: int) -> list[tuple[int, int]]:
    """Offending vertices outside ``s`` with their neighbor-in-s counts."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _violations(g.adj, g.full_mask, s.mask, k)


# -- exact solver ---------------------------------------------------------------


@dataclass(frozen=True)
class SolveResult:
    n: int
    k: int
    requested_k: int
    value: int
    witness: VertexSet
    nodes_expanded: int
    millis: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "witness": list(self.witness.vertices),
            "nodes_expanded": self.nodes_expanded,
            "millis": round(self.millis, 3),
        }


def _maximal_cliques(adj: tuple[int, ...], n: int) -> list[int]:
    """All maximal cliques as vertex masks (Bron-Kerbosch with pivoting)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = -1
        best = -1
        for u in iter_bits(p | x):
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                best = cnt
                pivot = u
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p ^= bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def _solve_fixed(
    adj: tuple[int, ...],
    n: int,
    k: int,
    budget: int,
    cliques: list[int],
    maxdeg: int,
    counter: list[int],
) -> int | None:
    """First (lexicographically smallest) valid code of size <= budget, or None.

    Branches include-first on the smallest undecided vertex. Propagation:
    a vertex with more than k chosen neighbors is forced in; a clique with
    more than k chosen vertices is forced in entirely; an excluded vertex
    with no possible dominator prunes the branch.
    """
    full = (1 << n) - 1

    def dfs(in_mask: int, out_mask: int) -> int | None:
        counter[0] += 1
        while True:
            forced = 0
            m = full ^ in_mask ^ out_mask
            while m:
                low = m & -m
                m ^= low
                if (adj[low.bit_length() - 1] & in_mask).bit_count() > k:
                    forced |= low
            m = out_mask
            while m:
                low = m & -m
                m ^= low
                if (adj[low.bit_length() - 1] & in_mask).bit_count() > k:
                    return None
            for q in cliques:
                if (q & in_mask).bit_count() > k:
                    if q & out_mask:
                        return None
                    forced |= q & ~in_mask
            if not forced:
                break
            in_mask |= forced
            if in_mask.bit_count() > budget:
                return None
        size = in_mask.bit_count()
        if size > budget:
            return None
        und = full ^ in_mask ^ out_mask
        needy = 0
        m = out_mask
        while m:
            low = m & -m
            m ^= low
            row = adj[low.bit_length() - 1]
            if not row & in_mask:
                if not row & und:
                    return None
                needy += 1
        if needy and size + (needy + maxdeg - 1) // maxdeg > budget:
            return None
        if not und:
            return in_mask
        if size == budget:
            m = und
            while m:
                low = m & -m
                m ^= low
                cnt = (adj[low.bit_length() - 1] & in_mask).bit_count()
                if cnt < 1 or cnt > k:
                    return None
            return in_mask
        low = und & -und
        found = dfs(in_mask | low, out_mask)
        if found is not None:
            return found
        return dfs(in_mask, out_mask | low)

    return dfs(0, 0)


def solve(g: Graph, k: int) -> SolveResult:
    """Exact minimum k-quasiperfect dominating set with solve statistics."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not g.is_connected():
        raise ValueError("graph is disconnected; quasiperfect domination assumes connectivity")
    start = time.perf_counter()
    n = g.n
    delta = g.max_degree
    eff_k = k
    if delta >= 1 and k > delta:
        warnings.warn(
            f"k={k} exceeds the maximum degree {delta}; using k={delta}",
            stacklevel=2,
        )
        eff_k = delta
    if delta == 0:
        # single vertex: the only dominating set is the vertex itself
        return SolveResult(n, k, k, 1, VertexSet(1, 1), 0, _ms(start))
    adj = g.adj
    cliques = [q for q in _maximal_cliques(adj, n) if q.bit_count() >= eff_k + 2]
    counter = [0]
    lower = -(-n // (delta + 1))
    for budget in range(lower, n + 1):
        mask = _solve_fixed(adj, n, eff_k, budget, cliques, delta, counter)
        if mask is not None:
            return SolveResult(
                n, eff_k, k, mask.bit_count(), VertexSet(n, mask), counter[0], _ms(start)
            )
    raise AssertionError("unreachable: the full vertex set is always a valid code")


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def min_quasiperfect(g: Graph, k: int) -> tuple[int, VertexSet]:
    """Exact k-quasiperfect domination number and its smallest witness code."""
    res = solve(g, k)
    return res.value, res.witness


def min_quasiperfect_bruteforce(g: Graph, k: int) -> tuple[int, VertexSet]:
    """Reference oracle: plain subset enumeration by increasing cardinality."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    n = g.n
    delta = g.max_degree
    eff_k = min(k, delta) if delta >= 1 else k
    adj = g.adj
    full = g.full_mask
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _is_valid(adj, full, mask, eff_k):
                return size, VertexSet(n, mask)
    raise AssertionError("unreachable")


# -- the full chain -------------------------------------------------------------


@dataclass(frozen=True)
class DominationChain:
    """All k-quasiperfect domination numbers of one graph, k = 1..max degree."""

    n: int
    max_degree: int
    gamma: int
    values: tuple[int, ...]
    witnesses: tuple[VertexSet, ...]

    def value(self, k: int) -> int:
        if k < 1:
            raise ValueError("k must be at least 1")
        if self.max_degree == 0:
            return self.gamma
        return self.values[min(k, self.max_degree) - 1]

    @property
    def gamma11(self) -> int | None:
        return self.values[0] if self.max_degree >= 1 else None

    @property
    def gamma12(self) -> int | None:
        return self.values[1] if self.max_degree >= 2 else None

    def is_short(self) -> bool:
        if self.max_degree <= 1:
            return True
        return self.values[1] == self.gamma

    def summary(self) -> str:
        parts = [f"γ1{k}={v}" for k, v in enumerate(self.values, start=1)]
        parts.append(f"γ={self.gamma}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "gamma": self.gamma,
            "values": {str(k): v for k, v in enumerate(self.values, start=1)},
            "witnesses": {
                str(k): list(w.vertices) for k, w in enumerate(self.witnesses, start=1)
            },
        }


def domination_chain(g: Graph, independent: bool = False) -> DominationChain:
    """Compute gamma and every k-quasiperfect number with one witness per k.

    For k at or above gamma the minimum codes coincide with the minimum
    dominating codes, so those entries reuse the gamma solve; pass
    ``independent=True`` to force a separate solve per k instead.
    """
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    delta = g.max_degree
    if delta == 0:
        return DominationChain(g.n, 0, 1, (), ())
    top = solve(g, delta)
    gamma = top.value
    values = [0] * delta
    witnesses: list[VertexSet] = [top.witness] * delta
    values[delta - 1] = gamma
    for k in range(delta - 1, 0, -1):
        if not independent and k >= gamma:
            values[k - 1] = gamma
        else:
            res = solve(g, k)
            values[k - 1] = res.value
            witnesses[k - 1] = res.witness
    return DominationChain(g.n, delta, gamma, tuple(values), tuple(witnesses))


def is_short_chain(g: Graph) -> bool:
    """True when allowing two dominators per outside vertex is already optimal."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if g.max_degree <= 1:
        return True
    gamma = solve(g, g.max_degree).value
    if gamma <= 2:
        return True
    return solve(g, 2).value == gamma


_CHAIN_CACHE: dict[Graph, tuple[int | None, int | None, int]] = {}


def chain_summary(g: Graph) -> tuple[int | None, int | None, int]:
    """(gamma11, gamma12, gamma) with None where the index exceeds max degree."""
    hit = _CHAIN_CACHE.get(g)
    if hit is not None:
        return hit
    delta = g.max_degree
    if delta == 0:
        out: tuple[int | None, int | None, int] = (None, None, 1)
    else:
        gamma = solve(g, delta).value
        g11 = gamma if gamma <= 1 else solve(g, 1).value
        if delta < 2:
            g12 = None
        else:
            g12 = gamma if gamma <= 2 else solve(g, 2).value
        out = (g11, g12, gamma)
    _CHAIN_CACHE[g] = out
    return out


def seed_chain_summaries(
    entries: Iterable[tuple[Graph, tuple[int | None, int | None, int]]]
) -> None:
    """Install precomputed summaries (e.g. from worker processes)."""
    _CHAIN_CACHE.update(entries)


# -- structural certificates for maximum degree 3 ---------------------------------


@dataclass(frozen=True)
class Certificate:
    """A vertex set whose removal leaves a verified perfect dominating code."""

    kind: str
    vertices: tuple[int, ...]
    bound: int

    def code(self, g: Graph) -> VertexSet:
        mask = g.full_mask
        for v in self.vertices:
            mask &= ~(1 << v)
        return VertexSet(g.n, mask)


def find_certificates(g: Graph) -> list[Certificate]:
    """Certificates bounding the perfect domination number of a max-degree-3 graph.

    Searches induced cycles whose vertices all have degree 3 and induced paths
    whose endpoints have degree 2 (at distance at least 2) with all interior
    vertices of degree 3. Each candidate is kept only after its complement is
    re-verified as a perfect dominating set.
    """
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if g.max_degree != 3:
        raise ValueError("certificates require maximum degree exactly 3")
    adj = g.adj
    full = g.full_mask
    certs: list[Certificate] = []
    deg3 = 0
    for v in range(g.n):
        if g.degree(v) == 3:
            deg3 |= 1 << v
    for cycle in induced_cycles(g, within=deg3):
        removed = 0
        for v in cycle:
            removed |= 1 << v
        if _is_valid(adj, full, full & ~removed, 1):
            certs.append(Certificate("degree3-cycle", cycle, g.n - len(cycle)))
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    for u, v in combinations(deg2, 2):
        if g.has_edge(u, v):
            continue
        for path in induced_paths_between(g, u, v, interior=deg3):
            removed = 0
            for w in path:
                removed |= 1 << w
            if _is_valid(adj, full, full & ~removed, 1):
                certs.append(Certificate("degree2-path", path, g.n - len(path)))
    certs.sort(key=lambda c: (c.kind, len(c.vertices), c.vertices))
    return certs


# -- explicit codes for max-degree-3 trees ------------------------------------------


def _require_tree(t: Graph) -> None:
    if not t.is_connected() or t.edge_count != t.n - 1:
        raise ValueError("input is not a tree")
    if t.max_degree != 3:
        raise ValueError("tree construction requires maximum degree exactly 3")
    if t.n < 7:
        raise ValueError("tree construction requires order at least 7")


def tree_gamma11_case(t: Graph) -> tuple[str, VertexSet]:
    """Perfect dominating code of size n-4 for a max-degree-3 tree, with the
    construction case that produced it."""
    _require_tree(t)
    n = t.n
    full = t.full_mask
    deg3 = [v for v in range(n) if t.degree(v) == 3]
    if len(deg3) >= 2:
        # at least four leaves exist; drop the four smallest
        leaves = sorted(v for v in range(n) if t.degree(v) == 1)
        mask = full
        for v in leaves[:4]:
            mask &= ~(1 << v)
        result = ("four-leaves", VertexSet(n, mask))
    else:
        u = deg3[0]
        legs = []
        for first in t.neighbors(u):
            leg = [first]
            prev, cur = u, first
            while True:
                nxts = [w for w in t.neighbors(cur) if w != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                leg.append(cur)
            legs.append(leg)
        legs.sort(key=lambda L: (len(L), L))
        a, b, c = legs
        if len(a) == 1 and len(b) == 1:
            chosen = [u] + c[2:]
            case = "case-1"
        elif len(a) == 1:
            chosen = [a[0]] + b[1:] + c[1:-1]
            case = "case-2"
        else:
            chosen = a[1:] + b[1:] + c[:-1]
            case = "case-3"
        mask = 0
        for v in chosen:
            mask |= 1 << v
        result = (case, VertexSet(n, mask))
    case, s = result
    if len(s) != n - 4 or not _is_valid(t.adj, full, s.mask, 1):
        raise AssertionError(f"tree construction produced an invalid code ({case})")
    return result


def tree_gamma11_set(t: Graph) -> VertexSet:
    """A perfect dominating code of size n-4 for a tree with maximum degree 3."""
    return tree_gamma11_case(t)[1]


__all__ = [
    "Certificate",
    "DominationChain",
    "SolveResult",
    "chain_summary",
    "seed_chain_summaries",
    "domination_chain",
    "find_certificates",
    "is_k_quasiperfect",
    "is_short_chain",
    "min_quasiperfect",
    "min_quasiperfect_bruteforce",
    "quasiperfect_violations",
    "solve",
    "tree_gamma11_case",
    "tree_gamma11_set",
]
