"""Isomorph-free exhaustive generation of small connected graphs.

Generation works level by level: every isomorphism class of connected graphs
on n vertices arises from some class on n-1 vertices by adding one vertex
joined to a non-empty neighborhood, so extending each parent by every
neighborhood and deduplicating via canonical labels enumerates each class
exactly once. Degree caps prune during augmentation; all other filters are
checked on completed graphs.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from . import graph6
from .canon import canonical_graph
from .domination import chain_summary
from .graph import Graph, disjoint_union, iter_bits

UNFILTERED_MAX_ORDER = 9
FILTERED_MAX_ORDER = 10
WITNESS_MAX_ORDER = 8


class LimitError(RuntimeError):
    """Requested order exceeds the supported enumeration range."""


@dataclass(frozen=True)
class GraphFilter:
    """Conjunction of predicates applied to connected graphs of order n."""

    n: int
    delta: int | None = None
    gamma: int | None = None
    leaves: int | None = None
    max_leaves: int | None = None
    claw_free: bool = False
    cograph: bool = False
    cubic: bool = False
    tree: bool = False

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("order must be positive")
        if self.n > FILTERED_MAX_ORDER:
            raise LimitError(f"order {self.n} exceeds the cap of {FILTERED_MAX_ORDER}")
        bounded = self.delta is not None or self.cubic or self.tree
        if not bounded and self.n > UNFILTERED_MAX_ORDER:
            raise LimitError(
                f"order {self.n} needs a degree bound or tree filter "
                f"(unfiltered cap is {UNFILTERED_MAX_ORDER})"
            )

    def accepts(self, g: Graph) -> bool:
        if g.n != self.n or not g.is_connected():
            return False
        if self.delta is not None and g.max_degree != self.delta:
            return False
        if self.tree and g.edge_count != g.n - 1:
            return False
        if self.cubic and not (g.n >= 4 and g.min_degree == 3 and g.max_degree == 3):
            return False
        if self.leaves is not None and g.leaf_count != self.leaves:
            return False
        if self.max_leaves is not None and g.leaf_count > self.max_leaves:
            return False
        if self.claw_free and not g.is_claw_free():
            return False
        if self.cograph and not g.is_cograph():
            return False
        if self.gamma is not None and chain_summary(g)[2] != self.gamma:
            return False
        return True


@dataclass(frozen=True)
class EnumerationReport:
    filter: GraphFilter
    count: int
    representatives: tuple[str, ...]
    elapsed_s: float
    chains: tuple[tuple[int | None, int | None, int], ...] | None = None

    def to_json(self) -> dict:
        payload = {
            "filter": {k: v for k, v in asdict(self.filter).items() if v not in (None, False)},
            "count": self.count,
            "elapsed_s": round(self.elapsed_s, 3),
        }
        if self.chains is not None:
            payload["chains"] = [list(c) for c in self.chains]
        return payload


# -- isomorphism classes, cached per level ------------------------------------------

_LEVEL_CACHE: dict[tuple[int, int | None, bool], tuple[Graph, ...]] = {}


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _extend(parent: Graph, attach: int) -> Graph:
    m = parent.n
    bit = 1 << m
    rows = list(parent.adj)
    for v in iter_bits(attach):
        rows[v] |= bit
    rows.append(attach)
    return Graph(m + 1, tuple(rows))


def connected_classes(
    n: int, degree_cap: int | None = None, trees_only: bool = False
) -> tuple[Graph, ...]:
    """One canonical representative per connected class of order n, sorted by
    canonical label. ``degree_cap`` bounds all degrees; ``trees_only`` restricts
    augmentation to pendant attachments."""
    if n < 1:
        raise ValueError("order must be positive")
    if degree_cap is not None and degree_cap < 1 and n > 1:
        return ()
    key = (n, degree_cap, trees_only)
    hit = _LEVEL_CACHE.get(key)
    if hit is not None:
        return hit
    if degree_cap is not None:
        base = _LEVEL_CACHE.get((n, None, trees_only))
        if base is not None:
            out = tuple(g for g in base if g.max_degree <= degree_cap)
            _LEVEL_CACHE[key] = out
            return out
    if n == 1:
        out = (Graph(1, (0,)),)
    else:
        parents = connected_classes(n - 1, degree_cap, trees_only)
        seen: dict[str, Graph] = {}
        for parent in parents:
            if degree_cap is None:
                allowed = parent.full_mask
            else:
                allowed = 0
                for v in range(parent.n):
                    if parent.degree(v) < degree_cap:
                        allowed |= 1 << v
            if trees_only:
                candidates: Iterator[int] = (1 << v for v in iter_bits(allowed))
            else:
                candidates = _submasks(allowed)
            for attach in candidates:
                if degree_cap is not None and attach.bit_count() > degree_cap:
                    continue
                child = canonical_graph(_extend(parent, attach))
                seen.setdefault(graph6.encode(child), child)
        out = tuple(seen[label] for label in sorted(seen))
    _LEVEL_CACHE[key] = out
    return out


def enumerate_connected(
    filt: GraphFilter,
    sink: Callable[[Graph], None] | None = None,
    with_chains: bool = False,
) -> EnumerationReport:
    """Emit exactly one representative per class satisfying the filter."""
    filt.validate()
    start = time.perf_counter()
    cap = filt.delta
    if filt.cubic:
        cap = 3 if cap is None else min(cap, 3)
    accepted: list[str] = []
    chains: list[tuple[int | None, int | None, int]] = []
    for g in connected_classes(filt.n, cap, filt.tree):
        if filt.accepts(g):
            accepted.append(graph6.encode(g))
            if with_chains:
                chains.append(chain_summary(g))
            if sink is not None:
                sink(g)
    return EnumerationReport(
        filt,
        len(accepted),
        tuple(accepted),
        time.perf_counter() - start,
        tuple(chains) if with_chains else None,
    )


# -- all graphs (connected or not), for operator pools ------------------------------


def _partitions(n: int, maxpart: int | None = None) -> Iterator[tuple[int, ...]]:
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of arbitrary graphs of order n,
    assembled as multisets of connected components."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > UNFILTERED_MAX_ORDER:
        raise LimitError(f"order {n} exceeds the cap of {UNFILTERED_MAX_ORDER}")
    out: list[Graph] = []
    for parts in _partitions(n):
        sizes = sorted(set(parts), reverse=True)
        pools = []
        for size in sizes:
            count = parts.count(size)
            pools.append(list(combinations_with_replacement(connected_classes(size), count)))
        def assemble(idx: int, acc: list[Graph]) -> None:
            if idx == len(pools):
                g = acc[0]
                for comp in acc[1:]:
                    g = disjoint_union(g, comp)
                out.append(g)
                return
            for combo in pools[idx]:
                assemble(idx + 1, acc + list(combo))
        assemble(0, [])
    return tuple(out)


# -- first-witness / certified-absence search ----------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of an exhaustive scan for a graph with prescribed parameters."""

    n: int
    witness: Graph | None
    checked: int
    elapsed_s: float

    @property
    def exists(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "witness": graph6.encode(self.witness) if self.witness else None,
            "exists": self.exists,
            "checked": self.checked,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def witness_search(
    n: int,
    *,
    delta: int | None = None,
    gamma: int | None = None,
    gamma11: int | None = None,
    gamma11_min: int | None = None,
    gamma11_max: int | None = None,
    claw_free: bool | None = None,
    cograph: bool | None = None,
    predicate: Callable[[Graph], bool] | None = None,
) -> WitnessReport:
    """First connected graph of order n matching all given parameters, or a
    certified absence after scanning every isomorphism class."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > WITNESS_MAX_ORDER:
        raise LimitError(f"witness search is capped at order {WITNESS_MAX_ORDER}")
    start = time.perf_counter()
    checked = 0
    for g in connected_classes(n, delta):
        checked += 1
        if delta is not None and g.max_degree != delta:
            continue
        if claw_free is not None and g.is_claw_free() != claw_free:
            continue
        if cograph is not None and g.is_cograph() != cograph:
            continue
        if gamma is not None or gamma11 is not None or gamma11_min is not None or gamma11_max is not None:
            g11, _g12, gam = chain_summary(g)
            if gamma is not None and gam != gamma:
                continue
            if gamma11 is not None and g11 != gamma11:
                continue
            if gamma11_min is not None and (g11 is None or g11 < gamma11_min):
                continue
            if gamma11_max is not None and (g11 is None or g11 > gamma11_max):
                continue
        if predicate is not None and not predicate(g):
            continue
        return WitnessReport(n, g, checked, time.perf_counter() - start)
    return WitnessReport(n, None, checked, time.perf_counter() - start)


__all__ = [
    "EnumerationReport",
    "FILTERED_MAX_ORDER",
    "GraphFilter",
    "LimitError",
    "UNFILTERED_MAX_ORDER",
    "WitnessReport",
    "connected_classes",
    "enumerate_connected",
    "graph_classes",
    "witness_search",
]
