"""Executable verification suites: each structural claim becomes a pass/fail
report backed by constructions and exhaustive enumeration.

A suite never reports "verified" for a universally quantified claim unless its
quantification domain was fully enumerated; anything narrower is stated in the
scope field. Refutations always carry a concrete counterexample (graph6 plus
its chain values), so the suites can falsify, not just confirm.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import families, graph6
from .canon import canonical_graph, canonical_label
from .domination import chain_summary, find_certificates, seed_chain_summaries, tree_gamma11_case
from .enumeration import connected_classes, graph_classes, witness_search
from .graph import Graph, join

VERIFIED = "verified"
REFUTED = "refuted"
OUT_OF_SCOPE = "out-of-scope"

DEFAULT_N_MAX = 8


@dataclass
class ClaimResult:
    claim_id: str
    statement: str
    scope: str
    verdict: str
    evidence: list[dict] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def counterexamples(self) -> list[dict]:
        return [e for e in self.evidence if e.get("status") == REFUTED]

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "scope": self.scope,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _chain_info(g: Graph) -> dict:
    g11, g12, gamma = chain_summary(g)
    return {
        "graph6": graph6.encode(g),
        "gamma11": g11,
        "gamma12": g12,
        "gamma": gamma,
    }


def _refute(evidence: list[dict], g: Graph, detail: str) -> None:
    entry = _chain_info(g)
    entry["status"] = REFUTED
    entry["detail"] = detail
    evidence.append(entry)


def _finish(result: ClaimResult, start: float) -> ClaimResult:
    result.elapsed_s = time.perf_counter() - start
    if any(e.get("status") == REFUTED for e in result.evidence):
        result.verdict = REFUTED
    return result


def prewarm_chains(graphs: list[Graph], jobs: int = 1) -> None:
    """Fill the chain cache, fanning per-graph solves out to worker processes.

    Results are independent of the job count; with jobs <= 1 this is a no-op
    (summaries are then computed lazily in-process).
    """
    if jobs <= 1 or len(graphs) < 2:
        return
    import multiprocessing

    lines = [graph6.encode(g) for g in graphs]
    with multiprocessing.Pool(jobs) as pool:
        results = pool.map(_chain_worker, lines, chunksize=64)
    seed_chain_summaries(
        (graph6.decode(line), summary) for line, summary in zip(lines, results)
    )


def _chain_worker(line: str) -> tuple[int | None, int | None, int]:
    return chain_summary(graph6.decode(line))


def _is_short(g: Graph) -> bool:
    _g11, g12, gamma = chain_summary(g)
    return True if g12 is None else g12 == gamma


# -- suites ------------------------------------------------------------------------


def suite_short_chain(n_max: int = DEFAULT_N_MAX, jobs: int = 1) -> ClaimResult:
    """Max degree >= n-3, max degree <= 2, cograph, or claw-free forces
    gamma12 = gamma."""
    start = time.perf_counter()
    result = ClaimResult(
        "short-chain",
        "every connected graph with max degree >= n-3, max degree <= 2, a "
        "cograph, or claw-free, satisfies gamma12 = gamma",
        f"all connected graphs, 1 <= n <= {n_max}",
        VERIFIED,
    )
    hypotheses = {
        "max-degree>=n-3": lambda g: g.max_degree >= g.n - 3,
        "max-degree<=2": lambda g: g.max_degree <= 2,
        "cograph": lambda g: g.is_cograph(),
        "claw-free": lambda g: g.is_claw_free(),
    }
    counts = {name: 0 for name in hypotheses}
    for n in range(1, n_max + 1):
        classes = connected_classes(n)
        prewarm_chains(list(classes), jobs)
        for g in classes:
            matched = [name for name, pred in hypotheses.items() if pred(g)]
            if not matched:
                continue
            for name in matched:
                counts[name] += 1
            if not _is_short(g):
                _refute(result.evidence, g, f"hypotheses {matched} but chain not short")
    result.evidence.append({"status": "info", "graphs_per_hypothesis": counts})
    return _finish(result, start)


_EXCLUDED_N2 = {(3, 4), (4, 4), (4, 5), (5, 5)}


def suite_delta_n2(n_max: int = DEFAULT_N_MAX, jobs: int = 1) -> ClaimResult:
    """Realizable perfect domination numbers of graphs with max degree n-2."""
    start = time.perf_counter()
    result = ClaimResult(
        "delta-n2",
        "max degree n-2 forces gamma = 2, and such a graph with gamma11 = k "
        "exists, for 2 <= k <= n, exactly when (k, n) is not one of "
        "(3,4), (4,4), (4,5), (5,5)",
        f"4 <= n <= {n_max}, exhaustive per order",
        VERIFIED if n_max >= 4 else OUT_OF_SCOPE,
    )
    for n in range(4, n_max + 1):
        pool = [g for g in connected_classes(n, n - 2) if g.max_degree == n - 2]
        prewarm_chains(pool, jobs)
        realized: dict[int, Graph] = {}
        for g in pool:
            g11, _g12, gamma = chain_summary(g)
            if gamma != 2:
                _refute(result.evidence, g, f"max degree n-2 forces gamma = 2, got {gamma}")
            realized.setdefault(g11, g)
        for k in range(2, n + 1):
            should_exist = (k, n) not in _EXCLUDED_N2
            witness = realized.get(k)
            if should_exist and witness is None:
                result.evidence.append(
                    {"status": REFUTED, "k": k, "n": n, "detail": "no graph realizes k"}
                )
            elif not should_exist and witness is not None:
                _refute(result.evidence, witness, f"excluded pair (k={k}, n={n}) realized")
            elif witness is not None:
                result.evidence.append(
                    {"status": "witness", "k": k, "n": n, "graph6": graph6.encode(witness)}
                )
            else:
                result.evidence.append({"status": "absent", "k": k, "n": n})
        if n >= 6:
            _check_n2_constructions(result, n)
    return _finish(result, start)


def _check_n2_constructions(result: ClaimResult, n: int) -> None:
    cases: list[tuple[str, Graph, int]] = []
    cases.append((f"biclique:2,{n - 2}", families.build(families.parse_spec(f"biclique:2,{n - 2}")), 2))
    cases.append((f"pn2_join:{n}", families.build(families.parse_spec(f"pn2_join:{n}")), n))
    for k in range(4, n - 1):
        spec = f"fig2e:{n},{k}"
        cases.append((spec, families.build(families.parse_spec(spec)), k))
    for label, g, expected_k in cases:
        info = _chain_info(g)
        if g.max_degree != n - 2 or info["gamma11"] != expected_k:
            _refute(result.evidence, g, f"construction {label} missed its target")
        else:
            result.evidence.append(
                {"status": "construction", "spec": label, "k": expected_k, "n": n}
            )
    for k in (3, n - 1):
        if (k, n) in _EXCLUDED_N2 or k < 2:
            continue
        rep = witness_search(n, delta=n - 2, gamma11=k)
        if rep.witness is None:
            result.evidence.append(
                {"status": REFUTED, "k": k, "n": n, "detail": "witness search found none"}
            )
        else:
            result.evidence.append(
                {
                    "status": "witness-search",
                    "k": k,
                    "n": n,
                    "graph6": graph6.encode(rep.witness),
                    "checked": rep.checked,
                }
            )


_EXCLUDED_N3 = {
    2: {(4, 5), (5, 5), (4, 6), (5, 6), (6, 6)},
    3: {(4, 6), (5, 6), (6, 6), (5, 7), (6, 7), (7, 7), (8, 8)},
}


def suite_delta_n3(gamma_target: int, n_max: int = DEFAULT_N_MAX, jobs: int = 1) -> ClaimResult:
    """Realizable perfect domination numbers with max degree n-3 and fixed gamma."""
    if gamma_target not in (2, 3):
        raise ValueError("gamma_target must be 2 or 3")
    start = time.perf_counter()
    excluded = _EXCLUDED_N3[gamma_target]
    n_min = 5 if gamma_target == 2 else 6
    result = ClaimResult(
        f"delta-n3-gamma{gamma_target}",
        f"a connected graph with max degree n-3, gamma = {gamma_target} and "
        f"gamma11 = k exists, for {gamma_target} <= k <= n, exactly when "
        f"(k, n) avoids {sorted(excluded)}",
        f"{n_min} <= n <= {n_max}, exhaustive per order; larger n rests on "
        "constructions outside this scope",
        VERIFIED if n_max >= n_min else OUT_OF_SCOPE,
    )
    for n in range(n_min, n_max + 1):
        pool = [g for g in connected_classes(n, n - 3) if g.max_degree == n - 3]
        prewarm_chains(pool, jobs)
        realized: dict[int, Graph] = {}
        for g in pool:
            g11, _g12, gamma = chain_summary(g)
            if gamma not in (2, 3):
                _refute(result.evidence, g, f"max degree n-3 forces gamma in {{2, 3}}, got {gamma}")
            if gamma == gamma_target:
                realized.setdefault(g11, g)
        for k in range(gamma_target, n + 1):
            should_exist = (k, n) not in excluded
            witness = realized.get(k)
            if should_exist and witness is None:
                result.evidence.append(
                    {"status": REFUTED, "k": k, "n": n, "detail": "no graph realizes k"}
                )
            elif not should_exist and witness is not None:
                _refute(result.evidence, witness, f"excluded pair (k={k}, n={n}) realized")
            elif witness is not None:
                result.evidence.append(
                    {"status": "witness", "k": k, "n": n, "graph6": graph6.encode(witness)}
                )
            else:
                result.evidence.append({"status": "absent", "k": k, "n": n})
    if gamma_target == 3 and n_max >= 8:
        sixteen = [
            g
            for g in connected_classes(7, 4)
            if g.max_degree == 4 and g.leaf_count <= 2 and chain_summary(g)[2] == 3
        ]
        fortysix = [
            g
            for g in connected_classes(8, 5)
            if g.max_degree == 5 and g.leaf_count == 0 and chain_summary(g)[2] == 3
        ]
        result.evidence.append(
            {
                "status": "info",
                "inspection_pools": {
                    "n7_delta4_gamma3_leq2leaves": len(sixteen),
                    "n8_delta5_gamma3_leafless": len(fortysix),
                },
            }
        )
    result.evidence.append(
        {"status": OUT_OF_SCOPE, "detail": f"orders above {n_max} not exhausted here"}
    )
    return _finish(result, start)


def suite_delta3(n_max: int = DEFAULT_N_MAX, tree_n_max: int = 10, jobs: int = 1) -> ClaimResult:
    """Bounds for max degree 3: n-3 in general (bull excepted), n-4 for cubic
    graphs (K4 excepted) and for trees of order at least 7."""
    start = time.perf_counter()
    result = ClaimResult(
        "delta-3",
        "max degree 3 forces gamma11 <= n-3 except the bull (which has 3 = n-2); "
        "cubic graphs other than K4 have gamma11 <= n-4; max-degree-3 trees of "
        "order >= 7 admit an explicit perfect code of size n-4",
        f"connected graphs 4 <= n <= {n_max}; trees up to n = {tree_n_max}",
        VERIFIED,
    )
    bull = canonical_label(families.build(families.parse_spec("bull")))
    checked = 0
    for n in range(4, n_max + 1):
        pool = [g for g in connected_classes(n, 3) if g.max_degree == 3]
        prewarm_chains(pool, jobs)
        for g in pool:
            checked += 1
            g11 = chain_summary(g)[0]
            if canonical_label(g) == bull:
                if g11 != 3:
                    _refute(result.evidence, g, "bull must have gamma11 = 3")
            elif g11 > n - 3:
                _refute(result.evidence, g, f"gamma11 = {g11} exceeds n-3 = {n - 3}")
    result.evidence.append({"status": "info", "max_degree_3_classes": checked})
    k13 = families.build(families.parse_spec("star:4"))
    if chain_summary(k13)[0] == 1:
        result.evidence.append({"status": "tightness", "graph6": graph6.encode(k13), "gamma11": 1})
    else:
        _refute(result.evidence, k13, "claw must attain the n-3 bound with gamma11 = 1")
    k4 = canonical_label(families.build(families.parse_spec("complete:4")))
    cubic_checked = 0
    for n in range(4, n_max + 1, 2):
        for g in connected_classes(n, 3):
            if g.min_degree != 3:
                continue
            cubic_checked += 1
            g11 = chain_summary(g)[0]
            if canonical_label(g) == k4:
                if g11 != 1:
                    _refute(result.evidence, g, "K4 must have gamma11 = 1")
            elif g11 > n - 4:
                _refute(result.evidence, g, f"cubic with gamma11 = {g11} > n-4")
    result.evidence.append({"status": "info", "cubic_classes": cubic_checked})
    trees_checked = 0
    for n in range(7, tree_n_max + 1):
        for t in connected_classes(n, 3, trees_only=True):
            if t.max_degree != 3:
                continue
            trees_checked += 1
            case, code = tree_gamma11_case(t)
            ok_size = len(code) == n - 4
            g11 = chain_summary(t)[0]
            if not ok_size or g11 > n - 4:
                _refute(result.evidence, t, f"tree construction case {case} failed")
    result.evidence.append({"status": "info", "max_degree_3_trees": trees_checked})
    cert_checked = 0
    for n in range(4, min(n_max, 7) + 1):
        for g in connected_classes(n, 3):
            if g.max_degree != 3:
                continue
            for cert in find_certificates(g):
                cert_checked += 1
                if chain_summary(g)[0] > cert.bound:
                    _refute(result.evidence, g, f"certificate bound {cert.bound} violated")
    result.evidence.append({"status": "info", "certificates_checked": cert_checked})
    return _finish(result, start)


def suite_join_cograph(total_max: int = 9, cograph_n_max: int = DEFAULT_N_MAX, jobs: int = 1) -> ClaimResult:
    """Joins realize gamma11 = 1, 2, or n by the universal/isolated-vertex
    trichotomy; consequently every connected cograph has gamma11 in {1, 2, n}."""
    start = time.perf_counter()
    result = ClaimResult(
        "join-cograph",
        "gamma11 of a join is 1 when a part has a universal vertex, otherwise "
        "2 when both parts have an isolated vertex, otherwise n; every "
        "connected cograph has gamma11 in {1, 2, n}",
        f"all ordered pairs with n1 + n2 <= {total_max}; all connected cographs "
        f"with n <= {cograph_n_max}",
        VERIFIED,
    )
    pairs = 0
    for n1 in range(1, total_max):
        for n2 in range(1, total_max - n1 + 1):
            for g1 in graph_classes(n1):
                u1 = g1.has_universal_vertex()
                i1 = g1.has_isolated_vertex()
                for g2 in graph_classes(n2):
                    pairs += 1
                    joined = canonical_graph(join(g1, g2))
                    if u1 or g2.has_universal_vertex():
                        expected = 1
                    elif i1 and g2.has_isolated_vertex():
                        expected = 2
                    else:
                        expected = joined.n
                    got = chain_summary(joined)[0]
                    if got != expected:
                        _refute(
                            result.evidence,
                            joined,
                            f"join of {graph6.encode(g1)} and {graph6.encode(g2)}: "
                            f"gamma11 = {got}, trichotomy expects {expected}",
                        )
    result.evidence.append({"status": "info", "ordered_pairs_checked": pairs})
    cographs = 0
    for n in range(1, cograph_n_max + 1):
        classes = [g for g in connected_classes(n) if g.is_cograph()]
        prewarm_chains(classes, jobs)
        for g in classes:
            cographs += 1
            g11 = chain_summary(g)[0]
            if g11 is not None and g11 not in (1, 2, n):
                _refute(result.evidence, g, f"cograph with gamma11 = {g11} not in {{1, 2, n}}")
    result.evidence.append({"status": "info", "connected_cographs_checked": cographs})
    return _finish(result, start)


def _clawfree_condition(h: int, k: int, n: int) -> bool:
    return h + k <= n or 3 * h + k + 1 <= 2 * n or (h, k, n) == (2, 6, 6)


def suite_clawfree(n_max: int = 7, construction_n_max: int = 10, jobs: int = 1) -> ClaimResult:
    """Existence of claw-free graphs with prescribed (gamma, gamma11) follows
    the additive conditions exactly, including the one exceptional triple."""
    start = time.perf_counter()
    result = ClaimResult(
        "claw-free",
        "for 4 <= n <= 7 and 2 <= h <= k <= n, a connected claw-free graph "
        "with gamma = h and gamma11 = k exists exactly when h + k <= n or "
        "3h + k + 1 <= 2n or (h, k, n) = (2, 6, 6); the two clique-based "
        "constructions realize their targets up to n = 10",
        f"exhaustive for 4 <= n <= {min(n_max, 7)}; constructions for n <= {construction_n_max}",
        VERIFIED if n_max >= 4 else OUT_OF_SCOPE,
    )
    for n in range(4, min(n_max, 7) + 1):
        classes = [g for g in connected_classes(n) if g.is_claw_free()]
        prewarm_chains(classes, jobs)
        realized: dict[tuple[int, int], Graph] = {}
        for g in classes:
            g11, _g12, gamma = chain_summary(g)
            realized.setdefault((gamma, g11), g)
        for h in range(2, n + 1):
            for k in range(h, n + 1):
                should = _clawfree_condition(h, k, n)
                witness = realized.get((h, k))
                if should and witness is None:
                    result.evidence.append(
                        {"status": REFUTED, "h": h, "k": k, "n": n, "detail": "no witness"}
                    )
                elif not should and witness is not None:
                    _refute(result.evidence, witness, f"unexpected triple ({h},{k},{n})")
        result.evidence.append(
            {"status": "info", "n": n, "claw_free_classes": len(classes),
             "realized_pairs": sorted(realized)}
        )
    built = 0
    for n in range(4, construction_n_max + 1):
        for h in range(2, n + 1):
            for k in range(h, n + 1):
                if h + k <= n:
                    spec = f"clawfreeA:{h},{k},{n}"
                elif 3 * h + k + 1 <= 2 * n:
                    spec = f"clawfreeB:{h},{k},{n}"
                else:
                    continue
                g = families.build(families.parse_spec(spec))
                g11, _g12, gamma = chain_summary(g)
                built += 1
                if not g.is_claw_free() or gamma != h or g11 != k:
                    _refute(result.evidence, g, f"construction {spec} missed its target")
    result.evidence.append({"status": "info", "constructions_verified": built})
    return _finish(result, start)


def scan_clawfree_profiles(n: int) -> dict[tuple[int, int], str]:
    """Realized (gamma, gamma11) pairs over connected claw-free graphs of
    order n, for inspecting ranges beyond the verified characterization.
    Informational only; no suite draws a verdict from it."""
    out: dict[tuple[int, int], str] = {}
    for g in connected_classes(n):
        if not g.is_claw_free():
            continue
        g11, _g12, gamma = chain_summary(g)
        out.setdefault((gamma, g11), graph6.encode(g))
    return out


SUITES = {
    "short-chain": suite_short_chain,
    "delta-n2": suite_delta_n2,
    "delta-n3-gamma2": lambda n_max=DEFAULT_N_MAX, jobs=1: suite_delta_n3(2, n_max, jobs),
    "delta-n3-gamma3": lambda n_max=DEFAULT_N_MAX, jobs=1: suite_delta_n3(3, n_max, jobs),
    "delta-3": suite_delta3,
    "join-cograph": lambda n_max=DEFAULT_N_MAX, jobs=1: suite_join_cograph(
        total_max=min(n_max + 1, 9), cograph_n_max=n_max, jobs=jobs
    ),
    "claw-free": lambda n_max=DEFAULT_N_MAX, jobs=1: suite_clawfree(n_max=n_max, jobs=jobs),
}


def run_suite(name: str, n_max: int = DEFAULT_N_MAX, jobs: int = 1) -> ClaimResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](n_max=n_max, jobs=jobs)


__all__ = [
    "ClaimResult",
    "DEFAULT_N_MAX",
    "OUT_OF_SCOPE",
    "REFUTED",
    "SUITES",
    "VERIFIED",
    "prewarm_chains",
    "run_suite",
    "scan_clawfree_profiles",
    "suite_clawfree",
    "suite_delta3",
    "suite_delta_n2",
    "suite_delta_n3",
    "suite_join_cograph",
    "suite_short_chain",
]
