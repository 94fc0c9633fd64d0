import json

from quasidom import verify
from quasidom.domination import chain_summary
from quasidom.enumeration import connected_classes
from quasidom.verify import (
    REFUTED,
    VERIFIED,
    ClaimResult,
    _finish,
    _refute,
    prewarm_chains,
    run_suite,
    scan_clawfree_profiles,
    suite_clawfree,
    suite_delta3,
    suite_delta_n2,
    suite_delta_n3,
    suite_join_cograph,
    suite_short_chain,
)
from util import bull


def test_short_chain_small():
    result = suite_short_chain(6)
    assert result.verdict == VERIFIED
    assert not result.counterexamples
    counts = result.evidence[-1]["graphs_per_hypothesis"]
    assert counts["max-degree<=2"] == 10  # paths and cycles up to n=6, plus K1, K2


def test_delta_n2_small():
    result = suite_delta_n2(6)
    assert result.verdict == VERIFIED
    absents = {(e["k"], e["n"]) for e in result.evidence if e.get("status") == "absent"}
    assert absents == {(3, 4), (4, 4), (4, 5), (5, 5)}
    witnessed = {(e["k"], e["n"]) for e in result.evidence if e.get("status") == "witness"}
    assert (2, 4) in witnessed and (6, 6) in witnessed


def test_delta_n3_gamma2_small():
    result = suite_delta_n3(2, 6)
    assert result.verdict == VERIFIED
    absents = {(e["k"], e["n"]) for e in result.evidence if e.get("status") == "absent"}
    assert absents == {(4, 5), (5, 5), (4, 6), (5, 6), (6, 6)}


def test_delta_n3_gamma3_small():
    result = suite_delta_n3(3, 7)
    assert result.verdict == VERIFIED
    absents = {(e["k"], e["n"]) for e in result.evidence if e.get("status") == "absent"}
    assert absents == {(4, 6), (5, 6), (6, 6), (5, 7), (6, 7), (7, 7)}


def test_delta_n3_rejects_other_gammas():
    import pytest

    with pytest.raises(ValueError):
        suite_delta_n3(4, 6)


def test_delta3_small():
    result = suite_delta3(6, tree_n_max=8)
    assert result.verdict == VERIFIED
    infos = {k: v for e in result.evidence if e.get("status") == "info" for k, v in e.items()}
    assert infos["cubic_classes"] == 3  # K4, K33, the triangular prism


def test_join_cograph_small():
    result = suite_join_cograph(total_max=6, cograph_n_max=5)
    assert result.verdict == VERIFIED


def test_clawfree_small():
    result = suite_clawfree(6, construction_n_max=8)
    assert result.verdict == VERIFIED
    for entry in result.evidence:
        if entry.get("status") == "info" and entry.get("n") == 6:
            assert (2, 6) in entry["realized_pairs"]  # the exceptional triple


def test_scan_reports_exceptional_pair():
    profiles = scan_clawfree_profiles(6)
    assert (2, 6) in profiles


def test_run_suite_dispatch():
    result = run_suite("short-chain", n_max=5)
    assert result.claim_id == "short-chain"
    import pytest

    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_results_are_deterministic():
    a = suite_delta_n2(5)
    b = suite_delta_n2(5)
    assert a.evidence == b.evidence and a.verdict == b.verdict


def test_report_json_schema():
    result = suite_short_chain(4)
    payload = result.to_json()
    assert set(payload) == {"claim_id", "statement", "scope", "verdict", "evidence", "elapsed_s"}
    json.dumps(payload)  # serializable


def test_refutation_path_surfaces_counterexamples():
    import time

    result = ClaimResult("demo", "demo statement", "n = 5", VERIFIED)
    _refute(result.evidence, bull(), "synthetic failure")
    done = _finish(result, time.perf_counter())
    assert done.verdict == REFUTED
    assert done.counterexamples[0]["graph6"]
    assert done.counterexamples[0]["gamma11"] == 3


def test_prewarm_matches_serial():
    graphs = list(connected_classes(5))
    expected = [chain_summary(g) for g in graphs]
    from quasidom.domination import _CHAIN_CACHE

    for g in graphs:
        _CHAIN_CACHE.pop(g, None)
    prewarm_chains(graphs, jobs=2)
    assert [chain_summary(g) for g in graphs] == expected


def test_empty_domain_reports_out_of_scope():
    from quasidom.verify import OUT_OF_SCOPE

    assert suite_delta_n3(2, 4).verdict == OUT_OF_SCOPE
    assert suite_delta_n2(3).verdict == OUT_OF_SCOPE
