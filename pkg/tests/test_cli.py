import io
import json

import pytest

from quasidom import graph6
from quasidom.cli import main
from quasidom.ilp import read_lp
from util import cycle


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen(capsys):
    code, out, _ = run_cli(capsys, "gen", "cycle:5")
    assert code == 0
    assert graph6.decode(out.strip()) == cycle(5)


def test_gen_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "clawfreeA:2,3,6", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["n"] == 6
    assert payload["expected"] == {"gamma11": 3, "gamma12": 2, "gamma": 2}


def test_gen_bad_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "gen", "mystery:1")
    assert code == 2 and "error" in err


def test_chain_on_c5(capsys):
    code, out, _ = run_cli(capsys, "chain", graph6.encode(cycle(5)))
    assert code == 0
    assert "γ11=3 γ12=2 γ=2" in out


def test_gen_pipes_into_chain(capsys, monkeypatch):
    _, out, _ = run_cli(capsys, "gen", "clawfreeA:2,3,6")
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run_cli(capsys, "chain")
    assert code == 0
    assert "γ11=3" in out2 and "γ=2" in out2


def test_chain_json(capsys):
    code, out, _ = run_cli(capsys, "chain", "--family", "cycle:5", "--json")
    payload = json.loads(out)
    assert payload["values"] == {"1": 3, "2": 2}
    assert payload["gamma"] == 2
    assert payload["witnesses"]["1"] == [0, 1, 2]


def test_compute_json_record(capsys):
    code, out, _ = run_cli(capsys, "compute", "--k", "1", "--family", "bull", "--json")
    payload = json.loads(out)
    assert set(payload) == {"n", "k", "value", "witness", "nodes_expanded", "millis"}
    assert payload["value"] == 3 and payload["witness"] == [0, 1, 2]


def test_compute_edge_list_input(capsys):
    code, out, _ = run_cli(capsys, "compute", "--k", "1", "--edge-list", "3; 0 1; 1 2")
    assert code == 0 and "γ11=1" in out


def test_enumerate_streams_and_reports(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--n", "5", "--delta", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert json.loads(err)["count"] == 8


def test_enumerate_json_with_chains(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--n", "4", "--tree", "--chains", "--json"
    )
    payload = json.loads(out)
    assert code == 0 and payload["count"] == 2
    assert all("γ" in line for line in payload["graphs"])


def test_enumerate_over_limit_exits_3(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--n", "11")
    assert code == 3 and "error" in err


def test_witness_found_and_absent(capsys):
    code, out, _ = run_cli(
        capsys, "witness", "--n", "6", "--delta", "4", "--gamma", "2",
        "--gamma11", "6", "--claw-free", "--json",
    )
    payload = json.loads(out)
    assert code == 0 and payload["exists"] and payload["witness"]

    code, out, err = run_cli(capsys, "witness", "--n", "5", "--delta", "3", "--gamma11", "4")
    assert code == 0 and out == "" and "none exists" in err


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "claw-free", "--n-max", "5")
    assert code == 0
    assert "claw-free: verified" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "delta-n2", "--n-max", "5", "--json")
    reports = json.loads(out)
    assert code == 0 and reports[0]["verdict"] == "verified"


def test_export_ilp_round_trips(capsys, tmp_path):
    target = tmp_path / "model.lp"
    code, _, _ = run_cli(
        capsys, "export-ilp", "--k", "2", "--family", "cycle:5", "-o", str(target)
    )
    assert code == 0
    model = read_lp(target.read_text())
    assert model.n == 5 and model.k == 2

    code, out, _ = run_cli(capsys, "export-ilp", "--k", "1", "--family", "path:4")
    assert code == 0 and read_lp(out).n == 4


def test_certificate_text(capsys):
    code, out, _ = run_cli(capsys, "certificate", "--family", "biclique:3,3")
    assert code == 0
    assert "degree3-cycle" in out and "γ11<=2" in out


def test_certificate_rejects_wrong_degree(capsys):
    code, _, err = run_cli(capsys, "certificate", "--family", "cycle:6")
    assert code == 2 and "error" in err


def test_malformed_graph6_exits_2(capsys):
    code, _, err = run_cli(capsys, "compute", "--k", "1", "B\x1f")
    assert code == 2 and "error" in err


def test_byte_stable_output(capsys):
    _, first, _ = run_cli(capsys, "chain", "--family", "cycle:9")
    _, second, _ = run_cli(capsys, "chain", "--family", "cycle:9")
    assert first == second


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_refuted_suite_exits_1(capsys, monkeypatch):
    from quasidom import verify as verify_mod
    from quasidom.verify import REFUTED, ClaimResult

    def fake_suite(n_max=8, jobs=1):
        return ClaimResult("short-chain", "synthetic", "n/a", REFUTED,
                           [{"status": REFUTED, "detail": "synthetic"}])

    monkeypatch.setitem(verify_mod.SUITES, "short-chain", fake_suite)
    code, out, _ = run_cli(capsys, "verify", "short-chain")
    assert code == 1
    assert "refuted" in out


def test_export_ilp_json(capsys):
    code, out, _ = run_cli(capsys, "export-ilp", "--k", "1", "--family", "path:4", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["n"] == 4 and payload["k"] == 1
    assert read_lp(payload["lp"]).k == 1


def test_enumerate_chains_with_jobs(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--n", "5", "--delta", "3", "--chains", "--jobs", "2"
    )
    assert code == 0
    assert all("γ" in line for line in out.strip().splitlines())
