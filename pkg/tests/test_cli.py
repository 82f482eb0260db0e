import json

import pytest

from cgslice import cli, reproduce, signatures
from cgslice.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("argv, sigma", [
    (("sig", "trefoil_r", "2", "1"), -2),
    (("sig", "unknot", "7", "3"), 0),
    (("sig", "fig8", "2", "1"), 0),
])
def test_sig(capsys, argv, sigma):
    code, data = run_json(capsys, *argv)
    assert code == 0 and data["result"]["sigma"] == sigma


@pytest.mark.parametrize("knot, verdict", [("fig8", "Obstructed"), ("trefoil_r", "NotObstructed"),
                                           ("unknot", "Inapplicable")])
def test_moebius(capsys, knot, verdict):
    code, data = run_json(capsys, "moebius", knot)
    assert code == 0 and data["result"]["verdict"] == verdict


@pytest.mark.parametrize("w, f, group", [("5", "-10", "Z/5 + Z/5"), ("5", "1", "Z/25"), ("1", "-2", "0")])
def test_h1(capsys, w, f, group):
    code, data = run_json(capsys, "h1", w, f)
    assert code == 0 and data["result"]["group"] == group


def test_h1_matrix_file(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text("[[5, 5], [5, 0]]")
    code, data = run_json(capsys, "h1", "--matrix", str(p))
    assert code == 0 and data["result"]["factors"] == [5, 5]
    p.write_text('[[1, "x"]]')
    assert run(capsys, "h1", "--matrix", str(p))[0] == 2


def test_fbound(capsys):
    code, data = run_json(capsys, "fbound", "5", "-10", "5")
    assert code == 0 and data["result"]["holds"] is True
    assert run(capsys, "fbound", "0", "1", "5")[0] == 2


def test_nonslice_search(capsys):
    code, data = run_json(capsys, "nonslice", "5", "--search")
    assert code == 0
    cert = data["result"]["certificate"]
    assert cert["d"] == 5 and cert["sigma1"] > 10 and cert["sigma2"] < -10
    assert data["result"]["verified"] is True


@pytest.mark.parametrize("argv", [("nonslice", "1", "trefoil_r"), ("nonslice", "5", "unknot")])
def test_nonslice_empty(capsys, argv):
    code, data = run_json(capsys, *argv)
    assert code == 4 and data["result"]["certificate"] is None


def test_nonslice_inapplicable_search(capsys):
    code, data = run_json(capsys, "nonslice", "3", "--search")
    assert code == 2 and "inapplicable" in data["result"]


@pytest.mark.parametrize("argv", [
    ("sig", "nosuchknot", "2", "1"),
    ("sig", "trefoil_r", "5", "0"),
    ("sig", "trefoil_r", "x", "1"),
    ("nonslice", "0", "trefoil_r"),
    ("nonslice", "5"),
    ("--lambda-range", "3:1", "nonslice", "5", "unknot"),
    ("--threads", "0", "sig", "unknot", "2", "1"),
])
def test_invalid_input(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_flags_after_subcommand(capsys):
    code, data = run_json(capsys, "nonslice", "5", "unknot", "--lambda-range=-1:1")
    assert data["params"]["lambdas"] == [-1, 1]
    code, out, _ = run(capsys, "sig", "trefoil_r", "2", "1", "--json")
    assert json.loads(out)["result"]["sigma"] == -2


def test_json_report_round_trips(capsys):
    _, out, _ = run(capsys, "--json", "nonslice", "5", "sum:12*t2k:5:r+18*t2k:3:l")
    r = Report.from_json(out)
    assert r.to_json() + "\n" == out


def test_reproduce_fails_on_sign_flip(monkeypatch):
    real = signatures.levine_tristram_form
    monkeypatch.setattr(signatures, "levine_tristram_form", lambda A, w: -real(A, w))
    signatures._block_pivots.cache_clear()
    try:
        ctx = reproduce.Context()
        ok, detail = reproduce.check_sign_convention(ctx)
        assert not ok and "= 2" in detail
        ok, _ = reproduce.check_candidate_w5(ctx)
        assert not ok
    finally:
        signatures._block_pivots.cache_clear()


def test_reproduce_exit_code_on_failure(monkeypatch, capsys):
    monkeypatch.setattr(reproduce, "CHECKS", [("forced", lambda ctx: (False, "x")),
                                              ("fine", reproduce.check_framing)])
    code, out, _ = run(capsys, "reproduce")
    assert code == 3
    assert "[FAIL] forced" in out and "[PASS] fine" in out and "1/2 checks passed" in out
