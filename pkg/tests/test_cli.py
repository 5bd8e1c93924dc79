import json

import pytest

from luspec import cli


def run(capsys, args):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_gamma_stdout(capsys):
    code, out, _ = run(capsys, ["build", "--q", "3", "--graph", "gamma",
                                "--no-timestamp"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# graph=GAMMA4 q=3 vertices=81 edges=243 indexing=base-q"
    assert len(lines) == 1 + 243


def test_build_d4_files(tmp_path, capsys):
    out = tmp_path / "d42.edges"
    code, _, _ = run(capsys, ["build", "--q", "2", "--graph", "d4",
                              "--out", str(out), "--no-timestamp"])
    assert code == 0
    text = out.read_text().splitlines()
    assert text[0].startswith("# graph=D4 q=2 vertices=32 edges=32")
    coords = json.loads((tmp_path / "d42.edges.coords.json").read_text())
    assert len(coords["coords"]) == 32


def test_build_rejects_non_prime_power(capsys):
    code, _, err = run(capsys, ["build", "--q", "1"])
    assert code == 2 and "prime power" in err
    code, _, err = run(capsys, ["build", "--q", "12"])
    assert code == 2


def test_spectrum_closed_q5(capsys):
    code, out, _ = run(capsys, ["spectrum", "--q", "5", "--source", "closed",
                                "--no-timestamp"])
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 625
    mults = {e["value_exact"]: e["multiplicity"] for e in doc["entries"]}
    assert mults["20"] == 1 and mults["0"] == 220 and mults["-5"] == 164


def test_spectrum_numeric_q3(capsys):
    code, out, _ = run(capsys, ["spectrum", "--q", "3", "--source", "numeric",
                                "--format", "csv", "--no-timestamp"])
    assert code == 0
    assert len(out.splitlines()) == 81


def test_spectrum_rejects_q6(capsys):
    code, _, err = run(capsys, ["spectrum", "--q", "6", "--source", "closed"])
    assert code == 2 and "prime power" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, ["verify", "--q", "2,3", "--no-timestamp"])
    assert code == 0
    assert "all checks passed" in out
    assert "[FAIL]" not in out


def test_verify_empty_list(capsys):
    code, _, err = run(capsys, ["verify", "--q", " "])
    assert code == 2


def test_epsilons_q5_shows_merge(capsys):
    import csv
    import io
    code, out, _ = run(capsys, ["epsilons", "--q", "5", "--no-timestamp"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["family", "a", "c", "eps_exact", "eps_float",
                             "eps_sq_minus_q", "weil_margin", "fiber_profile"]
    # c = 2 and c = 3 rows both collapse to eigenvalue shift 0
    merged = [r for r in rows if r["eps_sq_minus_q"] == "0"]
    assert len(merged) == 2
    assert any(r["fiber_profile"] == "1|0|2|2|0" for r in merged)


def test_epsilons_q13_contains_extreme_sum(capsys):
    import csv
    import io
    code, out, _ = run(capsys, ["epsilons", "--q", "13", "--no-timestamp"])
    assert code == 0
    rows = [r for r in csv.DictReader(io.StringIO(out))
            if r["a"] == "4" and r["c"] == "0"]
    assert rows and rows[0]["eps_float"] == "-6.953280227"


def test_epsilons_rejects_even_q(capsys):
    code, _, err = run(capsys, ["epsilons", "--q", "8"])
    assert code == 2 and "odd" in err


def test_ramanujan_q13(capsys):
    code, out, _ = run(capsys, ["ramanujan", "--q", "13", "--no-timestamp"])
    assert code == 0
    assert "NOT Ramanujan (margin -0.0251)" in out


def test_ramanujan_json_multi(capsys):
    code, out, _ = run(capsys, ["ramanujan", "--q", "19,37", "--format",
                                "json", "--no-timestamp"])
    assert code == 0
    docs = json.loads(out)
    assert [d["ramanujan"] for d in docs] == [False, False]


def test_usage_errors_exit_2(capsys):
    assert cli.main(["spectrum"]) == 2          # missing --q
    assert cli.main(["no-such-command"]) == 2
    code, _, err = run(capsys, ["build", "--q", "2,3"])
    assert code == 2 and "single q" in err


def test_deterministic_output(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for path in (a, b):
        assert cli.main(["spectrum", "--q", "5", "--out", str(path),
                         "--no-timestamp"]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()

    c, d = tmp_path / "c", tmp_path / "d"
    for path in (c, d):
        assert cli.main(["build", "--q", "3", "--out", str(path),
                         "--no-timestamp"]) == 0
    capsys.readouterr()
    assert c.read_bytes() == d.read_bytes()


def test_max_dense_env_var(monkeypatch, capsys):
    monkeypatch.setenv("LUSPEC_MAX_DENSE_N", "10")
    code, _, err = run(capsys, ["spectrum", "--q", "2", "--source", "numeric"])
    assert code == 2 and "budget" in err
