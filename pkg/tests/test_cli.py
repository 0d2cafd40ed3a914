"""Command-line interface: commands, exit codes, report streams."""

import json

from qcatalan.cli import SUITES, main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi(capsys):
    code, out, _ = run_cli(["phi", "6"], capsys)
    assert code == 0
    assert out.strip() == "1 - q + q^2"


def test_qbin_qcat_catalan_sum(capsys):
    code, out, _ = run_cli(["qbin", "4", "2"], capsys)
    assert code == 0 and out.strip() == "1 + q + 2*q^2 + q^3 + q^4"
    code, out, _ = run_cli(["qcat", "2"], capsys)
    assert code == 0 and out.strip() == "1 + q^2"
    code, out, _ = run_cli(["catalan-sum", "3"], capsys)
    assert code == 0 and out.strip() == "1 + q + q^2 + q^4"


def test_eval_poly(capsys):
    code, out, _ = run_cli(["eval", "qcat(2)", "--poly"], capsys)
    assert code == 0
    assert out.strip() == "1 + q^2"


def test_eval_root(capsys):
    code, out, _ = run_cli(["eval", "1/(1-q)", "--root", "3", "1"], capsys)
    assert code == 0
    assert out.strip() == "2/3 + 1/3*x (mod Phi_3)"


def test_eval_bindings(capsys):
    code, out, _ = run_cli(
        ["eval", "sum(k=0..n-1, q^k*qcat(k))", "--poly", "--bind", "n=3"], capsys
    )
    assert code == 0
    assert out.strip() == "1 + q + q^2 + q^4"


def test_eval_parse_error_exits_2(capsys):
    code, _, err = run_cli(["eval", "sum(k=", "--poly"], capsys)
    assert code == 2
    assert "syntax error" in err


def test_eval_domain_error_exits_2(capsys):
    code, _, err = run_cli(["eval", "1/(1-q^3)", "--root", "3", "1"], capsys)
    assert code == 2
    assert "error" in err


def test_chars(capsys):
    code, out, _ = run_cli(["chars", "--modulus", "5"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("chi[0]")
    assert "order=1" in lines[0]


def test_unknown_suite_exits_2(capsys):
    code, _, err = run_cli(["verify", "bogus"], capsys)
    assert code == 2
    assert "unknown suite" in err


def test_unknown_command_exits_2(capsys):
    assert run_cli(["frobnicate"], capsys)[0] == 2
    assert run_cli(["qbin", "not-a-number", "2"], capsys)[0] == 2


def test_float_mode_restriction(capsys):
    code, _, err = run_cli(["verify", "main-phi2", "--mode", "float"], capsys)
    assert code == 2
    assert "float mode" in err


def test_verify_text_output(capsys):
    code, out, _ = run_cli(["verify", "main-phi2", "--n-max", "12"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("total: 4 passed, 0 failed")
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_single_n(capsys):
    code, out, _ = run_cli(["verify", "tauraso-phi", "--n", "17"], capsys)
    assert code == 0
    assert "n=17" in out


def test_verify_json_stream(capsys):
    code, out, _ = run_cli(
        ["verify", "sawtooth", "--json", "--n-max", "4"], capsys
    )
    assert code == 0
    for line in out.strip().splitlines():
        obj = json.loads(line)
        assert set(obj) <= {"suite", "params", "status", "witness", "elapsed_ms"}
        assert {"suite", "params", "status", "elapsed_ms"} <= set(obj)
        assert obj["status"] == "pass"
        assert isinstance(obj["elapsed_ms"], (int, float))
        assert all(isinstance(v, int) for v in obj["params"].values())


def test_verify_out_file(tmp_path, capsys):
    path = tmp_path / "reports.jsonl"
    code, out, _ = run_cli(
        ["verify", "pfd", "--out", str(path)], capsys
    )
    assert code == 0
    content = path.read_text().strip().splitlines()
    assert len(content) == 3
    for line in content:
        assert json.loads(line)["status"] == "pass"


def test_verify_deterministic_reports(capsys):
    argv = ["verify", "extan", "lucas", "--json", "--n-max", "6"]
    code1, out1, _ = run_cli(argv, capsys)
    code2, out2, _ = run_cli(argv, capsys)
    assert code1 == code2 == 0

    def strip_elapsed(text):
        rows = []
        for line in text.strip().splitlines():
            obj = json.loads(line)
            obj.pop("elapsed_ms")
            rows.append(json.dumps(obj, sort_keys=True))
        return rows

    assert strip_elapsed(out1) == strip_elapsed(out2)


def test_verify_parallel_matches_serial(capsys):
    argv = ["verify", "sawtooth", "explicit", "--json", "--n-max", "5"]
    code1, serial, _ = run_cli(argv, capsys)
    code2, parallel, _ = run_cli(argv + ["--jobs", "3"], capsys)
    assert code1 == code2 == 0

    def strip_elapsed(text):
        rows = []
        for line in text.strip().splitlines():
            obj = json.loads(line)
            obj.pop("elapsed_ms")
            rows.append(json.dumps(obj, sort_keys=True))
        return rows

    assert strip_elapsed(serial) == strip_elapsed(parallel)


def test_every_listed_suite_runs_small(capsys):
    for suite in SUITES:
        argv = ["verify", suite, "--n-max", "4"]
        code, out, _ = run_cli(argv, capsys)
        assert code == 0, (suite, out)
        assert "failed" not in out or "0 failed" in out
