"""CLI contract: exit codes, output shapes, determinism."""

import json

import pytest

from dedekind.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- sum ---------------------------------------------------------------------


def test_sum_classical(capsys):
    code, out, _ = run(capsys, "sum", "--q1", "1", "--q2", "1", "--a", "1", "--c", "3")
    assert code == 0
    assert out.strip() == "0.0555556"  # 1/18


def test_sum_formulas_agree(capsys):
    args = ["sum", "--q1", "3", "--q2", "3", "--chi1", "1", "--chi2", "1", "--a", "2", "--c", "9"]
    outputs = {}
    for formula in ("direct", "b1chi", "single", "cotangent"):
        code, out, _ = run(capsys, *args, "--formula", formula)
        assert code == 0
        outputs[formula] = out.strip()
    assert len(set(outputs.values())) == 1


def test_sum_gcd_violation_exit_3(capsys):
    code, _, err = run(capsys, "sum", "--q1", "3", "--q2", "3", "--a", "3", "--c", "9")
    assert code == 3
    assert "gcd" in err


def test_sum_bad_selector_exit_2(capsys):
    code, _, err = run(capsys, "sum", "--q1", "3", "--q2", "3", "--chi1", "9", "--a", "1", "--c", "9")
    assert code == 2
    assert "index" in err


def test_sum_bad_c_exit_2(capsys):
    code, _, _ = run(capsys, "sum", "--q1", "3", "--q2", "3", "--a", "1", "--c", "10")
    assert code == 2


def test_sum_all_json_fifteen_digits(capsys):
    code, out, _ = run(
        capsys, "sum", "--q1", "3", "--q2", "3", "--a", "all", "--c", "9", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["context"]["c"] == 9
    assert [v["a"] for v in payload["values"]] == [1, 2, 4, 5, 7, 8]
    two_thirds = [v["re"] for v in payload["values"] if v["a"] == 2][0]
    assert two_thirds == float(f"{2/3:.15g}")


def test_sum_csv(capsys):
    code, out, _ = run(capsys, "sum", "--q1", "1", "--q2", "1", "--a", "all", "--c", "5", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "a,re,im"
    assert len(lines) == 5


# -- chars -------------------------------------------------------------------


def test_chars_q5(capsys):
    code, out, _ = run(capsys, "chars", "--q", "5")
    assert code == 0
    assert len([l for l in out.split("\n") if l.strip().startswith("[")]) == 4


def test_chars_q12_conductors(capsys):
    code, out, _ = run(capsys, "chars", "--q", "12", "--format", "json")
    payload = json.loads(out)
    assert sorted(r["conductor"] for r in payload["characters"]) == [1, 3, 4, 12]


def test_chars_q8_primitive_count(capsys):
    code, out, _ = run(capsys, "chars", "--q", "8", "--format", "csv")
    rows = out.strip().split("\n")[1:]
    assert sum(1 for r in rows if r.endswith(",1")) == 2  # phi*(8) = 2


# -- verify ------------------------------------------------------------------


def test_verify_walum_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "walum", "--pmax", "31")
    assert code == 0
    assert "0 failures: pass" in out


def test_verify_moment_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "moment", "--q1", "3", "--q2", "3", "--cmax", "36")
    assert code == 0
    assert "pass" in out


def test_verify_failure_exit_1(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "walum", "--pmax", "11", "--tol", "1e-30"
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_empty_pair_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--suite", "moment", "--q1", "3", "--q2", "2")
    assert code == 2


def test_verify_crossed_deterministic(capsys):
    args = ["verify", "--suite", "crossed", "--q1", "3", "--q2", "3", "--c", "9", "--trials", "20", "--seed", "7"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_symmetry_and_counts(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "symmetry", "--q1", "3", "--q2", "3", "--c", "9")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--nmax", "40")
    assert code == 0


def test_verify_bad_tol_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "walum", "--tol", "-1")
    assert code == 2


# -- sweep -------------------------------------------------------------------


def test_sweep_stdout_and_slope(capsys):
    code, out, err = run(capsys, "sweep", "--q1", "3", "--q2", "3", "--cmax", "54")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "c,q1,q2,moment,ratio,slope_running"
    assert len(lines) == 7
    assert all(float(l.split(",")[4]) > 0 for l in lines[1:])
    assert err.startswith("slope:")


def test_sweep_empty_header_only(capsys):
    code, out, _ = run(capsys, "sweep", "--q1", "3", "--q2", "3", "--cmax", "5")
    assert code == 0
    assert out == "c,q1,q2,moment,ratio,slope_running\n"


def test_sweep_to_file(tmp_path, capsys):
    target = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--q1", "3", "--q2", "3", "--cmax", "27", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("c,q1,q2,moment,ratio,slope_running")


def test_sweep_deterministic(capsys):
    args = ["sweep", "--q1", "3", "--q2", "3", "--cmax", "45"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


# -- argparse-level errors -----------------------------------------------------


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_required_argument_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["chars"])
    assert exc.value.code == 2
