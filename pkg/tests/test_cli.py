import json

import pytest

from zonocount.cli import COMPARE_COLUMNS, main, run_self_test


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_json(capsys):
    code, out, err = run_cli(capsys, "count", "--dim", "2", "--n-range", "0:3")
    assert code == 0 and not err
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert [r["z_exact"] for r in doc["rows"]] == [1, 3, 10, 34]
    # emitted JSON round-trips
    assert json.loads(json.dumps(doc)) == doc


def test_count_cumulative_csv(capsys):
    code, out, _ = run_cli(capsys, "count", "--dim", "2", "--n", "1",
                           "--cumulative", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "dim,n,z_exact,ln_z"
    assert lines[1].startswith("2,1,6,")


def test_count_validation(capsys):
    code, _, err = run_cli(capsys, "count", "--dim", "2")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "count", "--dim", "2", "--n", "1", "--n-range", "1:2")
    assert code == 2
    code, _, err = run_cli(capsys, "count", "--dim", "2", "--n-range", "5:1")
    assert code == 2


def test_compare_header_schema_golden(capsys):
    code, out, _ = run_cli(capsys, "compare", "--dim", "2", "--n-range", "8:10",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(COMPARE_COLUMNS)
    assert len(lines) == 4
    rel_errs = [abs(float(line.split(",")[-1])) for line in lines[1:]]
    assert all(r < 0.05 for r in rel_errs)


def test_compare_dim_guard(capsys):
    code, _, err = run_cli(capsys, "compare", "--dim", "4", "--n-range", "1:2")
    assert code == 2 and "dim 2 or 3" in err


def test_moments_diameter(capsys):
    code, out, _ = run_cli(capsys, "moments", "--dim", "2", "--n", "1",
                           "--param", "diameter")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["mean"] == "4/3"
    assert row["count"] == 3


def test_moments_occurrence(capsys):
    code, out, _ = run_cli(capsys, "moments", "--dim", "2", "--n", "2",
                           "--param", "occurrence", "--v0", "1,1")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["mean"] == "2/5" and row["variance"] == "11/25"
    code, _, err = run_cli(capsys, "moments", "--dim", "2", "--n", "2",
                           "--param", "occurrence")
    assert code == 2 and "--v0" in err


def test_asympt_includes_both_assembly_routes(capsys):
    code, out, _ = run_cli(capsys, "asympt", "--dim", "2", "--n", "10000")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert abs(row["assembly_diff"]) < 1e-6
    assert row["beta"] == "-11/9"
    total = row["ln_alpha"] + row["beta_ln_n"] + row["q_value"] + row["icrit"]
    assert abs(total - row["ln_z_hat"]) < 1e-8


def test_icrit_with_zeros_file(capsys, tmp_path):
    zeros = tmp_path / "zeros.txt"
    zeros.write_text("14.134725141734693790\n21.022039638771555\n")
    code, out, _ = run_cli(capsys, "icrit", "--dim", "2", "--n", "1e6",
                           "--zeros", str(zeros), "--m", "2")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["m"] == 2
    assert abs(row["icrit"]) > 0
    assert abs(row["frequency"] - 4.7115750472) < 1e-6


def test_icrit_bad_zeros_file(capsys, tmp_path):
    zeros = tmp_path / "zeros.txt"
    zeros.write_text("10.0\n")
    code, _, err = run_cli(capsys, "icrit", "--dim", "2", "--n", "1e6",
                           "--zeros", str(zeros))
    assert code == 2 and "zeta" in err


def test_sample_csv_deterministic(capsys):
    args = ("sample", "--dim", "2", "--n", "100", "--samples", "5", "--seed", "9",
            "--track", "1,1:0")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "seed,direction_count,endpoint_0,endpoint_1,omega_1_1_c0"
    assert len(lines) == 6


def test_sample_polygon_out(capsys, tmp_path):
    poly = tmp_path / "poly.csv"
    code, _, _ = run_cli(capsys, "sample", "--dim", "2", "--n", "50",
                         "--samples", "1", "--seed", "4", "--polygon-out", str(poly))
    assert code == 0
    assert poly.read_text().startswith("x,y")


def test_sample_theta_xor_n(capsys):
    code, _, err = run_cli(capsys, "sample", "--dim", "2", "--samples", "1")
    assert code == 2
    code, _, err = run_cli(capsys, "sample", "--dim", "2", "--n", "10",
                           "--theta", "0.5")
    assert code == 2


def test_output_file(capsys, tmp_path):
    out_path = tmp_path / "rows.json"
    code, out, _ = run_cli(capsys, "count", "--dim", "1", "--n", "7",
                           "--output", str(out_path))
    assert code == 0 and out == ""
    doc = json.loads(out_path.read_text())
    assert doc["rows"][0]["z_exact"] == 1


def test_memory_guard_surfaces_as_error(capsys, monkeypatch):
    monkeypatch.setenv("ZONOCOUNT_MEMORY_BUDGET", "1000")
    code, _, err = run_cli(capsys, "count", "--dim", "2", "--n", "50")
    assert code == 2 and "budget" in err


def test_unknown_flag_is_hard_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--dim", "2", "--n", "1", "--frobnicate"])
    assert exc.value.code == 2


def test_subcommand_required(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_self_test_passes(capsys):
    assert run_self_test() == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_big_integers_emitted_as_strings(capsys):
    code, out, _ = run_cli(capsys, "count", "--dim", "1", "--n", "2")
    assert code == 0  # small values stay numeric
    assert json.loads(out)["rows"][0]["z_exact"] == 1
    from zonocount.cli import _fmt

    assert _fmt(2 ** 60) == str(2 ** 60)
    assert _fmt(10) == 10
    from fractions import Fraction

    assert _fmt(Fraction(4, 3)) == "4/3"
