"""Command-line surface: formats, exit codes, determinism."""

import json

import pytest

from tanprimes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_window_from_index(capsys):
    code, out, _ = run(capsys, "window", "--k", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["n_star"] == 130913
    assert obj["k"] == 3
    assert "solve_residual" not in obj


def test_window_from_target(capsys):
    code, out, _ = run(capsys, "window", "--N", "130913")
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 3
    assert obj["solve_residual"] < 1e-6


def test_window_unsolvable_target(capsys):
    code, _, err = run(capsys, "window", "--N", "130914")
    assert code == 3
    assert "error" in err


def test_selector_required_and_exclusive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["window"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["window", "--k", "2", "--N", "99"])
    assert exc.value.code == 2


def test_count_csv(capsys, table2, block2, w2, pairmap2):
    from tanprimes import count_ternary_mitm

    rep = count_ternary_mitm(table2, block2.logs, w2.n_star, pair_map=pairmap2, w=w2)
    code, out, _ = run(capsys, "count", "--k", "2", "--c", "1.05", "--theta", "2.0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,count,weighted"
    assert lines[1] == f"{w2.n_star},{rep.count},{rep.weighted:.12g}"


def test_count_json_offset(capsys, w2):
    code, out, _ = run(
        capsys, "count", "--k", "2", "--c", "1.05", "--theta", "2.0",
        "--offset", "-7", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["N"] == w2.n_star - 7
    assert obj["method"] == "mitm"
    assert obj["window"]["k"] == 2


def test_scan_band_rows(capsys, w2):
    code, out, _ = run(
        capsys, "scan", "--k", "2", "--c", "1.05", "--theta", "2.0", "--band", "-2:2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,count,weighted"
    assert len(lines) == 6
    assert lines[1].startswith(str(w2.n_star - 2) + ",")


def test_compare_deterministic_across_threads(capsys, monkeypatch):
    args = ["compare", "--k", "2", "--c", "1.05", "--theta", "2.0", "--band", "-3:3"]
    code, first, _ = run(capsys, *args)
    assert code == 0
    assert first.splitlines()[0] == "N,count,weighted,main_term,ratio"
    code, second, _ = run(capsys, *args)
    assert second == first
    monkeypatch.setenv("TANPRIMES_THREADS", "3")
    code, third, _ = run(capsys, *args)
    assert code == 0
    assert third == first


def test_binary_pair(capsys, w3):
    code, out, _ = run(capsys, "binary", "--k", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["N"] == w3.n_star
    assert obj["pair"] == [27893, 34877]


def test_values_csv(capsys):
    code, out, _ = run(capsys, "values", "--k", "2", "--c", "1.05", "--theta", "2.0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,f,frac,certified"
    assert len(lines) == 64
    n, f, frac, cert = lines[1].split(",")
    assert int(n) > 1174 and int(f) > 0 and cert in ("0", "1")
    assert len(frac.split(".")[1]) == 12


def test_classical_row(capsys):
    code, out, _ = run(capsys, "classical", "--c", "1.02", "--target", "2000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,count,weighted,main_term,ratio"
    cells = lines[1].split(",")
    assert cells[0] == "2000" and cells[1] == "5811"
    assert float(cells[4]) == pytest.approx(0.8554635161, abs=1e-9)


def test_expsum_integer_grid(capsys):
    code, out, _ = run(
        capsys, "expsum", "--k", "2", "--c", "1.05", "--theta", "2.0",
        "--kind", "integer", "--grid", "8",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "alpha,re,im,abs"
    assert len(lines) == 9
    assert lines[1].startswith("-0.5,")


def test_expsum_json_smooth(capsys):
    code, out, _ = run(
        capsys, "expsum", "--k", "2", "--c", "1.05", "--theta", "2.0",
        "--kind", "smooth", "--grid", "4", "--format", "json",
    )
    obj = json.loads(out)
    assert obj["kind"] == "smooth"
    assert len(obj["rows"]) == 4
    for row in obj["rows"]:
        assert row["abs"] == pytest.approx(abs(complex(row["re"], row["im"])), rel=1e-12)


def test_exponents_output(capsys):
    code, out, _ = run(capsys, "exponents")
    assert code == 0
    assert out.splitlines()[0] == "step,exponent,at_boundary,note"
    assert "admissible_c" in out
    code, out, _ = run(capsys, "exponents", "--format", "json")
    obj = json.loads(out)
    assert obj["admissible_c"] == "23/21"
    assert obj["prior_bounds_sorted"][0] == "17/16"
    assert len(obj["chain"]) == 8


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "4/4 checks passed" in out
    assert out.count("PASS") == 4


def test_bad_band_usage(capsys):
    code, _, err = run(capsys, "scan", "--k", "2", "--band", "9:1")
    assert code == 2
    assert "usage error" in err
    code, _, err = run(capsys, "scan", "--k", "2", "--band", "abc")
    assert code == 2


def test_resource_guard_exit(capsys):
    code, _, err = run(
        capsys, "scan", "--k", "2", "--c", "1.05", "--theta", "2.0",
        "--band", "-600000:600001",
    )
    assert code == 4
    assert "resource guard" in err


def test_bad_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("TANPRIMES_THREADS", "many")
    code, _, err = run(capsys, "window", "--k", "2", "--c", "1.05", "--theta", "2.0")
    assert code == 2


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "w.json"
    code, out, _ = run(capsys, "window", "--k", "2", "--c", "1.05", "--theta", "2.0",
                       "--out", str(dest))
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text())["k"] == 2


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "window", "--k", "2", "--c", "0.5")
    assert code == 3
