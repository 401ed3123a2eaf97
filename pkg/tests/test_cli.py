"""CLI contract tests: rendering, formats, exit codes, round-trips."""

import json
import random
import subprocess
import sys

import jordanblocks.verify as verify_mod
from jordanblocks.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def test_compute_text_output(capsys):
    code, out, _ = run_cli(capsys, "compute", "--m", "3", "--n", "6", "--p", "2")
    assert code == 0
    assert out.splitlines() == [
        "m=3 n=6 p=2",
        "composition: 1+1+1",
        "partition: 8 6 4",
        "multiplicity form: 1*8 1*6 1*4",
        "standard: true",
    ]


def test_compute_trivial_case(capsys):
    code, out, _ = run_cli(capsys, "compute", "--m", "1", "--n", "5", "--p", "3")
    assert code == 0
    assert "partition: 5" in out
    assert "standard: true" in out


def test_compute_multiplicity_case(capsys):
    code, out, _ = run_cli(capsys, "compute", "--m", "2", "--n", "4", "--p", "2")
    assert code == 0
    assert "composition: 2" in out
    assert "partition: 4 4" in out
    assert "standard: false" in out


def test_compute_json_document(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--m", "3", "--n", "6", "--p", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "m": 3,
        "n": 6,
        "p": 2,
        "composition": [1, 1, 1],
        "partition": [8, 6, 4],
        "multiplicity_form": [[1, 8], [1, 6], [1, 4]],
        "standard": True,
    }


def test_compute_csv_fixture(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--m", "3", "--n", "6", "--p", "2", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == [
        "m,n,p,composition,partition,standard",
        '3,6,2,"1+1+1","8 6 4",true',
    ]


def test_compute_normalizes_argument_order(capsys):
    _, swapped, _ = run_cli(capsys, "compute", "--m", "6", "--n", "3", "--p", "2")
    _, straight, _ = run_cli(capsys, "compute", "--m", "3", "--n", "6", "--p", "2")
    assert swapped == straight


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def test_table_contains_golden_rows(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--m-max", "3", "--n-max", "7", "--p", "2", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,n,p,composition,partition,standard"
    assert '3,4,2,"3","4 4 4",false' in lines
    assert '3,5,2,"1+2","7 4 4",false' in lines
    assert '3,6,2,"1+1+1","8 6 4",true' in lines
    assert '3,7,2,"2+1","8 8 5",false' in lines


def test_table_small_all_standard(capsys):
    code, out, _ = run_cli(capsys, "table", "--m-max", "1", "--n-max", "3", "--p", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert all("standard=true" in line for line in lines)


def test_table_row_count_and_order(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--m-max", "4", "--n-max", "6", "--p", "3", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == sum(6 - m + 1 for m in range(1, 5))
    keys = [(r["m"], r["n"], r["p"]) for r in rows]
    assert keys == sorted(keys)


def test_table_rejects_bad_bounds(capsys):
    code, _, err = run_cli(capsys, "table", "--m-max", "0", "--n-max", "4", "--p", "2")
    assert code == 2
    assert "bounds" in err


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def test_oracle_text_output(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--m", "2", "--n", "2", "--p", "2")
    assert code == 0
    assert "partition: 2 2" in out
    assert "ranks: 4 2 0" in out


def test_oracle_characteristic_three(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--m", "2", "--n", "2", "--p", "3")
    assert code == 0
    assert "partition: 3 1" in out


def test_oracle_trivial(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--m", "1", "--n", "1", "--p", "2")
    assert code == 0
    assert "partition: 1" in out
    assert "ranks: 1 0" in out


def test_oracle_size_bound_exit(capsys):
    code, _, err = run_cli(capsys, "oracle", "--m", "150", "--n", "80", "--p", "2")
    assert code == 2
    assert "size bound 10000" in err


def test_compute_and_oracle_print_the_same_partition(capsys):
    for m, n, p in [(2, 4, 2), (3, 5, 3), (4, 6, 5), (5, 5, 2)]:
        _, out_c, _ = run_cli(
            capsys, "compute", "--m", str(m), "--n", str(n), "--p", str(p), "--format", "json"
        )
        _, out_o, _ = run_cli(
            capsys, "oracle", "--m", str(m), "--n", str(n), "--p", str(p), "--format", "json"
        )
        assert json.loads(out_c)["partition"] == json.loads(out_o)["partition"]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_passing_suite_exits_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "theorem1", "--m-max", "8", "--n-max", "32"
    )
    assert code == 0
    assert "PASS" in out


def test_verify_json_report(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--suite", "oracle", "--m-max", "6", "--n-max", "6",
        "--p", "2", "--p", "3", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"suite", "cases_checked", "failures", "elapsed_ms"}
    assert doc["cases_checked"] == 2 * 21
    assert doc["failures"] == []


def test_verify_failing_suite_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(verify_mod, "standard_predicate_p2", lambda m, n: False)
    code, out, err = run_cli(
        capsys, "verify", "--suite", "theorem1", "--m-max", "4", "--n-max", "8"
    )
    assert code == 1
    assert "FAIL" in out
    assert "m=1 n=1" in err


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--suite", "periodicity", "--m", "3", "--t", "2", "--p", "2",
        "--n-max", "20", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "suite,cases_checked,failures,elapsed_ms,passed"
    assert lines[1].startswith("periodicity,18,0,")
    assert lines[1].endswith(",true")


def test_verify_missing_arguments_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "periodicity", "--n-max", "20")
    assert code == 2
    assert "--m and --t" in err


# ---------------------------------------------------------------------------
# Exit codes and usage errors
# ---------------------------------------------------------------------------

def test_composite_p_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "compute", "--m", "3", "--n", "6", "--p", "4")
    assert code == 2
    assert "not prime" in err


def test_nonpositive_m_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "compute", "--m", "0", "--n", "6", "--p", "2")
    assert code == 2


def test_unknown_suite_is_usage_error(capsys):
    code = main(["verify", "--suite", "theorem9"])
    capsys.readouterr()
    assert code == 2


def test_missing_subcommand_is_usage_error(capsys):
    code = main([])
    capsys.readouterr()
    assert code == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "jordanblocks", "compute", "--m", "3", "--n", "6", "--p", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "composition: 1+1+1" in proc.stdout


# ---------------------------------------------------------------------------
# JSON round-trip against text output
# ---------------------------------------------------------------------------

def test_json_round_trips_to_text_rendering(capsys):
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 200)
        m = rng.randint(1, n)
        p = rng.choice([2, 3, 5, 7])
        args = ["compute", "--m", str(m), "--n", str(n), "--p", str(p)]
        _, text_out, _ = run_cli(capsys, *args)
        _, json_out, _ = run_cli(capsys, *args, "--format", "json")
        doc = json.loads(json_out)
        text = {
            line.split(": ")[0]: line.split(": ")[1]
            for line in text_out.splitlines()[1:]
        }
        assert text["composition"] == "+".join(str(x) for x in doc["composition"])
        assert text["partition"] == " ".join(str(x) for x in doc["partition"])
        assert text["standard"] == ("true" if doc["standard"] else "false")
