"""Command-line contract: exit codes, formats, determinism, schema."""

import json
from importlib import resources

import jsonschema
import pytest

from hypercount import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema():
    path = resources.files("hypercount") / "schemas" / "report.schema.json"
    return json.loads(path.read_text())


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def test_count_with_check_agrees(capsys):
    code, out, _ = run(capsys, "count", "--q", "73", "--family", "A",
                       "--d", "4", "--a", "1", "--b", "1", "--check")
    assert code == 0
    assert "match=true" in out


def test_count_rejects_even_and_composite_q(capsys):
    for q in ("74", "12", "2", "1"):
        code, _, err = run(capsys, "count", "--q", q, "--family", "A",
                           "--d", "4", "--a", "1", "--b", "1")
        assert code == 1
        assert f"{q} is not an odd prime power" in err


def test_count_rejects_congruence_violation(capsys):
    code, _, err = run(capsys, "count", "--q", "13", "--family", "A",
                       "--d", "4", "--a", "1", "--b", "1")
    assert code == 1
    assert "mod 24" in err


def test_count_usage_error_exits_one(capsys):
    code, _, _ = run(capsys, "count", "--q", "13", "--family", "Z",
                     "--d", "4", "--a", "1", "--b", "1")
    assert code == 1
    code, _, _ = run(capsys, "count", "--q", "13")
    assert code == 1
    code, _, _ = run(capsys, "nonsense")
    assert code == 1


def test_count_mismatch_exits_two(capsys, monkeypatch):
    monkeypatch.setattr(cli, "brute_count", lambda ctx, curve: -999)
    code, out, _ = run(capsys, "count", "--q", "13", "--family", "A",
                       "--d", "2", "--a", "1", "--b", "1", "--check")
    assert code == 2
    assert "match=false" in out


def test_count_brute_skips_congruence(capsys):
    code, out, _ = run(capsys, "count", "--q", "13", "--family", "A",
                       "--d", "4", "--a", "1", "--b", "1", "--brute")
    assert code == 0
    assert "method=brute_force" in out


def test_count_json_validates(capsys):
    code, out, _ = run(capsys, "count", "--q", "73", "--family", "B",
                       "--d", "4", "--a", "2", "--b", "3", "--check",
                       "--format", "json", "--backend", "float")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["match"] is True
    assert doc["result"]["method"] == "family_b_even"


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_csv_header_and_admissible_fields(capsys):
    code, out, err = run(capsys, "sweep", "--q-max", "50", "--d", "5",
                         "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q,d,family,a,b,n_thm,n_oracle,match,elapsed_us"
    rows = [ln.split(",") for ln in lines[1:]]
    assert rows and all(r[0] == "41" for r in rows)  # only q=41 qualifies
    assert {r[2] for r in rows} == {"A", "B"}
    assert all(r[7] == "true" for r in rows)
    assert all(r[8] == "0" for r in rows)  # no --timings: deterministic
    assert "mismatches=0" in err


def test_sweep_is_byte_identical_for_fixed_seed(capsys):
    args = ("sweep", "--q-max", "60", "--d", "2,3", "--samples", "5",
            "--seed", "7", "--format", "csv")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    _, out3, _ = run(capsys, *("sweep", "--q-max", "60", "--d", "2,3",
                               "--samples", "5", "--seed", "8",
                               "--format", "csv"))
    assert out3 != out1  # the seed really drives the sampling


def test_sweep_json_validates(capsys):
    code, out, _ = run(capsys, "sweep", "--q-max", "30", "--d", "2",
                       "--samples", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["summary"]["mismatches"] == 0
    assert doc["summary"]["rows"] == len(doc["rows"])
    # Exhaustive fallback below the sample budget: q=5 has only 16 pairs.
    q5 = [r for r in doc["rows"] if r["q"] == 5]
    assert len(q5) == 0 or all(r["match"] for r in q5)


def test_sweep_exhausts_small_grids(capsys):
    code, out, _ = run(capsys, "sweep", "--q-max", "5", "--d", "2",
                       "--samples", "100", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 2 * 16  # both families, all (a,b) in [1,4]^2


def test_sweep_mismatch_exits_two(capsys, monkeypatch):
    monkeypatch.setattr(cli, "brute_count", lambda ctx, curve: -1)
    code, _, err = run(capsys, "sweep", "--q-max", "13", "--d", "2",
                       "--samples", "2", "--format", "csv")
    assert code == 2
    assert "mismatches=0" not in err


def test_sweep_usage_errors(capsys):
    assert run(capsys, "sweep", "--q-max", "2")[0] == 1
    assert run(capsys, "sweep", "--q-max", "50", "--d", "1")[0] == 1
    assert run(capsys, "sweep", "--q-max", "50", "--d", "")[0] == 1
    assert run(capsys, "sweep", "--q-max", "50", "--samples", "0")[0] == 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_reports_exact_modulus_in_header(capsys):
    code, out, _ = run(capsys, "verify", "--q", "9", "--backend", "exact")
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("backend=exact")
    assert "ell[q=9]=26449" in header
    assert "FAIL" not in out


def test_verify_float_backend_passes(capsys):
    code, out, _ = run(capsys, "verify", "--q", "13", "--backend", "float")
    assert code == 0
    assert out.splitlines()[0] == "backend=float"


def test_verify_json_validates(capsys):
    code, out, _ = run(capsys, "verify", "--q", "13", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["summary"]["failures"] == 0
    assert doc["fields"][0]["q"] == 13
    assert doc["fields"][0]["decompositions"]


def test_verify_needs_a_field(capsys):
    assert run(capsys, "verify")[0] == 1


def test_verify_q_max_scans_prime_powers(capsys):
    code, out, _ = run(capsys, "verify", "--q-max", "10")
    assert code == 0
    qs = [ln for ln in out.splitlines() if ln.startswith("q=")]
    assert qs == ["q=3", "q=5", "q=7", "q=9"]


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def test_table_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("HYPERCOUNT_TABLE_BUDGET", "50")
    code, _, err = run(capsys, "count", "--q", "73", "--family", "A",
                       "--d", "4", "--a", "1", "--b", "1")
    assert code == 1
    assert "table budget" in err


def test_table_budget_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("HYPERCOUNT_TABLE_BUDGET", "50")
    code, _, _ = run(capsys, "count", "--q", "73", "--family", "A",
                     "--d", "4", "--a", "1", "--b", "1",
                     "--table-budget", "100")
    assert code == 0


def test_table_budget_cap_enforced(capsys):
    code, _, err = run(capsys, "count", "--q", "73", "--family", "A",
                       "--d", "4", "--a", "1", "--b", "1",
                       "--table-budget", str(2**21))
    assert code == 1
    assert "exceeds the hard cap" in err


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(backend="quantum")
    with pytest.raises(ValueError):
        cli.RunConfig(output_format="xml")
    with pytest.raises(ValueError):
        cli.RunConfig(tolerance=0.0)
