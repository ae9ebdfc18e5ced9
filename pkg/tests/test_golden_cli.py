import json
import os
import subprocess
import sys

import pytest

from minorbit.cli import default_golden_path, emit
from minorbit.golden import compare_golden, load_golden


def run_cli(args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([sys.executable, "-m", "minorbit.cli", *args],
                          capture_output=True, env=e)


def test_emit_json_empty():
    assert emit([], "json") == b'{"rows":[]}\n'


def test_emit_csv_header():
    out = emit([], "csv").decode()
    assert out.splitlines()[0] == \
        "form,phi,finite_type,mot,span,verdict,expected,match"


def test_emit_table_alignment():
    rows = [{"form": "FII", "phi": (3,), "finite_type": True, "mot": False,
             "span": False, "verdict": False, "expected": False,
             "match": True, "levi": "x"}]
    text = emit(rows, "table").decode().splitlines()
    assert text[0].startswith("form")
    assert "FII" in text[1]


def test_emit_unknown_format():
    with pytest.raises(SystemExit):
        emit([], "yaml")


def test_cli_golden_pass_and_determinism():
    r1 = run_cli(["--form", "FII", "--format", "json"])
    r2 = run_cli(["--form", "FII", "--format", "json"])
    assert r1.returncode == 0, r1.stderr
    assert r1.stdout == r2.stdout


def test_cli_single_phi_details():
    r = run_cli(["--form", "FII", "--phi", "3", "--format", "json"])
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert len(doc["rows"]) == 1
    assert doc["rows"][0]["verdict"] is False
    det = doc["details"][0]
    assert det["k_phi"] and det["span_dims"]
    assert det["mot_details"][0]["toward_minus"]["certificate"][
        "kind"] == "coefficient-bound"


def test_cli_label_with_params():
    r = run_cli(["--form", "AIIIa", "--p", "2", "--q", "3", "--dump-form"])
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["name"] == "su(2,3)"


def test_cli_usage_errors():
    assert run_cli([]).returncode == 2
    assert run_cli(["--form", "nonsense"]).returncode == 2
    assert run_cli(["--form", "AIIIa"]).returncode == 2  # ambiguous
    r = run_cli(["--form", "su(2,3)", "--phi", "9"])
    assert r.returncode == 2


def test_cli_large_gate():
    r = run_cli(["--form", "EIX", "--phi", "1"])
    assert r.returncode == 2
    assert b"--allow-large" in r.stderr


def test_cli_mismatch_exit_code(tmp_path):
    gold = load_golden(default_golden_path())
    doc = {"version": 1, "rows": [dict(gold["FII"])]}
    doc["rows"][0]["predicates"] = [{"kind": "always"}]
    p = tmp_path / "g.json"
    p.write_text(json.dumps(doc))
    r = run_cli(["--form", "FII", "--golden", str(p)])
    assert r.returncode == 1


def test_cli_missing_coverage(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"version": 1, "rows": []}))
    r = run_cli(["--form", "sl(2,R)", "--golden", str(p)])
    assert r.returncode == 2


def test_cli_threads_env():
    r = run_cli(["--form", "sl(3,R)", "--format", "csv"],
                env={"CONCAVITY_THREADS": "2"})
    assert r.returncode == 0
    r1 = run_cli(["--form", "sl(3,R)", "--format", "csv"])
    assert r.stdout == r1.stdout


def test_cli_gauge_seed_same_verdicts():
    base = json.loads(run_cli(["--form", "sp(1,2)"]).stdout)
    for seed in ("1", "2", "3"):
        doc = json.loads(run_cli(["--form", "sp(1,2)",
                                  "--gauge-seed", seed]).stdout)
        assert [r["verdict"] for r in doc["rows"]] == \
            [r["verdict"] for r in base["rows"]]


def test_cli_check_mot_only():
    import csv
    import io
    r = run_cli(["--form", "sp(1,2)", "--check", "mot", "--no-golden",
                 "--format", "csv"])
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout.decode())))
    assert rows[0][4] == "span"
    assert all(row[4] == "false" for row in rows[1:])  # span engine off
    assert all(row[0] == "sp(1,2)" for row in rows[1:])


def test_compare_golden_api():
    gold = load_golden(default_golden_path())
    rows = [
        {"form": "FII", "phi": [3], "finite_type": True, "verdict": False},
        {"form": "FII", "phi": [1], "finite_type": True, "verdict": True},
        {"form": "FII", "phi": [], "finite_type": True, "verdict": True},
        {"form": "FII", "phi": [4], "finite_type": False, "verdict": False},
    ]
    diff = compare_golden(rows, gold)
    assert not diff["mismatches"]
    assert diff["forms"]["FII"]["pass"]
    assert diff["parity_rows"] == 2
    assert rows[2]["match"] is None and rows[3]["match"] is None
    with pytest.raises(KeyError):
        compare_golden([{"form": "zz", "phi": [], "finite_type": True,
                         "verdict": True}], gold)


def test_golden_table_covers_catalog():
    from minorbit.realform import catalog
    gold = load_golden(default_golden_path())
    for e in catalog(8):
        assert e.name in gold


def test_enumerate_form_library_api():
    from minorbit.cli import enumerate_form
    rows = enumerate_form("sl(2,R)")
    assert len(rows) == 2
    assert all(r["form"] == "sl(2,R)" for r in rows)
    with pytest.raises(KeyError):
        enumerate_form("not-a-form")
    one = enumerate_form("FII", phis=[{3}])
    assert len(one) == 1 and one[0]["verdict"] is False


def test_structure_constant_dump_and_signs():
    from minorbit.crflag import get_context
    from minorbit.realform import basis_conjugation_signs
    ctx = get_context("su(1,2)")
    doc = json.loads(ctx.sc.ntable_json())
    assert doc["n"]
    for a, b, v in doc["n"]:
        assert isinstance(v, int) and v != 0
    signs = basis_conjugation_signs(ctx.conj)
    from minorbit.gaussq import QQi
    assert signs[(1, 1)] == QQi(1)          # the real root
    assert signs[(1, 0)] in (QQi(0, 1), QQi(0, -1))  # complex needs +-i
