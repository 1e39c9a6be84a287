"""Smoke tests for the python module and the CLI's JSON contract."""

import json
import os
import subprocess

import jsonschema
import pytest

import etale

CLI = os.environ.get("ETALE_CLI")
SCHEMA_PATH = os.environ.get(
    "ETALE_SCHEMA",
    os.path.join(os.path.dirname(__file__), "..", "..", "docs", "schema.json"),
)

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)


def test_table():
    rows = etale.table()["rows"]
    assert [r["p"] for r in rows] == [3, 5, 7, 11, 11, 13, 17, 17]
    assert all(r["verified"] for r in rows)
    assert rows[2]["j"] == "6"
    assert rows[2]["cover"] == "(x^2 + 4)*y"


def test_ss_j():
    assert etale.ss_j(11) == ["0", "1"]
    assert etale.ss_j(13) == ["5"]


def test_cover_and_mindeg():
    cert = etale.cover(7, "x^3 - x")
    assert cert["degree"] == 7
    assert cert["t"]["b"] == "x^2 + 4"
    md = etale.mindeg(5, "x + x^2 + 2*x^3 + x^5")
    assert md == {"linalg": 15, "explicit": 15, "agree": True}
    assert etale.admissible(5, "x + x^2 + 2*x^3 + x^5", 30) == [15, 20, 25, 30]


def test_exists_and_errors():
    assert etale.exists(7, "x^3 - x")
    assert not etale.exists(5, "x^3 + 3*x^2 + 2*x")
    with pytest.raises(ValueError, match="no_cover"):
        etale.cover(5, "x^3 + 3*x^2 + 2*x")
    with pytest.raises(ValueError, match="syntax_error"):
        etale.cover(5, "x^^2")


def test_cartier_matrix():
    doc = etale.cartier(5, "x + x^2 + 2*x^3 + x^5", mpole=-3)
    assert doc["matrix"]["rows"] == 2
    assert doc["matrix"]["cols"] == 4
    # columns: dx/y -> 0; x dx/y -> (2, 4); x^2 dx/y -> (1, 2); dx -> 0
    assert doc["matrix"]["entries"] == ["0", "2", "1", "0", "0", "4", "2", "0"]
    assert doc["classification"] == {"class": "intermediate(1)", "p_rank": 1}


def test_legendre_and_verify():
    leg = etale.legendre(5, "2")
    assert leg["c_m"] == "3"
    assert leg["ramification"] == "two_branch_points"
    assert etale.verify(7, "x^3 - x", "x^2 + 4")["degree"] == 7
    assert not etale.verify(7, "x^3 - x", "x")["accepted"]


def test_search_and_family():
    rep = etale.search(3, 2, 9)
    assert rep["covers_found"] == 0
    fam = etale.family("p7_ab", ext=1)
    assert fam["all_ok"]


def test_poly_canon():
    assert etale.poly_canon(7, "(x+1)*(x-1)") == "x^2 + 6"


needs_cli = pytest.mark.skipif(CLI is None, reason="ETALE_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@needs_cli
@pytest.mark.parametrize(
    "args",
    [
        ("table",),
        ("ss-j", "--p", "11"),
        ("cartier", "--p", "7", "--f", "x^3-x"),
        ("exists", "--p", "7", "--f", "x^3-x"),
        ("cover", "--p", "7", "--f", "x^3-x"),
        ("cover", "--p", "7", "--f", "x^3-x", "--degree", "14"),
        ("mindeg", "--p", "5", "--f", "x+x^2+2*x^3+x^5"),
        ("admissible", "--p", "5", "--f", "x+x^2+2*x^3+x^5", "--bound", "30"),
        ("legendre", "--p", "5", "--lambda", "2"),
        ("search", "--p", "5", "--g", "2", "--q", "5"),
        ("family", "--id", "p7_ab", "--ext", "1"),
        ("verify", "--p", "7", "--f", "x^3-x", "--cover", "x^2+4"),
    ],
)
def test_cli_documents_validate(args):
    proc = run_cli(*args)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)


@needs_cli
def test_cli_exit_codes():
    # mathematical rejection: exit 1 with a schema-valid document
    proc = run_cli("exists", "--p", "5", "--f", "x^3+3*x^2+2*x")
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert doc["reason"] == "curve is ordinary"

    proc = run_cli("cover", "--p", "5", "--f", "x^3+3*x^2+2*x")
    assert proc.returncode == 1
    jsonschema.validate(json.loads(proc.stdout), SCHEMA)

    # a non-admissible degree is a mathematical rejection as well
    proc = run_cli("cover", "--p", "5", "--f", "x+x^2+2*x^3+x^5", "--degree", "5")
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert doc["error"]["code"] == "not_admissible"

    # a genus-2 curve in characteristic 3 is rejected for divisibility
    proc = run_cli("exists", "--p", "3", "--f", "x^5+x^4+2*x+1")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["reason"] == "p divides 2g-1"

    # malformed input: exit 2, message on stderr
    proc = run_cli("cover", "--p", "5", "--f", "x^^2")
    assert proc.returncode == 2
    assert "syntax_error" in proc.stderr

    proc = run_cli("cover", "--p", "4", "--f", "x^3-x")
    assert proc.returncode == 2


@needs_cli
def test_cli_search_deterministic_across_jobs():
    one = run_cli("search", "--p", "5", "--g", "2", "--q", "5", "--jobs", "1")
    three = run_cli("search", "--p", "5", "--g", "2", "--q", "5", "--jobs", "3")
    assert one.stdout == three.stdout
    tsv = run_cli("search", "--p", "5", "--g", "2", "--q", "5", "--tsv")
    assert tsv.stdout.splitlines()[0].startswith("normal_form\t")


@needs_cli
def test_cli_table_tsv():
    proc = run_cli("table", "--tsv")
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 9
    assert lines[0] == "p\tequation\tj\tcover\tverified"
    assert all(line.endswith("yes") for line in lines[1:])
