"""Unit tests for the command-line interface and its exit codes."""

import json
import subprocess
import sys

import pytest

from qcatalan import cli
from qcatalan.network import Arc, PlanarNetwork, build_cs_network
from qcatalan.qpoly import ONE

CONTROL_FAMILY = {
    "name": "control",
    "r": {"tail": {"constant": [1]}},
    "s": {"tail": {"constant": []}},
    "t": {"tail": {"constant": [1]}},
    "witness_b": {"tail": {"constant": []}},
    "witness_c": {"tail": {"constant": []}},
}


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# -- matrix / hankel ---------------------------------------------------


def test_matrix_csv(capsys):
    rc, out, err = run(
        capsys, "matrix", "--family", "narayana", "--n", "2", "--format", "csv"
    )
    assert rc == 0
    assert out == "1,0,0\nq,1,0\nq+q^2,1+2q,1\n"
    assert err == ""


def test_matrix_text_grid(capsys):
    rc, out, _ = run(capsys, "matrix", "--family", "narayana", "--n", "2")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ["1", "0", "0"]
    assert lines[2].split() == ["q+q^2", "1+2q", "1"]
    # columns are right-justified to a common width
    assert len(set(map(len, lines))) == 1


def test_matrix_json(capsys):
    rc, out, _ = run(
        capsys, "matrix", "--family", "narayana", "--n", "1", "--format", "json"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc == {
        "kind": "catalan_stieltjes",
        "family": "narayana",
        "rows": [0, 1],
        "cols": [0, 1],
        "entries": [[[1], []], [[0, 1], [1]]],
    }


def test_matrix_submatrix_selection(capsys):
    rc, out, _ = run(
        capsys,
        "matrix",
        "--family",
        "narayana",
        "--n",
        "2",
        "--rows",
        "1,2",
        "--cols",
        "0,1",
        "--format",
        "csv",
    )
    assert rc == 0
    assert out == "q,1\nq+q^2,1+2q\n"


def test_matrix_rows_without_cols_is_config_error(capsys):
    rc, _, err = run(
        capsys, "matrix", "--family", "narayana", "--n", "2", "--rows", "0,1"
    )
    assert rc == 2
    assert "error:" in err


def test_hankel_csv(capsys):
    rc, out, _ = run(
        capsys, "hankel", "--family", "schroder", "--n", "1", "--format", "csv"
    )
    assert rc == 0
    assert out == "1,1+q\n1+q,1+3q+2q^2\n"


def test_negative_n_is_config_error(capsys):
    rc, _, err = run(capsys, "matrix", "--family", "narayana", "--n", "-1")
    assert rc == 2
    assert "error:" in err


# -- family resolution -------------------------------------------------


def test_unknown_family_is_family_error(capsys):
    rc, _, err = run(capsys, "matrix", "--family", "nosuch", "--n", "1")
    assert rc == 3
    assert "nosuch" in err


def test_family_document_from_file(tmp_path, capsys):
    doc = dict(CONTROL_FAMILY)
    path = tmp_path / "family.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(
        capsys, "matrix", "--family", str(path), "--n", "2", "--format", "csv"
    )
    assert rc == 0
    assert out == "1,0,0\n0,1,0\n1,0,1\n"


def test_family_document_schema_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "r": {}}))
    rc, _, err = run(capsys, "matrix", "--family", str(path), "--n", "1")
    assert rc == 3
    assert "error:" in err


def test_family_document_negative_coefficient(tmp_path, capsys):
    doc = {
        "name": "neg",
        "r": {"tail": {"constant": [1]}},
        "s": {"prefix": [[-1]], "tail": {"constant": [1]}},
        "t": {"tail": {"constant": [1]}},
    }
    path = tmp_path / "neg.json"
    path.write_text(json.dumps(doc))
    rc, _, err = run(capsys, "matrix", "--family", str(path), "--n", "1")
    assert rc == 3


# -- network -----------------------------------------------------------


def test_network_check_passes_for_all_constructions(capsys):
    for extra in ([], ["--hankel-induced", "--k", "1"], ["--hankel-factored"]):
        rc, out, err = run(
            capsys,
            "network",
            "--family",
            "narayana",
            "--n",
            "2",
            "--case",
            "4",
            "--check",
            *extra,
        )
        assert rc == 0, extra
        assert out.startswith("check: pass")
        assert err == ""


def test_network_dot_output_with_check_on_stderr(capsys):
    rc, out, err = run(
        capsys,
        "network",
        "--family",
        "narayana",
        "--n",
        "1",
        "--case",
        "2",
        "--check",
        "--format",
        "dot",
    )
    assert rc == 0
    assert out.startswith("digraph {")
    assert "check: pass" in err


def test_network_json_output(capsys):
    rc, out, _ = run(
        capsys,
        "network",
        "--family",
        "schroder",
        "--n",
        "1",
        "--case",
        "5",
        "--format",
        "json",
    )
    assert rc == 0
    doc = json.loads(out)
    assert set(doc) == {"vertices", "arcs", "sources", "sinks"}
    assert len(doc["vertices"]) == 6
    assert len(doc["arcs"]) == 7


def test_network_case_list_must_match_layers(capsys):
    rc, out, _ = run(
        capsys,
        "network",
        "--family",
        "narayana",
        "--n",
        "3",
        "--case",
        "2,4,5",
        "--check",
    )
    assert rc == 0
    rc, _, err = run(
        capsys,
        "network",
        "--family",
        "narayana",
        "--n",
        "3",
        "--case",
        "2,4",
        "--check",
    )
    assert rc == 2
    rc, _, err = run(
        capsys, "network", "--family", "narayana", "--n", "2", "--case", "9"
    )
    assert rc == 2


def test_network_weight_case_mismatch_is_family_error(capsys):
    rc, _, err = run(
        capsys, "network", "--family", "narayana", "--n", "2", "--case", "1", "--check"
    )
    assert rc == 3
    assert "error:" in err


def test_network_factored_needs_unit_up_weights(capsys):
    rc, _, err = run(
        capsys,
        "network",
        "--family",
        "eulerian",
        "--n",
        "2",
        "--case",
        "1",
        "--hankel-factored",
    )
    assert rc == 2
    assert "r_1" in err


def test_network_check_failure_exit_code(capsys, monkeypatch):
    # doctor one unit arc weight so the GF matrix no longer matches
    def doctored(f, n, cases):
        real = build_cs_network(f, n, cases)
        arcs, changed = [], False
        for a in real.arcs:
            if not changed and a.weight == ONE:
                arcs.append(Arc(a.tail, a.head, a.weight + ONE))
                changed = True
            else:
                arcs.append(a)
        return PlanarNetwork(arcs, real.sources, real.sinks)

    monkeypatch.setattr(cli, "build_cs_network", doctored)
    rc, out, _ = run(
        capsys, "network", "--family", "narayana", "--n", "2", "--case", "4", "--check"
    )
    assert rc == 4
    assert out.startswith("check: fail")


# -- verify ------------------------------------------------------------


def test_verify_json_clean(capsys):
    rc, out, _ = run(
        capsys,
        "verify",
        "--family",
        "narayana",
        "--matrix",
        "C",
        "--n",
        "3",
        "--max-size",
        "3",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["family"] == "narayana"
    assert doc["matrix"] == "C"
    assert doc["ok"] is True
    assert doc["exhaustive"] is True
    assert doc["violations"] == []
    assert doc["report_count"] == len(doc["reports"]) == 136
    assert doc["total_candidates"] == 68


def test_verify_runs_are_byte_identical(capsys):
    argv = [
        "verify",
        "--family",
        "schroder",
        "--matrix",
        "H",
        "--n",
        "2",
        "--max-size",
        "2",
    ]
    rc1, out1, _ = run(capsys, *argv)
    rc2, out2, _ = run(capsys, *argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_csv_and_text_formats(capsys):
    rc, out, _ = run(
        capsys,
        "verify",
        "--family",
        "narayana",
        "--n",
        "2",
        "--max-size",
        "2",
        "--format",
        "csv",
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == (
        "family,kind,rows,cols,lambda,value,q_nonnegative,dominance_gap,gap_nonnegative"
    )
    assert len(lines) == 1 + 9 + 9 * 2  # sizes 1 and 2 of a 3x3 matrix
    rc, out, _ = run(
        capsys,
        "verify",
        "--family",
        "narayana",
        "--n",
        "2",
        "--max-size",
        "2",
        "--format",
        "text",
    )
    assert rc == 0
    assert "all immanants and dominance gaps are q-nonnegative" in out


def test_verify_detects_violation(tmp_path, capsys):
    path = tmp_path / "control.json"
    path.write_text(json.dumps(CONTROL_FAMILY))
    rc, out, _ = run(
        capsys,
        "verify",
        "--family",
        str(path),
        "--matrix",
        "C",
        "--n",
        "2",
        "--max-size",
        "2",
    )
    assert rc == 5
    doc = json.loads(out)
    assert doc["ok"] is False
    assert doc["violations"]
    assert any(
        v["provenance"]["rows"] == [1, 2] and v["provenance"]["cols"] == [0, 1]
        for v in doc["violations"]
    )


def test_verify_text_violation_lines(tmp_path, capsys):
    path = tmp_path / "control.json"
    path.write_text(json.dumps(CONTROL_FAMILY))
    rc, out, _ = run(
        capsys,
        "verify",
        "--family",
        str(path),
        "--n",
        "2",
        "--max-size",
        "2",
        "--format",
        "text",
    )
    assert rc == 5
    assert "violation:" in out


# -- inequality --------------------------------------------------------


def test_inequality_table(capsys):
    rc, out, _ = run(
        capsys, "inequality", "--family", "narayana", "--max-index", "3"
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[-1] == "checked 4 triples: all q-nonnegative"
    assert all("q_nonnegative=True" in l for l in lines[:-1])


def test_inequality_show_and_json(capsys):
    rc, out, _ = run(
        capsys,
        "inequality",
        "--family",
        "narayana",
        "--max-index",
        "2",
        "--show",
    )
    assert rc == 0
    assert "value_332=" in out and "value_331_diagonal=" in out
    rc, out, _ = run(
        capsys,
        "inequality",
        "--family",
        "schroder",
        "--max-index",
        "2",
        "--format",
        "json",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["entries"][0]["triple"] == [0, 1, 2]


def test_inequality_single_triple_and_block(capsys):
    rc, out, _ = run(
        capsys, "inequality", "--family", "eulerian", "--triple", "0", "1", "3"
    )
    assert rc == 0
    assert out.startswith("triple=(0,1,3)")
    assert "q_nonnegative=True" in out
    rc, out, _ = run(
        capsys,
        "inequality",
        "--family",
        "eulerian",
        "--rows",
        "0",
        "1",
        "2",
        "--cols",
        "0",
        "2",
        "3",
    )
    assert rc == 0
    assert out.startswith("rows=[0, 1, 2] cols=[0, 2, 3]")


def test_inequality_argument_errors(capsys):
    rc, _, err = run(
        capsys, "inequality", "--family", "narayana", "--rows", "0", "1", "2"
    )
    assert rc == 2
    rc, _, err = run(
        capsys, "inequality", "--family", "narayana", "--triple", "0", "0", "1"
    )
    assert rc == 2
    rc, _, err = run(capsys, "inequality", "--family", "narayana", "--max-index", "1")
    assert rc == 2


# -- chars -------------------------------------------------------------


def test_chars_text_table(capsys):
    rc, out, _ = run(capsys, "chars", "--n", "3")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].split() == ["shape\\class", "(3)", "(2,1)", "(1,1,1)"]
    assert lines[2].split() == ["(2,1)", "-1", "0", "2"]


def test_chars_json(capsys):
    rc, out, _ = run(capsys, "chars", "--n", "2", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {
        "n": 2,
        "classes": [[2], [1, 1]],
        "characters": [
            {"shape": [2], "values": [1, 1]},
            {"shape": [1, 1], "values": [-1, 1]},
        ],
    }


def test_chars_out_of_range(capsys):
    rc, _, err = run(capsys, "chars", "--n", "13")
    assert rc == 2
    rc, _, err = run(capsys, "chars", "--n", "-1")
    assert rc == 2


# -- parser-level behavior ---------------------------------------------


def test_unknown_subcommand_exits_with_argparse_code(capsys):
    assert cli.main(["frobnicate"]) == 2
    capsys.readouterr()


def test_missing_required_option(capsys):
    assert cli.main(["matrix", "--n", "1"]) == 2
    capsys.readouterr()


def test_console_script_runs():
    proc = subprocess.run(
        ["qcatalan", "matrix", "--family", "narayana", "--n", "1", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1,0\nq,1\n"


def test_module_invocation_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "qcatalan.cli", "chars", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "shape\\class" in proc.stdout
