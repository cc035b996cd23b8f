"""Command-line client: JSON output, exit codes, file outputs, ledger flow."""

import json

import pytest
from click.testing import CliRunner

import fermicode.corpus as corpus
from fermicode.cli import main

BAD_ROWS = json.dumps(
    {
        "rows": [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["x", "0", "1", "0"],
            ["0", "0", "0", "1"],
        ]
    }
)


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


# --- verify / compose -----------------------------------------------------------


def test_verify_automorphism_exits_zero(runner):
    res = invoke(runner, "verify", "--auto", "A4*A7")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["is_automorphism"] is True


def test_verify_non_automorphism_exits_one(runner):
    res = invoke(runner, "verify", "--matrix", BAD_ROWS)
    assert res.exit_code == 1
    doc = json.loads(res.output)
    assert doc["is_automorphism"] is False
    assert doc["identities"]["x_sector_symmetry"] is False


def test_verify_usage_errors_exit_two(runner):
    assert invoke(runner, "verify", "--auto", "A1", "--factors", "1").exit_code == 2
    assert invoke(runner, "verify").exit_code == 2
    assert invoke(runner, "verify", "--auto", "A99").exit_code == 2


def test_compose_names_match_factors(runner):
    by_names = invoke(runner, "compose", "A4", "A7")
    by_factors = invoke(runner, "compose", "--factors", "4,7")
    assert by_names.exit_code == by_factors.exit_code == 0
    assert json.loads(by_names.output) == json.loads(by_factors.output)
    assert invoke(runner, "compose", "A4", "--factors", "4").exit_code == 2


# --- apply / weights -----------------------------------------------------------


def test_apply_matches_frozen_image(runner):
    doc = corpus.load("transformed_vectors.json")
    rec = next(r for r in doc["codes"] if r["expr"] == "A1")
    im = next(i for i in rec["images"] if i["source"] == "stab")
    res = invoke(runner, "apply", "--auto", "A1", "--vector", "stab")
    assert res.exit_code == 0
    assert json.loads(res.output)["vector"]["text"] == im["text"]


def test_apply_accepts_inline_json_vector(runner):
    res = invoke(runner, "apply", "--auto", "I", "--vector", '{"c1": [[0, 0]]}')
    assert res.exit_code == 0
    assert json.loads(res.output)["vector"]["weight"] == 1


def test_weights_table_row(runner):
    res = invoke(runner, "weights", "--auto", "I")
    doc = json.loads(res.output)
    assert doc["hopping"] == [2, 6]
    assert doc["occupation"] == 4
    assert doc["stabilizer"] == 6


# --- distance -------------------------------------------------------------------


def test_distance_expect_pass_and_fail(runner):
    res = invoke(runner, "distance", "--auto", "A1", "--max-weight", "4",
                 "--expect", "3")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["kind"] == "exact" and doc["distance"] == 3
    assert "weight 3" in doc["witness_diagram"]

    res = invoke(runner, "distance", "--auto", "A1", "--max-weight", "4",
                 "--expect", "4")
    assert res.exit_code == 1


def test_distance_out_file(runner, tmp_path):
    out = tmp_path / "d.json"
    res = invoke(runner, "distance", "--auto", "I", "--max-weight", "3",
                 "--out", str(out))
    assert res.exit_code == 0
    assert res.output == ""
    assert json.loads(out.read_text())["distance"] == 2


# --- search ledger --------------------------------------------------------------


def test_search_ledger_append_and_resume(runner, tmp_path):
    ledger = tmp_path / "sweep.jsonl"
    res = invoke(runner, "search", "--target-d", "4", "--max-len", "2",
                 "--ledger", str(ledger))
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["count"] > 0
    assert all(h["result"] is None for h in doc["hits"])  # estimate-only sweep
    lines = [json.loads(l) for l in ledger.read_text().splitlines()]
    assert len(lines) == len(doc["examined"]) > 0
    assert {tuple(l["factors"]) for l in lines} >= {(4, 7)}

    res = invoke(runner, "search", "--target-d", "4", "--max-len", "2",
                 "--ledger", str(ledger), "--resume")
    doc = json.loads(res.output)
    assert doc["examined"] == []  # everything already ledgered
    assert len(ledger.read_text().splitlines()) == len(lines)


# --- syndrome / render / export --------------------------------------------------


def test_syndrome_with_diagrams(runner, tmp_path):
    svg = tmp_path / "syndrome.svg"
    res = invoke(runner, "syndrome", "--auto", "I", "--error", '{"c1": "1"}',
                 "--ascii", "--svg", str(svg))
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert sorted(map(tuple, doc["syndrome"])) == [(0, 0), (1, 0)]
    assert doc["diagram"].count("(*)") == 2
    assert svg.read_text().startswith("<svg")


def test_render_ascii_stdout_and_svg_file(runner, tmp_path):
    res = invoke(runner, "render", "--vector", "hop_h")
    assert res.exit_code == 0
    assert "weight 2" in res.output
    out = tmp_path / "hop.svg"
    res = invoke(runner, "render", "--vector", "hop_h", "--format", "svg",
                 "--marks", "0,0;1,0", "--out", str(out))
    assert res.exit_code == 0
    assert out.read_text().startswith("<svg")
    assert invoke(runner, "render", "--vector", "hop_h", "--marks", "zz").exit_code == 2


def test_export_with_torus_rows(runner, tmp_path):
    out = tmp_path / "code.json"
    res = invoke(runner, "export", "--auto", "A1", "--L", "6", "--out", str(out))
    assert res.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["expr"] == "A1"
    assert doc["torus"]["L"] == 6
    assert len(doc["torus"]["stabilizer_rows"]) == 36


# --- decode-check ----------------------------------------------------------------


def test_decode_check_pass_and_fail(runner):
    res = invoke(runner, "decode-check", "--auto", "A1", "--L", "6", "--t", "1")
    assert res.exit_code == 0
    assert json.loads(res.output)["correction"]["correctable"] is True

    res = invoke(runner, "decode-check", "--auto", "I", "--L", "4", "--t", "1")
    assert res.exit_code == 1
    assert json.loads(res.output)["correction"]["failures"]

    # margin rejection surfaces as a usage error
    assert invoke(runner, "decode-check", "--auto", "A1", "--L", "4").exit_code == 2


# --- reports ---------------------------------------------------------------------


def test_table1_checks_against_corpus(runner):
    res = invoke(runner, "table1")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["matches_corpus"] is True
    assert len(doc["rows"]) == 8
    assert all(r["matches_corpus"] for r in doc["rows"])


def test_table2_fast_tier(runner):
    res = invoke(runner, "table2", "--tier", "fast")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert [r["claimed"] for r in doc["rows"]] == [2, 3, 4, 4, 5]
    assert all(r["match"] for r in doc["rows"])


def test_corpus_check_command(runner):
    res = invoke(runner, "corpus-check")
    assert res.exit_code == 0
    assert res.output.strip().endswith("corpus: ok")


def test_help_and_unknown_command(runner):
    assert invoke(runner, "--help").exit_code == 0
    assert runner.invoke(main, ["no-such-command"]).exit_code == 2
