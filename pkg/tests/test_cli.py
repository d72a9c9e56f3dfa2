from __future__ import annotations

import io
import json
from fractions import Fraction

import pytest

from linext.cli import run
from linext.poset import parse_poset_text
from linext.quad import parse_exact

T_TEXT = "# T\ne a\ne b\ne c\nr a b\n"


def invoke(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


@pytest.fixture
def t_file(tmp_path):
    path = tmp_path / "T.poset"
    path.write_text(T_TEXT)
    return str(path)


def test_count(t_file):
    assert invoke("count", t_file) == (0, "3\n")
    code, out = invoke("--format", "json", "count", t_file)
    assert json.loads(out) == {"count": "3"}


def test_count_json_file(tmp_path):
    path = tmp_path / "T.json"
    path.write_text(json.dumps({"elements": ["a", "b", "c"], "relations": [["a", "b"]]}))
    assert invoke("count", str(path)) == (0, "3\n")


def test_prob(t_file):
    code, out = invoke("prob", t_file, "c", "b", "--digits", "4")
    assert code == 0
    assert out == "2/3\t0.6667\n"


def test_balance(t_file):
    code, out = invoke("balance", t_file, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert Fraction(data["delta"]) == Fraction(1, 3)
    assert data["witness"] == ["a", "c"]


def test_input_errors(tmp_path, t_file, capsys):
    bad = tmp_path / "bad.poset"
    bad.write_text("e a\ne b\nr a b\nr b a\n")
    assert invoke("count", str(bad))[0] == 1
    assert invoke("count", str(tmp_path / "missing"))[0] == 1
    assert invoke("prob", t_file, "a", "zz")[0] == 1
    assert invoke("bogus")[0] == 1
    assert invoke("family", "--m", "0", "--n", "0")[0] == 1
    assert "error" in capsys.readouterr().err


def test_budget_error(tmp_path, monkeypatch):
    path = tmp_path / "wide.poset"
    path.write_text("".join(f"e x{i}\n" for i in range(6)))
    monkeypatch.setenv("LINEXT_IDEAL_BUDGET", "20")
    assert invoke("count", str(path))[0] == 2


def test_family_emit_roundtrip():
    code, out = invoke("family", "--m", "5", "--n", "5", "--emit")
    assert code == 0
    p = parse_poset_text(out)
    assert p.size == 10
    code, out = invoke("family", "--m", "5", "--n", "5", "--format", "json")
    assert json.loads(out)["extensions"] == "106"


def test_table_deterministic():
    first = invoke("table", "--max", "15")
    assert first == invoke("table", "--max", "15")
    lines = first[1].splitlines()
    assert lines[0] == "m\tn\tE\tadmissible"
    assert "15\t15\t2845162\t1" in lines
    assert len(lines) == 1 + 16 * 16 - 1


def test_closed_form_rows():
    code, out = invoke("closed-form", "--k", "1")
    rows = out.splitlines()[1:]
    assert code == 0
    assert len(rows) == 13
    assert all(r.endswith("\tOK") for r in rows)
    assert "1\tE(5k+4, 5k+4)\t9\t9\t6059\t6059\tOK" in rows


def test_closed_form_k0_marks_out_of_range():
    code, out = invoke("closed-form", "--k", "0")
    assert code == 0
    assert sum(r.endswith("out-of-range") for r in out.splitlines()) == 3


def test_converge_json_roundtrip():
    code, out = invoke("--format", "json", "converge", "--kmax", "2")
    rows = json.loads(out)
    assert code == 0
    assert Fraction(rows[0]["delta_exact"]) == Fraction(37, 106)
    gap = parse_exact(rows[1]["gap_exact"])
    assert gap.to_decimal(18) == rows[1]["gap_decimal"]


def test_converge_tsv_header():
    code, out = invoke("converge", "--kmax", "1")
    assert out.splitlines()[0] == "k\tdelta_exact\tdelta_decimal\tgap_decimal\twitness"


def test_decompose():
    code, out = invoke("decompose", "--k", "2", "--t", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [c["count"] for c in data["cases"]] == ["4761", "7314", "5291"]
    assert [c["direct"] for c in data["cases"]] == ["4761", "7314", "5291"]
    assert sum(parse_exact(c["limit_exact"]) for c in data["cases"]) == 1
    assert invoke("decompose", "--k", "2", "--t", "2")[0] == 1


def test_survey_cli():
    code, out = invoke("survey", "--n", "4")
    data = json.loads(out)
    assert code == 0
    assert data["min_delta"] == "1/3"
    assert data["conjecture_holds"] and data["achievers_all_T_linear_sums"]
    assert invoke("survey", "--n", "9")[0] == 2
