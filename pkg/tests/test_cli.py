import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout

import jsonschema
import pytest

import conftest
from skewpbw.cli import main
from skewpbw.corpus import corpus
from skewpbw.report import KEYS, schema

TABLES = os.path.join(conftest.ROOT, "tables")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", corpus("all"))
@pytest.mark.parametrize("command", ["classify", "analyze", "deform"])
def test_json_validates(command, name):
    code, out, _ = run(command, f"fixture:{name}", "--json")
    rep = json.loads(out)
    jsonschema.validate(rep, schema("report"))
    assert list(rep) == list(KEYS)
    assert code in (0, 2)


@pytest.mark.parametrize("sel", ["sridharan", "core", "all"])
def test_table_json_validates(sel):
    code, out, _ = run("table", sel, "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema("table"))


def test_text_agrees_with_json():
    _, text, _ = run("analyze", "fixture:usl2")
    _, js, _ = run("analyze", "fixture:usl2", "--json")
    rep = json.loads(js)
    for line in rep["summary"]:
        assert line in text
    assert "CertifiedKoszul" == rep["koszul"]["verdict"]


def test_exit_codes(tmp_path):
    assert run("classify", "fixture:usl2")[0] == 0
    assert run("classify", "fixture:x2defect")[0] == 2
    assert run("classify", "fixture:nope")[0] == 1
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra b\ngenerators x\nrelation x*y = 0\n")
    code, _, err = run("classify", str(bad))
    assert code == 1 and "line 3" in err
    assert run("classify", str(tmp_path / "missing.alg"))[0] == 1
    assert run("analyze", "fixture:nonjacobi", "--budget", "1")[0] == 3
    assert run("deform", "fixture:nonjacobi")[0] == 0


def test_params_on_command_line():
    _, out, _ = run("classify", "fixture:qplane", "--param", "q=3/2", "--json")
    rep = json.loads(out)
    assert rep["parameters"] == {"q": "3/2"}
    assert rep["relators"] == ["y*x - 3/2*x*y"]


def test_expectation_match_and_mismatch(tmp_path):
    good = os.path.join(TABLES, "sridharan.expected")
    assert run("table", "sridharan", "--expect", good)[0] == 0
    text = open(good, encoding="utf-8").read().replace("sridharan2 Y Y Y n n", "sridharan2 Y Y n n n")
    mutated = tmp_path / "mutated.expected"
    mutated.write_text(text)
    code, _, err = run("table", "sridharan", "--expect", str(mutated))
    assert code == 2 and "sridharan2" in err


def test_ext_cap_exit(monkeypatch):
    import functools

    import skewpbw.cli as cli
    from skewpbw.report import analyze_report

    monkeypatch.setattr(cli, "analyze_report", functools.partial(analyze_report, cap=3))
    code, out, _ = run("analyze", "fixture:poly2", "--json")
    assert code == 3
    assert json.loads(out)["ext"]["trusted"] is False


def test_deterministic_in_process():
    a = run("analyze", "fixture:sklyanin", "--json")[1]
    b = run("analyze", "fixture:sklyanin", "--json")[1]
    assert a == b
