import io
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagflow.cli import main, selftest
from flagflow.runner import render_json, render_text, run
from flagflow.scenario import Query, Scenario, ScenarioError, parse_scenario, serialize_scenario

SCENARIOS = resources.files("flagflow").joinpath("data", "scenarios")


def shipped(name):
    return SCENARIOS.joinpath(name).read_text(encoding="utf-8")


def doc(**over):
    base = {"root_type": {"family": "A", "rank": 2}, "parabolic": [], "lambda": "1",
            "shape": "theorem_a", "k": 2, "fibers": [[-1, 1]], "queries": []}
    base.update(over)
    return json.dumps({k: v for k, v in base.items() if v is not None})


def test_fixture_parses():
    sc = parse_scenario(shipped("p_tp2_theorem_a.json"))
    assert (sc.family, sc.rank, sc.parabolic, sc.lam, sc.k, sc.fibers) == ("A", 2, (), 1, 2, ((-1, 1),))


@pytest.mark.parametrize("text", ["", "   \n"])
def test_empty_document(text):
    with pytest.raises(ScenarioError) as e:
        parse_scenario(text)
    assert e.value.kind == "syntax" and e.value.exit_code == 2


def test_syntax_error_position():
    with pytest.raises(ScenarioError) as e:
        parse_scenario('{\n  "root_type": {"family": "A",, "rank": 2}\n}')
    assert e.value.exit_code == 2
    assert "line 2 column" in e.value.errors[0]


def test_fiber_not_in_pic0():
    with pytest.raises(ScenarioError) as e:
        parse_scenario(doc(shape="theorem_b", k=None, fibers=[[-1, 1], [1, 0]]))
    assert e.value.exit_code == 3
    assert e.value.errors == ["fibers[1]: fiber not in Pic0 (degree 3/4)"]


def test_all_errors_reported():
    text = doc(extra=1, k=None, root_type={"family": "Q", "rank": 2}, queries=[
        {"kind": "tflat"}, {"kind": "nope"}, {"kind": "flow", "s": 0.5}, {"kind": "holonomy", "s": "1"}])
    with pytest.raises(ScenarioError) as e:
        parse_scenario(text)
    msgs = e.value.errors
    assert e.value.exit_code == 3
    for needle in ("extra: unknown key", "root_type:", "k: required", "queries[0].s: missing",
                   "queries[1].kind: unknown", "queries[2].s: floats", "queries[3].s: unknown key"):
        assert any(needle in m for m in msgs), needle


def test_semantic_geometry_errors():
    with pytest.raises(ScenarioError, match="Picard number hypothesis violated"):
        parse_scenario(doc(parabolic=[2], fibers=[[0]]))
    with pytest.raises(ScenarioError, match="odd number"):
        parse_scenario(doc(fibers=[[-1, 1], [-1, 1]]))
    with pytest.raises(ScenarioError, match="expected 2 coordinates"):
        parse_scenario(doc(fibers=[[-1, 1, 0]]))
    with pytest.raises(ScenarioError, match="decimal"):
        parse_scenario(doc(**{"lambda": "0.5"}))


def test_run_examples():
    sc = parse_scenario(doc(queries=[{"kind": "tflat", "s": "0"}]))
    report = run(sc)
    assert report.document["results"][0]["value"] == "1/3"
    assert report.exit_code == 0

    rep = run(parse_scenario(shipped("p_tp2_pluriclosed.json"))).document
    gh = next(r for r in rep["results"] if r["kind"] == "gh_limit")["value"]
    assert gh["gh_limit_dim"] == "1" and gh["limit"] == "S^1"


def test_error_isolation_on_point():
    report = run(parse_scenario(shipped("point.json")))
    doc_ = report.document
    assert report.exit_code == 4
    describe = doc_["results"][0]["value"]
    assert describe["dim_complex"] == "0" and describe["fano_index"] is None
    assert [e["kind"] for e in doc_["errors"]] == ["describe"]
    assert [r["kind"] for r in doc_["results"]] == ["describe", "pic0"]


def test_failing_query_keeps_others():
    sc = parse_scenario(doc(shape="theorem_b", k=None, fibers=[[-1, 1], [-2, 2]], queries=[
        {"kind": "tflat", "s": "0"}, {"kind": "balanced", "s": "0"}, {"kind": "flow", "s": "2"}]))
    d = run(sc).document
    assert [r["kind"] for r in d["results"]] == ["balanced"]
    assert [e["query"] for e in d["errors"]] == [0, 2]


@pytest.mark.parametrize("name", ["p_tp2_theorem_a.json", "p_tp2_pluriclosed.json", "point.json"])
def test_round_trip_shipped(name):
    sc = parse_scenario(shipped(name))
    text = serialize_scenario(sc)
    assert parse_scenario(text) == sc
    assert serialize_scenario(parse_scenario(text)) == text


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.sampled_from(["flow", "tflat", "balanced", "ode_check", "holonomy", "describe",
                                 "pluriclosed_report"]), max_size=5), st.data())
def test_round_trip_generated(kinds, data):
    queries = []
    for kind in kinds:
        if kind == "flow":
            t = data.draw(st.none() | rationals)
            queries.append(Query(kind, s=data.draw(rationals), t=t))
        elif kind in ("tflat", "balanced"):
            queries.append(Query(kind, s=data.draw(rationals)))
        elif kind == "ode_check":
            queries.append(Query(kind, s=data.draw(rationals), t=data.draw(rationals), h=data.draw(rationals)))
        elif kind == "pluriclosed_report":
            queries.append(Query(kind, samples=tuple(data.draw(st.lists(rationals, max_size=3)))))
        else:
            queries.append(Query(kind))
    ell = data.draw(st.integers(-5, 5))
    sc = Scenario("A", 2, (), data.draw(st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)),
                  "theorem_b", None, ((-ell, ell), (ell, -ell)), tuple(queries))
    assert parse_scenario(serialize_scenario(sc)) == sc


def test_cli_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(doc(queries=[{"kind": "tflat", "s": "0"}]))
    assert main(["run", str(good)]) == 0
    assert json.loads(capsys.readouterr().out)["results"][0]["value"] == "1/3"

    (tmp_path / "empty.json").write_text("")
    assert main(["run", str(tmp_path / "empty.json")]) == 2
    assert main(["run", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(doc(shape="theorem_b", k=None, fibers=[[1, 0], [-1, 1]]))
    assert main(["run", str(bad)]) == 3
    assert "fiber not in Pic0" in capsys.readouterr().err
    failing = tmp_path / "failing.json"
    failing.write_text(doc(queries=[{"kind": "flat_time", "t": "1"}]))
    assert main(["run", str(failing)]) == 4


def test_cli_out_and_text(tmp_path, capsys):
    src = SCENARIOS.joinpath("p_tp2_theorem_a.json")
    out = tmp_path / "r.txt"
    code = main(["run", str(src), "--format", "text", "--out", str(out)])
    text = out.read_text()
    assert code == 0
    assert text.startswith("flag manifold A2, parabolic [], weights indexed by simple roots [1, 2]")
    assert "tflat" in text and "1/3" in text
    sc = parse_scenario(shipped("p_tp2_theorem_a.json"))
    assert render_text(run(sc)) == text


def test_describe_command(capsys):
    assert main(["describe", "--type", "A", "--rank", "2", "--parabolic", "", "--lambda", "1"]) == 0
    d = json.loads(capsys.readouterr().out)["describe"]
    assert d["degree_functional"] == ["3/4", "3/4"] and d["fano_index"] == "2"
    assert main(["describe", "--type", "A", "--rank", "2", "--parabolic", "1,2"]) == 4
    capsys.readouterr()
    assert main(["describe", "--type", "Z", "--rank", "2"]) == 3
    assert main(["describe", "--type", "B", "--rank", "3", "--parabolic", "2", "--format", "text"]) == 0


def test_selftest_in_process():
    buf = io.StringIO()
    assert selftest(buf)
    assert buf.getvalue().rstrip().endswith("selftest passed")


def test_byte_determinism(tmp_path):
    src = str(SCENARIOS.joinpath("p_tp2_pluriclosed.json"))
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        subprocess.run([sys.executable, "-m", "flagflow.cli", "run", src, "--out", str(p)], check=False)
        outs.append(p.read_bytes())
    assert outs[0] == outs[1] and outs[0]
    sc = parse_scenario(shipped("p_tp2_pluriclosed.json"))
    assert render_json(run(sc)).encode() == outs[0]
