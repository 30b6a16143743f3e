import io
import json
from pathlib import Path

import pytest

from coxjsj.cli import build_parser, main, run
from coxjsj.core import parse_cox, serialize_cox, to_json
from coxjsj.fixtures import cycle, figure2, figure3

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def _run(argv):
    out = io.StringIO()
    code = run(build_parser().parse_args(argv), out)
    return code, out.getvalue()


def test_decompose_json():
    code, text = _run(["decompose", str(DATA / "figure1.cox")])
    assert code == 0
    data = json.loads(text)
    assert sorted(map(tuple, data["vertices"])) == [("a", "b"), ("b", "c", "e"), ("b", "d", "e")]


def test_decompose_fast_and_orbit():
    _, slow = _run(["decompose", str(DATA / "figure2.cox")])
    _, fast = _run(["decompose", "--fast", str(DATA / "figure2.cox")])
    assert sorted(json.loads(slow)["vertices"]) == sorted(json.loads(fast)["vertices"])
    _, orbit = _run(["decompose", "--orbit", str(DATA / "figure1.cox")])
    assert len(json.loads(orbit)["trees"]) == 2


def test_decompose_dot():
    _, text = _run(["decompose", "--format", "dot", str(DATA / "figure1.cox")])
    assert text.startswith("graph jsj {") and 'label="b,e"' in text


def test_separators():
    _, text = _run(["separators", str(DATA / "figure2.cox")])
    data = json.loads(text)
    assert data["complete_relative_minimal_separators"] == [["b"], ["c", "d"]]


def test_chordal(tmp_path):
    _, text = _run(["chordal", str(DATA / "square.cox")])
    assert json.loads(text) == {"chordal": False, "witness": ["a", "b", "c", "d"]}
    _, text = _run(["chordal", str(DATA / "figure2.cox")])
    assert json.loads(text) == {"chordal": True}


def test_twist_apply():
    code, text = _run(["twist", "apply", str(DATA / "figure2.cox"), "--s1", "a,b,c,d",
                       "--s0", "b,c,d", "--format", "cox"])
    assert code == 0 and parse_cox(text) == figure3()
    _, text = _run(["twist", "apply", str(DATA / "figure2.cox"), "--s1", "a,b,c,d",
                    "--s0", "b,c,d"])
    data = json.loads(text)
    assert data["renames"] == {"e": "e'"} and data["sigma"] == {"b": "d", "c": "c", "d": "b"}


def test_twist_orbit():
    code, text = _run(["twist", "orbit", str(DATA / "figure2.cox")])
    data = json.loads(text)
    assert code == 0 and len(data["members"]) == 3 and data["overflow"] is False
    assert data["invariants"]["overall"] is True


def test_budget_env(monkeypatch):
    monkeypatch.setenv("COXJSJ_BUDGET", "1")
    _, text = _run(["twist", "orbit", str(DATA / "figure2.cox")])
    assert json.loads(text)["overflow"] is True


def test_verify():
    code, text = _run(["verify", str(DATA / "figure1.cox")])
    assert code == 0 and json.loads(text)["overall"] is True


def test_random_reproducible():
    _, a = _run(["random", "--rank", "6", "--seed", "3"])
    _, b = _run(["random", "--rank", "6", "--seed", "3"])
    assert a == b and parse_cox(a).rank == 6
    _, c = _run(["random", "--rank", "4", "--p", "1", "--labels", "inf"])
    assert parse_cox(c).edges == ()


def test_json_input(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps(to_json(figure2())))
    _, text = _run(["separators", str(path)])
    assert json.loads(text)["relative_minimal_separators"] == [["b"], ["c", "d"]]


def test_exit_code_2(tmp_path, capsys):
    bad = tmp_path / "bad.cox"
    bad.write_text("gens a b\nedge a b 1\n")
    assert main(["chordal", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["chordal", str(tmp_path / "missing.cox")]) == 2
    assert main(["twist", "apply", str(DATA / "figure2.cox"), "--s1", "a", "--s0", "c"]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 2


def test_main_writes_stdout(tmp_path, capsys):
    path = tmp_path / "c.cox"
    path.write_text(serialize_cox(cycle(4)))
    assert main(["chordal", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["chordal"] is False
