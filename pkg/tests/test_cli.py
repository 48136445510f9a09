from __future__ import annotations

import json

import pytest

from corpora import grid_crossing
from stringob.cli import main
from stringob.graph import complete, heawood, save_graph
from stringob.strings import make_representation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_gen(capsys, tmp_path):
    code, data = run(capsys, "gen", "heawood")
    assert code == 0 and len(data["edges"]) == 21
    code, data = run(capsys, "gen", "complete", "5")
    assert len(data["edges"]) == 10
    code, data = run(capsys, "gen", "c_cbar", "7")
    assert data["n"] == 28 and len(data["edges"]) == 7 * 4 // 2 + 28
    out = tmp_path / "g.json"
    assert main(["gen", "subdivide", "complete", "5", "1", "-o", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 15


def test_obstruction_examples(capsys):
    code, data = run(capsys, "obstruction", "heawood", "--pairs", "s")
    assert code == 0 and data["vanishes"] is False and data["verified"]
    code, data = run(capsys, "obstruction", "gp", "--pairs", "s")
    assert code == 0 and data["vanishes"] is True
    code, data = run(capsys, "obstruction", "complete", "5", "--pairs", "delta")
    assert code == 0 and data["vanishes"] is False


def test_obstruction_from_file_with_figure_layout_and_svg(capsys, tmp_path):
    path = tmp_path / "h.json"
    save_graph(heawood(), path)
    svg = tmp_path / "h.svg"
    code, data = run(capsys, "obstruction", str(path), "--layout", "figure", "--svg", str(svg))
    assert code == 0 and data["odd_pairs"] == 7
    assert svg.read_text().count('class="crossing"') == 7


def test_obstruction_expect_and_modes(capsys):
    code, _ = run(capsys, "obstruction", "heawood", "--expect", "vanishes")
    assert code == 1
    code, data = run(capsys, "obstruction", "c_cbar", "6", "--pairs", "sd", "--mode", "integer",
                     "--layout", "figure", "--expect", "vanishes")
    assert code == 0 and data["mode"] == "integer"
    code, data = run(capsys, "obstruction", "complete", "6", "--layout", "random", "--seed", "3")
    assert code == 0 and data["vanishes"]


def test_input_errors(capsys, tmp_path):
    assert main(["gen", "nope"]) == 2
    assert main(["obstruction", "complete", "5", "--pairs", "xyz"]) == 2
    assert main(["obstruction", "complete", "5", "--layout", "figure"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 0]]}')
    assert main(["obstruction", str(bad)]) == 2
    assert main(["strings", "verify", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def write_rep(tmp_path, rep, name="rep.json"):
    path = tmp_path / name
    path.write_text(json.dumps(rep.to_json()))
    return path


def test_strings_commands(capsys, tmp_path):
    crossing = make_representation(complete(2), [[(0, 0), (2, 2)], [(0, 2), (2, 0)]])
    disjoint = make_representation(complete(2), [[(0, 0), (1, 0)], [(0, 1), (1, 1)]])
    code, data = run(capsys, "strings", "verify", str(write_rep(tmp_path, crossing)))
    assert code == 0 and data["valid"]
    code, data = run(capsys, "strings", "verify", str(write_rep(tmp_path, disjoint, "d.json")))
    assert code == 1 and data["missing"] == [[0, 1]]

    rep_path = write_rep(tmp_path, grid_crossing(2, 3), "g.json")
    drawing_path = tmp_path / "drawing.json"
    assert main(["strings", "to-drawing", str(rep_path), "-o", str(drawing_path)]) == 0
    code, data = run(capsys, "strings", "from-drawing", str(drawing_path))
    assert code == 0 and data["valid"] and len(data["curves"]) == 5
    code, data = run(capsys, "strings", "roundtrip", str(rep_path))
    assert code == 0 and data["valid"]


def test_corpus_command(capsys, tmp_path, monkeypatch):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"seed": 3, "count": 12, "n_range": [2, 7],
                                "edge_probabilities": [0.3, 0.6],
                                "checks": ["ob_eq_equivalence", "integer_vs_mod2"]}))
    monkeypatch.setenv("STRINGOB_THREADS", "1")
    code, data = run(capsys, "corpus", str(spec))
    assert code == 0 and data["passed"] and data["instances"] == 12
    spec.write_text(json.dumps({"seed": 3, "checks": ["bogus"]}))
    assert main(["corpus", str(spec)]) == 2
    monkeypatch.setenv("STRINGOB_THREADS", "many")
    spec.write_text(json.dumps({"count": 1}))
    assert main(["corpus", str(spec)]) == 2


@pytest.mark.parametrize("argv", [["obstruction", "heawood"], ["gen", "wheel", "6"]])
def test_deterministic_output(capsys, argv):
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    if "millis" in first:
        first.pop("millis"), second.pop("millis")
    assert first == second


def test_graph_file_input(capsys, tmp_path):
    path = tmp_path / "k5.json"
    save_graph(complete(5), path)
    code, data = run(capsys, "obstruction", str(path), "--pairs", "delta", "--mode", "integer")
    assert code == 0 and data["vanishes"] is False
