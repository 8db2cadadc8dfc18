import json
import re

import matplotlib

matplotlib.use("Agg")

import pytest

from combx.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main, run
from combx.data.conversion import save_frame
from combx.data.cotree import make_comb, make_hcomb
from combx.decide.structure import frame_F


@pytest.fixture
def frames(tmp_path):
    paths = {}
    for name, X in [("c2", make_comb(2)), ("c3", make_comb(3)), ("h1", make_hcomb(1))]:
        paths[name] = str(tmp_path / f"{name}.json")
        save_frame(X, paths[name])
    for i in range(4):
        paths[f"f{i}"] = str(tmp_path / f"f{i}.json")
        save_frame(frame_F(i), paths[f"f{i}"])
    return paths


def test_parse():
    code, doc = run(["parse", "--formula", "(p -> q) | (q -> p)"])
    assert code == EXIT_OK
    assert doc["formula"] == "(p -> q) | (q -> p)"
    assert doc["variables"] == ["p", "q"]
    assert doc["bound"] == 4


def test_parse_formula_file(tmp_path):
    path = tmp_path / "formula.txt"
    path.write_text("p | !p\n")
    code, doc = run(["parse", "--formula-file", str(path)])
    assert code == EXIT_OK
    assert doc["variables"] == ["p"]


def test_eval(frames):
    code, doc = run(
        ["eval", "--formula", "p | !p", "--frame", frames["c2"], "--valuation", '{"p": ["x2"]}', "--point", "x2"]
    )
    assert code == EXIT_OK
    assert doc["forcing_set"] == ["x2"]
    assert doc["forces"]


def test_valid(frames):
    code, doc = run(["valid", "--formula", "(p -> q) | (q -> p)", "--frame", frames["c2"]])
    assert code == EXIT_OK
    assert doc["valid"] and doc["countermodel"] is None

    code, doc = run(["valid", "--formula", "p | !p", "--frame", frames["c2"]])
    assert code == EXIT_OK
    assert not doc["valid"]
    assert set(doc["countermodel"]) == {"frame", "valuation", "refuting_point"}


def test_morphism(frames):
    code, doc = run(["morphism", "--frame", frames["c2"], "--target", frames["h1"]])
    assert code == EXIT_OK
    assert doc["exists"]
    assert doc["witness"]["kind"] == "surjective_bipmorphism"

    code, doc = run(["morphism", "--frame", frames["c2"], "--target", frames["f3"]])
    assert not doc["exists"] and doc["witness"] is None


def test_embed(frames):
    code, doc = run(["embed", "--frame", frames["c2"], "--target", frames["f1"]])
    assert code == EXIT_OK
    assert doc["exists"]
    assert doc["witness"]["kind"] == "order_embedding"

    code, doc = run(["embed", "--frame", frames["c2"], "--target", frames["f0"]])
    assert not doc["exists"]


def test_classify(frames):
    assert run(["classify", "--frame", frames["c2"]]) == (EXIT_OK, {"tag": "Comb", "n": 2})
    assert run(["classify", "--frame", frames["h1"]]) == (EXIT_OK, {"tag": "HComb", "n": 1})
    assert run(["classify", "--frame", frames["f3"]]) == (EXIT_OK, {"tag": "OtherCoTree"})


def test_lfc_check(frames):
    code, doc = run(["lfc-check", "--frame", frames["c3"]])
    assert code == EXIT_OK
    assert doc["verdict"] and doc["witness"] is None

    code, doc = run(["lfc-check", "--frame", frames["f3"]])
    assert not doc["verdict"] and doc["f3_image"]


def test_decide_logfc():
    code, doc = run(["decide-logfc", "--formula", "(p -> q) | (q -> p)"])
    assert code == EXIT_OK
    assert doc["in_logfc"] and doc["bound"] == 4

    code, doc = run(["decide-logfc", "--formula", "p | !p", "--max-n", "3"])
    assert not doc["in_logfc"]
    assert doc["certificate"]["comb"] == 1
    assert doc["semidecide"]["refutation"]["comb"] == 1


def test_decide_ltab(tmp_path):
    code, doc = run(["decide-ltab", "--axioms", "!( (q<-p) & (p<-q) )"])
    assert code == EXIT_OK
    assert doc["locally_tabular"]
    assert doc["witness"]["axiom"] == 0
    assert doc["witness"]["certificate"]["comb"] == 2

    path = tmp_path / "axioms.txt"
    path.write_text("(p -> q) | (q -> p)\n\n")
    code, doc = run(["decide-ltab", "--formula-file", str(path)])
    assert not doc["locally_tabular"] and doc["witness"] is None

    code, doc = run(["decide-ltab"])
    assert doc["axioms"] == [] and not doc["locally_tabular"]


def test_enumerate():
    code, doc = run(["enumerate", "--max-size", "4"])
    assert code == EXIT_OK
    assert doc["count"] == 8
    assert {"tag": "Comb", "n": 2} in [c["class"] for c in doc["cotrees"]]


def test_render(frames, tmp_path):
    code, doc = run(["render", "--frame", frames["c2"]])
    assert code == EXIT_OK
    assert doc["dot"].startswith('digraph "frame"')
    covers = set(re.findall(r'"([^"]*)" -> "([^"]*)"', doc["dot"]))
    assert covers == {("x2", "x1"), ("x1", "x1p"), ("x2", "x2p")}

    output = tmp_path / "c2.png"
    code, doc = run(["render", "--frame", frames["c2"], "--format", "png", "--formula", "p | !p", "--output", str(output)])
    assert code == EXIT_OK
    assert output.exists()

    code, doc = run(["render", "--frame", frames["c2"], "--format", "svg"])
    assert code == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["unknown"],
        ["parse"],
        ["valid", "--formula", "p"],
        ["valid", "--formula", "p", "--frame", "missing.json"],
        ["eval", "--formula", "p"],
    ],
)
def test_usage_errors(argv):
    code, doc = run(argv)
    assert code == EXIT_USAGE
    assert "error" in doc


def test_syntax_error_offset():
    code, doc = run(["parse", "--formula", "p &"])
    assert code == EXIT_USAGE
    assert doc["error"]["type"] == "FormulaSyntaxError"
    assert doc["error"]["offset"] == 3


def test_budget_exceeded(frames):
    code, doc = run(["--budget", "10", "valid", "--formula", "(p -> q) | (q -> p)", "--frame", frames["c3"]])
    assert code == EXIT_BUDGET
    assert doc["error"]["type"] == "SearchBudgetExceeded"


def test_main(capsys):
    assert main(["parse", "--formula", "p & q"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["formula"] == "p & q"

    assert main(["parse", "--formula", "p &"]) == EXIT_USAGE
    assert "error" in json.loads(capsys.readouterr().out)


def test_corpus(tmp_path, capsys):
    path = tmp_path / "corpus.jsonl"
    lines = [
        json.dumps(["parse", "--formula", "p"]),
        json.dumps({"argv": ["parse", "--formula", "p &"]}),
        "not json",
        "",
        json.dumps(["decide-logfc", "--formula", "p | !p"]),
    ]
    path.write_text("\n".join(lines))
    assert main(["--corpus", str(path)]) == EXIT_USAGE

    outputs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [o["case"] for o in outputs] == [0, 1, 2, 3]
    assert [o["exit_code"] for o in outputs] == [EXIT_OK, EXIT_USAGE, EXIT_USAGE, EXIT_OK]
    assert not outputs[3]["in_logfc"]


def test_corpus_directory(tmp_path, capsys):
    (tmp_path / "a.jsonl").write_text(json.dumps(["parse", "--formula", "p"]))
    (tmp_path / "b.jsonl").write_text(json.dumps(["parse", "--formula", "q"]))
    assert main(["--corpus", str(tmp_path)]) == EXIT_OK
    outputs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [o["formula"] for o in outputs] == ["p", "q"]


@pytest.mark.parametrize("valuation", ['["x1"]', '{"p": "x1"}', '{"p": [1]}', '{"p": ["nowhere"]}', "{"])
def test_malformed_valuation(frames, valuation):
    code, doc = run(["eval", "--formula", "p", "--frame", frames["c2"], "--valuation", valuation])
    assert code == EXIT_USAGE
    assert set(doc) == {"error"}


@pytest.mark.parametrize(
    "frame",
    [{"points": ["a", "b"], "covers": [5]}, {"points": "ab"}, [["a", "b"]], {"points": ["a"], "covers": [["a", "z"]]}],
)
def test_malformed_frame(tmp_path, frame):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(frame))
    code, doc = run(["classify", "--frame", str(path)])
    assert code == EXIT_USAGE
    assert doc["error"]["type"] == "DomainError"


@pytest.mark.parametrize("argv", [["--help"], ["classify", "--help"], ["-h"]])
def test_help_is_json(argv):
    code, doc = run(argv)
    assert code == EXIT_OK
    assert doc["help"].startswith("usage:")


def test_bad_option_values():
    code, doc = run(["decide-logfc", "--formula", "p", "--max-n", "many"])
    assert code == EXIT_USAGE
    assert doc["error"]["type"] == "UsageError"


def test_main_help(capsys):
    assert main(["classify", "--help"]) == EXIT_OK
    assert "--frame" in json.loads(capsys.readouterr().out)["help"]
