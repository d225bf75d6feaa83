import json

import pytest

from nzflow.cli import main
from nzflow.families import generate
from nzflow.formats import emit_edgelist, emit_graph6, verify_flow_document


@pytest.fixture
def graph_file(tmp_path):
    def make(name, *params, fmt="edgelist"):
        g = generate(name, *params)
        path = tmp_path / f"{name}{'_'.join(map(str, params))}.{fmt}"
        path.write_text(emit_graph6(g) + "\n" if fmt == "graph6" else emit_edgelist(g))
        return str(path)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_solve_k33e_has_no_flow(capsys, graph_file):
    code, out = run(capsys, "solve", graph_file("k33e", 7))
    assert code == 1 and "V^⊥ exhausted" in out.out
    code, out = run(capsys, "solve", "--json", graph_file("k33e", 7))
    assert code == 1 and json.loads(out.out) == {"exists": False, "reason": "V^⊥ exhausted"}


def test_solve_wheel4_json_reverifies(capsys, graph_file):
    code, out = run(capsys, "solve", "--json", graph_file("wheel", 4))
    doc = json.loads(out.out)
    assert code == 0 and doc["exists"] and verify_flow_document(doc)


def test_sparse_wheel4_reports_witness_edge(capsys, graph_file):
    code, out = run(capsys, "sparse", "--json", graph_file("wheel", 4))
    doc = json.loads(out.out)
    assert code == 0 and doc["provenance"] == "dependency-witness"
    assert isinstance(doc["irrelevant_edge"], int)
    assert doc["budget"]["excluded_vertex"] == 0


def test_sparse_budget_fields(capsys, graph_file):
    code, out = run(capsys, "sparse", "--json", graph_file("k33e", 7))
    doc = json.loads(out.out)
    assert code == 1 and doc["budget"]["b"] == 3 and doc["budget"]["enumerated"] == 8
    assert doc["budget"]["k"] == "4/3" and doc["budget"]["bound"] == "5"


def test_critical_k4(capsys, graph_file):
    code, out = run(capsys, "critical", graph_file("k4"))
    assert code == 0 and out.out.splitlines()[0] == "critical: true"


def test_oracle_exit_codes(capsys, graph_file):
    assert run(capsys, "oracle", graph_file("k4"))[0] == 1
    code, out = run(capsys, "oracle", "--json", graph_file("wheel", 4))
    assert code == 0 and verify_flow_document(json.loads(out.out))


def test_bounds(capsys, graph_file):
    code, out = run(capsys, "bounds", "--json", graph_file("wheel", 5))
    doc = json.loads(out.out)
    assert code == 0 and doc["l_main_equality"] and doc["wheel"]
    assert run(capsys, "bounds", graph_file("wheel", 4))[0] == 1


def test_irrelevant(capsys, graph_file):
    code, out = run(capsys, "irrelevant", graph_file("wheel", 4))
    assert code == 0 and out.out.startswith("irrelevant edge:")
    code, out = run(capsys, "irrelevant", graph_file("k4"))
    assert code == 0 and out.out.strip() == "none"


def test_graph6_input(capsys, graph_file):
    code, out = run(capsys, "critical", "--format", "graph6", graph_file("k4", fmt="graph6"))
    assert code == 0 and "critical: true" in out.out


def test_gen(capsys):
    code, out = run(capsys, "gen", "wheel", "3")
    assert code == 0 and out.out.splitlines()[0] == "4 6"
    code, out = run(capsys, "gen", "k4", "--format", "graph6")
    assert out.out.strip() == "C~"
    a = run(capsys, "gen", "random", "6", "9", "--seed", "1")[1].out
    b = run(capsys, "gen", "random", "6", "9", "--seed", "1")[1].out
    assert a == b


def test_survey_json(capsys):
    code, out = run(capsys, "survey", "--max-n", "4", "--json")
    doc = json.loads(out.out)
    assert code == 0 and doc["all_bounds_held"] and doc["census"][3]["ell"] == 6


@pytest.mark.parametrize(
    "argv",
    [["solve"], ["frobnicate"], ["gen", "wheel", "2"], ["survey", "--max-n", "9"], ["solve", "/no/such/file"]],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_parse_error_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 1\n0 5\n")
    code, out = run(capsys, "solve", str(p))
    assert code == 2 and "line 2" in out.err


def test_sparse_rejects_disconnected(capsys, tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("4 2\n0 1\n2 3\n")
    assert run(capsys, "sparse", str(p))[0] == 2
    code, out = run(capsys, "solve", str(p))
    assert code == 1 and "component-wise failure" in out.out
