import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from nzflow.families import generate, k33e, k4, petersen, random_multigraph, wheel
from nzflow.formats import (
    FormatError,
    emit_edgelist,
    emit_graph6,
    flow_document,
    is_canonical_graph6_graph,
    parse_edgelist,
    parse_graph6,
    verify_flow_document,
)
from nzflow.multigraph import build_graph, is_connected
from nzflow.solver import solve_full


def test_parse_edgelist_triangle():
    g = parse_edgelist("3 3\n0 1\n1 2\n2 0")
    assert g == build_graph(3, [(0, 1), (1, 2), (2, 0)])


def test_parse_edgelist_comments_and_blank_lines():
    g = parse_edgelist("# triangle\n\n3 3\n0 1  # first\n1 2\n\n2 0\n")
    assert g.m == 3


def test_parse_edgelist_index_error_reports_line():
    with pytest.raises(FormatError, match="line 2") as exc:
        parse_edgelist("2 1\n0 5")
    assert exc.value.line == 2 and exc.value.column == 3


@pytest.mark.parametrize(
    "text,pattern",
    [("", "header"), ("x y\n", "header"), ("2 2\n0 1\n", "announces 2"), ("2 1\n0\n", "tail head")],
)
def test_parse_edgelist_errors(text, pattern):
    with pytest.raises(FormatError, match=pattern):
        parse_edgelist(text)


def test_graph6_hand_decoded_star():
    # 'D' -> n = 68 - 63 = 5; '?' -> 000000, '{' -> 111100.
    # Bits in column order (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) (0,4) (1,4) (2,4) (3,4): the last four are set.
    g = parse_graph6("D?{")
    assert g.vertex_count == 5
    assert g.endpoint_list() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_header_and_errors():
    assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")
    with pytest.raises(FormatError, match="data bytes"):
        parse_graph6("D?")
    with pytest.raises(FormatError, match="padding"):
        parse_graph6("D?}")
    with pytest.raises(FormatError, match="range"):
        parse_graph6("D?!")


@pytest.mark.parametrize("g", [k4(), wheel(5), k33e(7), petersen()], ids=["k4", "w5", "k33e7", "petersen"])
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.endpoint_list())
    reference = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert emit_graph6(g) == reference
    assert parse_graph6(reference) == g


def test_graph6_large_vertex_count_roundtrip():
    g = build_graph(70, [(i, i + 1) for i in range(69)])
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_rejects_multigraphs():
    with pytest.raises(FormatError):
        emit_graph6(build_graph(2, [(0, 1), (0, 1)]))


@pytest.mark.parametrize(
    "name,params", [("k2", ()), ("k4", ()), ("wheel", (3,)), ("wheel", (6,)), ("k33e", (9,)), ("petersen", ()), ("k33", ())]
)
def test_roundtrips_on_families(name, params):
    g = generate(name, *params)
    assert parse_edgelist(emit_edgelist(g)) == g
    assert is_canonical_graph6_graph(g)
    assert parse_graph6(emit_graph6(g)) == g


@given(st.integers(1, 9), st.integers(0, 8), st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_edgelist_roundtrip_random(n, extra, seed):
    g = random_multigraph(n, n - 1 + extra, seed=seed, loops=True)
    assert parse_edgelist(emit_edgelist(g)) == g


def test_family_shapes():
    assert parse_edgelist(emit_edgelist(wheel(3))).endpoint_list() == k4().endpoint_list()
    w = wheel(6)
    assert w.vertex_count == 7 and w.m == 12
    g = k33e(7)
    assert g.vertex_count == 7 and g.m == 13
    assert 2 * g.m / g.vertex_count == pytest.approx(6 - 16 / 7)
    a, b = generate("random", 6, 9, seed=1), generate("random", 6, 9, seed=1)
    assert a == b and is_connected(a) and a.m == 9


@pytest.mark.parametrize("call", [lambda: wheel(2), lambda: k33e(6), lambda: random_multigraph(5, 3), lambda: generate("nope")])
def test_family_parameter_errors(call):
    with pytest.raises(ValueError):
        call()


def test_flow_document_reverifies():
    out = solve_full(wheel(4))
    doc = flow_document(wheel(4), out.flow)
    assert verify_flow_document(doc)
    doc["flow"][0]["value"] = 3 - doc["flow"][0]["value"]
    assert not verify_flow_document(doc)
