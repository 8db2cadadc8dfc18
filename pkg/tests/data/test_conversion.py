import json
import re

import networkx as nx
import pytest

from combx.data.conversion import (
    frame_from_dict,
    frame_to_dict,
    from_graph,
    labels_to_mask,
    load_frame,
    mask_to_labels,
    save_frame,
    to_closure_graph,
    to_dot,
    to_hasse_graph,
)
from combx.data.cotree import make_comb, make_hcomb
from combx.data.poset import chain
from combx.decide.structure import frame_F
from combx.errors import CycleError, DomainError


def test_frame_to_dict():
    assert frame_to_dict(make_comb(1)) == {"points": ["x1", "x1p"], "covers": [["x1p", "x1"]]}


@pytest.mark.parametrize("X", [make_comb(3), make_hcomb(2), frame_F(0), frame_F(2)])
def test_frame_dict_round_trip(X):
    assert frame_from_dict(frame_to_dict(X)) == X
    assert frame_from_dict(json.loads(json.dumps(frame_to_dict(X)))) == X


def test_frame_from_dict_closes_edges():
    X = frame_from_dict({"points": ["a", "b", "c"], "covers": [["c", "b"], ["b", "a"], ["c", "a"]]})
    assert X == chain(3, ["c", "b", "a"]).relabel([2, 1, 0])
    assert X.covers() == [(1, 0), (2, 1)]


@pytest.mark.parametrize(
    "data",
    [
        {"covers": []},
        {"points": ["a"], "covers": [["a", "b"]]},
        {"points": ["a", "a"], "covers": []},
        {"points": ["a", "b"], "covers": [["a"]]},
        {"points": ["a", "b"], "covers": [5]},
        {"points": ["a", "b"], "covers": "ab"},
        {"points": "ab", "covers": []},
        ["a", "b"],
    ],
)
def test_frame_from_dict_invalid(data):
    with pytest.raises(DomainError):
        frame_from_dict(data)


def test_frame_from_dict_cycle():
    with pytest.raises(CycleError):
        frame_from_dict({"points": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})


def test_save_and_load(tmp_path):
    path = tmp_path / "frame.json"
    X = make_comb(2)
    save_frame(X, path)
    assert load_frame(path) == X


def test_hasse_graph():
    X = make_comb(2)
    G = to_hasse_graph(X)
    assert G.number_of_nodes() == 4
    assert sorted(G.edges) == sorted(X.covers())
    assert G.nodes[0]["label"] == "x1"
    assert from_graph(G) == X
    assert nx.is_directed_acyclic_graph(G)


def test_from_graph_with_plain_nodes():
    G = nx.DiGraph([("a", "b"), ("b", "c")])
    X = from_graph(G)
    assert X.labels == ("a", "b", "c")
    assert X.le(0, 2)


def test_closure_graph():
    G = to_closure_graph(chain(3))
    assert sorted(G.edges) == [(0, 1), (0, 2), (1, 2)]
    assert to_closure_graph(make_comb(2)).number_of_edges() == 4


def test_dot():
    dot = to_dot(make_comb(2))
    assert dot.startswith('digraph "frame" {')
    assert '"x2" -> "x1" [dir=back];' in dot
    assert '"x1" -> "x1p" [dir=back];' in dot
    assert '{ rank=same; "x2"; }' in dot
    assert '{ rank=same; "x1"; "x2p"; }' in dot
    assert dot.rstrip().endswith("}")
    assert 'digraph "F3"' in to_dot(frame_F(3), name="F3")


def test_mask_labels():
    X = make_comb(2)
    assert mask_to_labels(X, 0b1100) == ["x2", "x2p"]
    assert labels_to_mask(X, ["x2", "x2p"]) == 0b1100
    with pytest.raises(DomainError):
        labels_to_mask(X, ["y0"])


def _dot_graph(dot):
    nodes = set(re.findall(r'^  "([^"]*)";$', dot, flags=re.M))
    edges = set(re.findall(r'^  "([^"]*)" -> "([^"]*)" \[dir=back\];$', dot, flags=re.M))
    return nodes, edges


@pytest.mark.parametrize("X", [make_comb(3), make_hcomb(2), frame_F(0), frame_F(2), chain(1)])
def test_dot_matches_hasse_diagram(X):
    nodes, edges = _dot_graph(to_dot(X))
    assert nodes == set(X.labels)
    assert edges == {(X.labels[y], X.labels[x]) for x, y in X.covers()}
