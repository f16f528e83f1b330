import json
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudoflowers import formats
from pseudoflowers.generators import clique_daisy, f_c4, f_star
from pseudoflowers.profiles import enumerate_profiles
from pseudoflowers.universe import Graph, Separation, enumerate_separations

DATA = os.path.join(os.path.dirname(__file__), "data")


def read(name):
    with open(os.path.join(DATA, name), encoding="utf-8") as fh:
        return fh.read()


def test_parse_graph_comments_and_header():
    g = formats.parse_graph(read("p3.txt"))
    assert g == Graph(3, frozenset({(0, 1), (1, 2)}))
    assert formats.parse_graph("n 4\n0 1\n") == Graph(4, frozenset({(0, 1)}))
    assert formats.parse_graph("n 1\n") == Graph(1)
    assert formats.parse_graph("") == Graph(0)


@pytest.mark.parametrize("text", ["x y z\n", "0 0\n", "0 1\n1 0\n", "n 2\n0 5\n", "n x\n", "0 1 2\n", "-1 2\n"])
def test_parse_graph_rejects(text):
    with pytest.raises(formats.ParseError):
        formats.parse_graph(text)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))))
def test_graph_round_trip(data):
    n, edges = data
    g = Graph(n, frozenset(edges))
    text = formats.format_graph(g)
    assert formats.parse_graph(text) == g
    assert formats.format_graph(formats.parse_graph(text)) == text


@pytest.mark.parametrize("make", [f_c4, f_star, lambda: clique_daisy(2, 2, 3)], ids=["c4", "star", "daisy"])
def test_flower_round_trip(make):
    g, f = make()
    text = formats.canonical_dumps(formats.flower_to_json(f))
    back, stated = formats.flower_from_json(json.loads(text), g)
    assert back == f and set(stated) == f.x_set
    assert formats.canonical_dumps(formats.flower_to_json(back)) == text


def test_golden_flower_file_round_trips():
    g = formats.parse_graph(read("c4.txt"))
    text = read("c4_flower.json")
    f, _ = formats.flower_from_json(json.loads(text), g)
    assert formats.canonical_dumps(formats.flower_to_json(f)) == text


@pytest.mark.parametrize("bad", [
    {"k": 1},
    {"k": 1, "cycle": [{"petal": "a", "set": []}, {"cut": "c", "set": []}]},
    {"k": 1, "cycle": [{"cut": "c0", "set": []}]},
    {"k": 1, "cycle": [{"cut": "c0", "petal": "a"}, {"petal": "b"}]},
    {"k": 1, "cycle": [{"cut": "c0", "set": [99]}, {"petal": "a", "set": []}]},
    {"k": 1, "cycle": [{"cut": "c0", "set": []}, {"petal": "a", "set": ["x"]}]},
    {"k": 1, "cycle": [{"cut": "c0", "set": []}, {"petal": "a", "set": []},
                       {"cut": "c0", "set": []}, {"petal": "b", "set": []}]},
])
def test_flower_json_rejects(bad):
    g, _ = f_c4()
    with pytest.raises(formats.ParseError):
        formats.flower_from_json(bad, g)


def test_profiles_round_trip():
    g, _ = f_star()
    ps = enumerate_profiles(g, 2)
    text = formats.canonical_dumps(formats.profiles_to_json(2, ps))
    k, back = formats.profiles_from_json(json.loads(text), g)
    assert k == 2 and back == ps
    assert [p.kind for p in back] == [p.kind for p in ps]
    assert formats.canonical_dumps(formats.profiles_to_json(k, back)) == text


def test_profiles_json_rejects_foreign_separation():
    g, _ = f_star()
    data = {"k": 1, "profiles": [{"id": 0, "kind": "tangle", "chosen": [[[0, 1], [1, 2]]]}]}
    with pytest.raises(formats.ParseError):
        formats.profiles_from_json(data, g)
    with pytest.raises(formats.ParseError):
        formats.profiles_from_json({"k": 1, "profiles": [{"kind": "other"}]}, g)


def test_separations_json_shape():
    seps = enumerate_separations(Graph(3, frozenset({(0, 1), (1, 2)})), 1)
    data = formats.separations_to_json(seps, 1)
    assert data["count"] == 10 and data["max_order"] == 1
    assert [formats.separation_from_json(x) for x in data["separations"]] == seps
    assert formats.separation_to_json(Separation({2, 0}, {1})) == [[0, 2], [1]]


def test_arcs_round_trip():
    arcs, att = formats.arcs_from_json(json.loads(read("arcs.json")))
    assert arcs == ((0, 1),) and att == (2, 3)
    assert formats.canonical_dumps(formats.arcs_to_json(arcs, att)) == read("arcs.json")
    assert formats.arcs_from_json({"arcs": [[0, 1]]}) == (((0, 1),), None)
    with pytest.raises(formats.ParseError):
        formats.arcs_from_json({"arcs": [[0, True]]})


def test_atomic_write(tmp_path):
    path = tmp_path / "out.json"
    formats.atomic_write(str(path), "one\n")
    formats.atomic_write(str(path), "two\n")
    assert path.read_text() == "two\n"
    assert os.listdir(tmp_path) == ["out.json"]
    with pytest.raises(OSError):
        formats.atomic_write(str(tmp_path / "missing" / "x.json"), "x")


def test_canonical_dumps_sorted():
    assert formats.canonical_dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
