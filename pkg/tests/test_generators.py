import itertools

import networkx as nx
import pytest

from pseudoflowers.flower import classify, find_witnesses, interval_separation, is_flower, validate
from pseudoflowers.generators import (
    DaisySpec,
    clique_daisy,
    f_star,
    figure_daisy,
    gen_anemone,
    gen_clique,
    gen_cycle,
    gen_daisy,
    gen_grid,
    gen_path,
    to_networkx,
    triple_triangle,
)
from pseudoflowers.universe import Graph

from conftest import daisy_grid, star_of_triangles


def test_standard_graphs():
    assert len(gen_clique(4).edges) == 6
    assert gen_cycle(4).edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    assert gen_grid(2, 2).edges == frozenset({(0, 1), (2, 3), (0, 2), (1, 3)})
    assert nx.is_isomorphic(to_networkx(gen_grid(2, 2)), to_networkx(gen_cycle(4)))
    assert len(gen_grid(3, 3).edges) == 12
    assert gen_path(3).edges == frozenset({(0, 1), (1, 2)})
    assert nx.is_isomorphic(to_networkx(gen_grid(3, 4)), nx.grid_2d_graph(3, 4))


def test_figure_daisy_shape():
    g, f = figure_daisy()
    assert f.k == 4 and len(f.index()) == 3 and len(f.x_set) == 2
    assert g.vertex_count == 3 * 5 + 2
    assert validate(g, f).valid and is_flower(f)
    assert all(len(f.P(v)) == 1 for v in f.cutpoints())


@pytest.mark.parametrize("params,g,f", daisy_grid(), ids=lambda p: str(p) if isinstance(p, tuple) else "")
def test_daisy_grid(params, g, f):
    d, n, a = params
    assert f.k == a + 2 * n
    assert len(f.index()) == d and len(f.x_set) == a
    assert validate(g, f).valid
    assert classify(f) == "pseudodaisy" and is_flower(f)
    assert all(len(f.P(v)) == n for v in f.cutpoints())
    for v, w in itertools.permutations(f.cutpoints(), 2):
        assert interval_separation(f, v, w).order == f.k


def test_daisy_rejects_bad_specs():
    k5 = gen_clique(5)
    with pytest.raises(ValueError):
        gen_daisy(DaisySpec(k5, ((0, 1), (1, 2)), 1))
    with pytest.raises(ValueError):
        gen_daisy(DaisySpec(k5, ((0, 1),), 1, copies=2))
    with pytest.raises(ValueError):
        gen_daisy(DaisySpec(Graph.from_edges([(0, 1), (2, 3)], 4), ((0, 1),), 0))
    with pytest.raises(ValueError):
        gen_daisy(DaisySpec(k5, ((0, 1),), 1, attachment=(0,)))
    # a path is not 3-connected
    with pytest.raises(ValueError):
        gen_daisy(DaisySpec(gen_path(5), ((0, 1),), 1))


def test_star_from_generator():
    g, f = f_star()
    assert g == triple_triangle()
    assert f.k == 1 and f.x_set == {9}
    assert [f.P(i) for i in f.index()] == [{0, 1, 2}, {3, 4, 5}, {6, 7, 8}]


def test_two_group_anemone_always_valid():
    g = star_of_triangles(4)
    for cut in range(1, 4):
        f = gen_anemone(g, {12}, [list(range(cut)), list(range(cut, 4))])
        assert validate(g, f).valid and len(f.index()) == 2


def test_refinement_is_an_extension():
    g = star_of_triangles(4)
    coarse = gen_anemone(g, {12}, [[0, 1], [2, 3]])
    fine = gen_anemone(g, {12})
    assert find_witnesses(coarse, fine)
    assert not find_witnesses(fine, coarse)


def test_anemone_rejects_bad_grouping():
    g = star_of_triangles(3)
    with pytest.raises(ValueError):
        gen_anemone(g, {9}, [[0, 1, 2]])
    with pytest.raises(ValueError):
        gen_anemone(g, {9}, [[0], [1]])


def test_daisy_is_deterministic():
    assert clique_daisy(2, 2, 4) == clique_daisy(2, 2, 4)
