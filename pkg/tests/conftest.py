import functools

import networkx as nx
import pytest

from pseudoflowers.flower import GuardExceeded, concatenate
from pseudoflowers.generators import (
    clique_daisy,
    f_c4,
    f_star,
    figure_daisy,
    gen_anemone,
)
from pseudoflowers.profiles import enumerate_profiles
from pseudoflowers.universe import Graph


def atlas_graphs(max_vertices):
    """Every graph of the networkx atlas with 1..max_vertices vertices."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_vertices:
            out.append(Graph.from_edges(h.edges(), n))
    return out


def star_of_triangles(arms=4):
    """``arms`` triangles on 0..3*arms-1, every vertex joined to one centre."""
    c = 3 * arms
    edges = []
    for t in range(arms):
        a, b, d = 3 * t, 3 * t + 1, 3 * t + 2
        edges += [(a, b), (b, d), (a, d), (a, c), (b, c), (d, c)]
    return Graph.from_edges(edges, c + 1)


@functools.lru_cache(maxsize=None)
def star4_instance():
    """Four-triangle star, triangles 0 and 1 glued into one petal: 3 petals, 4 tangles."""
    g = star_of_triangles(4)
    f = gen_anemone(g, {12}, [[0, 1], [2], [3]])
    return g, f, tuple(enumerate_profiles(g, 2))


@functools.lru_cache(maxsize=None)
def daisy3_instance():
    g, f = figure_daisy(3)
    return g, f, tuple(enumerate_profiles(g, f.k + 1, max_pairs=10_000))


@functools.lru_cache(maxsize=None)
def daisy4_instance():
    g, f = figure_daisy(4)
    return g, f, tuple(enumerate_profiles(g, f.k + 1, max_pairs=20_000))


@functools.lru_cache(maxsize=None)
def daisy4_coarse_instance():
    """Four-copy figure daisy concatenated to three seams, so one petal spans two copies."""
    g, f, ps = daisy4_instance()
    return g, concatenate(f, {"c0", "c1", "c2"}), ps


@functools.lru_cache(maxsize=None)
def grid_profiles(params, max_pairs=5000):
    """Profiles of order k+1 for a daisy-grid entry, or None above the size guard."""
    (_, g, f), = [x for x in daisy_grid() if x[0] == params]
    try:
        return tuple(enumerate_profiles(g, f.k + 1, max_pairs=max_pairs))
    except GuardExceeded:
        return None


def daisy_grid():
    """All clique-based daisies for d in {3,4,5}, n in {1,2}, a in {0,2}."""
    out = []
    for d in (3, 4, 5):
        for n in (1, 2):
            for a in (0, 2):
                g, f = clique_daisy(n, a, d)
                out.append(((d, n, a), g, f))
    return out


def anemone_grid():
    """Anemones from stars of triangles with every grouping into >= 2 blocks of consecutive arms."""
    out = []
    for arms in (2, 3, 4):
        g = star_of_triangles(arms)
        for cut in range(1, 2 ** (arms - 1)):
            groups, cur = [], [0]
            for t in range(1, arms):
                if cut >> (t - 1) & 1:
                    groups.append(cur)
                    cur = [t]
                else:
                    cur.append(t)
            groups.append(cur)
            out.append(((arms, tuple(map(tuple, groups))), g, gen_anemone(g, {3 * arms}, groups)))
    return out


@pytest.fixture(scope="session")
def c4():
    return f_c4()


@pytest.fixture(scope="session")
def star():
    return f_star()


@pytest.fixture(scope="session")
def star4():
    return star4_instance()


@pytest.fixture(scope="session")
def daisy3():
    return daisy3_instance()


@pytest.fixture(scope="session")
def daisy4_coarse():
    return daisy4_coarse_instance()
