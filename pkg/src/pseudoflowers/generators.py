"""Deterministic test instances: daisies, anemones and standard graphs."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .flower import PseudoFlower, anemone_from_groups, make_flower
from .universe import Graph


def gen_clique(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph.from_edges(((u, v) for u in range(n) for v in range(u + 1, n)), n)


def gen_grid(m: int, n: int) -> Graph:
    """``m`` rows by ``n`` columns, vertex ``r*n + c``."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph.from_edges(edges, m * n)


def gen_path(n: int) -> Graph:
    return Graph.from_edges(((j, j + 1) for j in range(n - 1)), n)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(((j, (j + 1) % n) for j in range(n)), n)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


@dataclass(frozen=True)
class DaisySpec:
    base: Graph
    arcs: tuple
    x_size: int
    copies: int = 3
    attachment: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def k(self) -> int:
        return self.x_size + 2 * self.n


def _check_daisy(spec: DaisySpec) -> tuple:
    base = spec.base
    if spec.copies < 3:
        raise ValueError("a daisy needs at least three copies")
    if spec.x_size < 0:
        raise ValueError("x_size must be non-negative")
    if not base.is_connected():
        raise ValueError("base graph is disconnected")
    seen = set()
    for arc in spec.arcs:
        if len(arc) < 2:
            raise ValueError(f"arc {arc!r} needs at least two vertices")
        if seen & set(arc) or len(set(arc)) != len(arc):
            raise ValueError("arcs must be vertex-disjoint paths")
        seen |= set(arc)
        for u, v in zip(arc, arc[1:]):
            if (min(u, v), max(u, v)) not in base.edges:
                raise ValueError(f"arc {arc!r} is not a path: {u}-{v} is no edge")
    ends = {a[0] for a in spec.arcs} | {a[-1] for a in spec.arcs}
    if spec.attachment is None:
        attach = tuple(v for v in range(base.vertex_count) if v not in ends)[: spec.x_size]
    else:
        attach = tuple(sorted(set(spec.attachment)))
    if len(attach) != spec.x_size:
        raise ValueError(f"attachment set needs {spec.x_size} vertices, got {len(attach)}")
    if set(attach) & ends:
        raise ValueError("attachment set contains a first or last arc vertex")
    conn = nx.node_connectivity(to_networkx(base)) if base.vertex_count > 1 else 0
    if conn < spec.k:
        raise ValueError(f"base graph is {conn}-connected, need {spec.k}")
    return attach


def gen_daisy(spec: DaisySpec) -> tuple[Graph, PseudoFlower]:
    """Cyclic daisy built from ``spec.copies`` copies of the base graph.

    The last vertex of every arc in copy ``j`` is identified with the first
    vertex of the same arc in copy ``j+1`` (indices mod ``copies``), and a
    fresh set ``X`` is joined to the attachment vertices of every copy.
    Petal ``i{j}`` is the vertex set of copy ``j``; cutpoint ``c{j}`` holds the
    seam vertices shared by copies ``j-1`` and ``j``.
    """
    attach = _check_daisy(spec)
    base, d = spec.base, spec.copies
    firsts = {a[0]: t for t, a in enumerate(spec.arcs)}
    lasts = {a[-1]: t for t, a in enumerate(spec.arcs)}

    ids: dict[tuple[int, int], int] = {}
    counter = 0
    seam = [[None] * spec.n for _ in range(d)]
    for j in range(d):
        for t in range(spec.n):
            seam[j][t] = counter
            counter += 1
    for j in range(d):
        for b in range(base.vertex_count):
            if b in firsts:
                ids[j, b] = seam[j][firsts[b]]
            elif b in lasts:
                ids[j, b] = seam[(j + 1) % d][lasts[b]]
            else:
                ids[j, b] = counter
                counter += 1
    xs = list(range(counter, counter + spec.x_size))
    counter += spec.x_size

    edges = set()
    for j in range(d):
        for u, v in base.edges:
            edges.add((ids[j, u], ids[j, v]))
        for b in attach:
            for x in xs:
                edges.add((ids[j, b], x))
    g = Graph.from_edges(edges, counter)

    entries = []
    for j in range(d):
        entries.append((f"c{j}", True, seam[j]))
        entries.append((f"i{j}", False, {ids[j, b] for b in range(base.vertex_count)}))
    return g, make_flower(spec.k, entries, g.vertices)


def clique_daisy(n: int, a: int, d: int) -> tuple[Graph, PseudoFlower]:
    """Daisy on the clique ``K_{a+2n+1}`` with single-edge arcs ``(2t, 2t+1)``."""
    k = a + 2 * n
    base = gen_clique(k + 1)
    arcs = tuple((2 * t, 2 * t + 1) for t in range(n))
    return gen_daisy(DaisySpec(base, arcs, a, d))


def figure_daisy(copies: int = 3) -> tuple[Graph, PseudoFlower]:
    """``K6`` base, one single-edge arc, two attachment vertices: ``k = 4``."""
    return gen_daisy(DaisySpec(gen_clique(6), ((0, 1),), 2, copies, (2, 3)))


def gen_anemone(g: Graph, x, grouping=None) -> PseudoFlower:
    """Anemone whose petals are groups of components of ``g - x``.

    ``grouping`` lists groups of component indices, components being sorted by
    their least vertex; the default puts every component in its own group.
    """
    x = frozenset(x)
    comps = g.components(x)
    if grouping is None:
        grouping = [[c] for c in range(len(comps))]
    used = [c for grp in grouping for c in grp]
    if sorted(used) != list(range(len(comps))):
        raise ValueError("grouping must partition the components of g - x")
    if len(grouping) < 2:
        raise ValueError("an anemone needs at least two groups")
    groups = [frozenset().union(*(comps[c] for c in grp)) for grp in grouping]
    return anemone_from_groups(len(x), groups, g.vertices)


def triple_triangle() -> Graph:
    """Three triangles ``{0,1,2}``, ``{3,4,5}``, ``{6,7,8}`` all joined to vertex 9."""
    edges = []
    for t in range(3):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        edges += [(a, b), (b, c), (a, c), (a, 9), (b, 9), (c, 9)]
    return Graph.from_edges(edges, 10)


def f_star() -> tuple[Graph, PseudoFlower]:
    g = triple_triangle()
    return g, gen_anemone(g, {9})


def f_c4() -> tuple[Graph, PseudoFlower]:
    g = gen_cycle(4)
    f = make_flower(2, [("c0", True, {0}), ("a", False, {0, 1, 2}),
                        ("c1", True, {2}), ("b", False, {0, 2, 3})], g.vertices)
    return g, f
