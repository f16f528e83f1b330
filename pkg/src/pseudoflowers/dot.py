"""Graphviz rendering of a pseudoflower on its graph."""
from __future__ import annotations

from .flower import PseudoFlower
from .universe import Graph


def _quote(label) -> str:
    return '"' + str(label).replace('"', '\\"') + '"'


def render_dot(g: Graph, f: PseudoFlower) -> str:
    """Petals become clusters, ``X`` its own cluster, cutpoint vertices get a double border.

    A vertex is drawn in at most one cluster: cutpoint vertices float between
    clusters and any other shared vertex goes to the first petal holding it.
    """
    cut_vertices = frozenset().union(*(f.P(v) for v in f.cutpoints()))
    placed = set(cut_vertices)
    out = ["graph pseudoflower {", f"  label={_quote(f'k={f.k}')};", "  node [shape=circle];"]
    for n, i in enumerate(f.index()):
        members = sorted(f.P(i) - placed)
        placed.update(members)
        out.append(f"  subgraph cluster_petal_{n} {{")
        out.append(f"    label={_quote(i)};")
        out.extend(f"    {v};" for v in members)
        out.append("  }")
    out.append("  subgraph cluster_X {")
    out.append('    label="X"; style=filled; fillcolor=lightgrey;')
    out.extend(f"    {v};" for v in sorted(f.x_set))
    out.append("  }")
    for v in sorted(cut_vertices):
        owners = ",".join(str(c) for c in f.cutpoints() if v in f.P(c))
        out.append(f"  {v} [peripheries=2, xlabel={_quote(owners)}];")
    for v in sorted(g.vertices - placed - f.x_set):
        out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    out.append("}")
    return "\n".join(out) + "\n"
