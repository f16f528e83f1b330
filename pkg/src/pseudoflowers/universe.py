"""Finite universes of vertex separations.

A separation of a finite graph is a pair ``(A, B)`` of vertex sets covering the
vertex set such that no edge joins ``A - B`` to ``B - A``.  The separations of a
graph are closed under :func:`meet`, :func:`join` and :func:`inverse`, and the
order ``|A & B|`` is symmetric and submodular.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GroundSetMismatch(ValueError):
    """Two separations do not live on the same ground set."""


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on the vertices ``0 .. vertex_count-1``."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {edge} outside vertex range")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, frozenset(edges))

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(range(self.vertex_count))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def components(self, removed: Iterable[int] = ()) -> list[frozenset]:
        """Vertex sets of the components of ``G - removed``, sorted by least vertex."""
        removed = set(removed)
        seen = set(removed)
        comps = []
        for start in range(self.vertex_count):
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def _vertex_key(vertices: frozenset) -> tuple:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class Separation:
    """An ordered pair ``(a, b)`` of vertex sets."""

    a: frozenset
    b: frozenset

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))

    @property
    def ground(self) -> frozenset:
        return self.a | self.b

    @property
    def separator(self) -> frozenset:
        return self.a & self.b

    @property
    def order(self) -> int:
        return len(self.a & self.b)

    def inverse(self) -> "Separation":
        return Separation(self.b, self.a)

    def sort_key(self) -> tuple:
        return (self.order, _vertex_key(self.a), _vertex_key(self.b))

    def __repr__(self):
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        return f"({fmt(self.a)}|{fmt(self.b)})"


def _check_same_ground(s: Separation, t: Separation) -> None:
    if s.ground != t.ground:
        raise GroundSetMismatch(f"{s!r} and {t!r} have different ground sets")


def inverse(s: Separation) -> Separation:
    return s.inverse()


def meet(s: Separation, t: Separation) -> Separation:
    _check_same_ground(s, t)
    return Separation(s.a & t.a, s.b | t.b)


def join(s: Separation, t: Separation) -> Separation:
    _check_same_ground(s, t)
    return Separation(s.a | t.a, s.b & t.b)


def leq(s: Separation, t: Separation) -> bool:
    _check_same_ground(s, t)
    return s.a <= t.a and t.b <= s.b


def order(s: Separation) -> int:
    return s.order


def is_nested(s: Separation, t: Separation) -> bool:
    _check_same_ground(s, t)
    si, ti = s.inverse(), t.inverse()
    for x in (s, si):
        for y in (t, ti):
            if leq(x, y):
                return True
    return False


def crosses(s: Separation, t: Separation) -> bool:
    return not is_nested(s, t)


def corners(s: Separation, t: Separation) -> list[Separation]:
    """All eight corners of ``s`` and ``t``.

    The s-orientation is the outer loop (``s`` then ``s*``), the t-orientation
    the inner loop (``t`` then ``t*``); for every combination the meet comes
    before the join.  Duplicates are kept, so the result always has length 8.
    """
    _check_same_ground(s, t)
    out = []
    for x in (s, s.inverse()):
        for y in (t, t.inverse()):
            out.append(meet(x, y))
            out.append(join(x, y))
    return out


def is_graph_separation(g: Graph, s: Separation) -> bool:
    if s.ground != g.vertices:
        return False
    only_a = s.a - s.b
    only_b = s.b - s.a
    adj = g.adjacency
    return not any(adj[x] & only_b for x in only_a)


def enumerate_separations(g: Graph, max_order: int) -> list[Separation]:
    """All separations of ``g`` of order at most ``max_order``, in canonical order.

    Every separation with separator ``S`` puts each component of ``g - S``
    wholly on one side, so enumerating separators and side assignments of the
    components reaches each separation exactly once.
    """
    if max_order < 0:
        raise ValueError("max_order must be non-negative")
    found = []
    for size in range(min(max_order, g.vertex_count) + 1):
        for sep in itertools.combinations(range(g.vertex_count), size):
            sep = frozenset(sep)
            comps = g.components(sep)
            for sides in itertools.product((0, 1), repeat=len(comps)):
                a = set(sep)
                b = set(sep)
                for comp, side in zip(comps, sides):
                    (b if side else a).update(comp)
                found.append(Separation(a, b))
    found.sort(key=Separation.sort_key)
    return found


def chain_supremum(chain: Sequence[Separation], graph: Graph | None = None) -> Separation:
    """Supremum of a finite chain of separations.

    The supremum has the form ``(union of A_i + X, intersection of B_i)``; for a
    finite graph ``X`` is empty and the supremum is the largest chain element.
    """
    if not chain:
        raise ValueError("empty chain")
    for s, t in itertools.combinations(chain, 2):
        if not (leq(s, t) or leq(t, s)):
            raise ValueError(f"not a chain: {s!r} and {t!r} are incomparable")
    a = frozenset().union(*(s.a for s in chain))
    b = frozenset(chain[0].b).intersection(*(s.b for s in chain))
    sup = Separation(a, b)
    assert sup in chain, "finite chain supremum must be attained"
    if graph is not None:
        assert is_graph_separation(graph, sup)
    return sup
