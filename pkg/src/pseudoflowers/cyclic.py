"""Finite cyclic orders, cuts and cycle completions.

A finite cyclic order is stored as the sequence of its elements read around
the cycle, rotated so that the least label comes first.  A cycle completion of
an index order ``I`` interleaves ``I`` with one cutpoint between every pair of
cyclic neighbours.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Mapping, Sequence

Label = Hashable


class LabelError(ValueError):
    """A label is not an element of the cyclic order it was looked up in."""


def label_key(x: Any) -> tuple:
    """Total sort key for the label types used in this package."""
    if isinstance(x, bool):
        return (3, 0, repr(x))
    if isinstance(x, int):
        return (0, x, "")
    if isinstance(x, str):
        return (1, 0, x)
    if isinstance(x, LinearCut):
        return (2, 0, tuple(label_key(e) for e in x.elements))
    return (3, 0, repr(x))


class _CyclicBase:
    """Shared lookups for anything with an ``elements`` sequence."""

    elements: tuple

    @cached_property
    def position(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.position

    def pos(self, x) -> int:
        try:
            return self.position[x]
        except (KeyError, TypeError):
            raise LabelError(f"unknown label {x!r}") from None


@dataclass(frozen=True)
class CyclicOrder(_CyclicBase):
    """A finite cyclic order; the sequence is rotated to start at its least label."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate labels in {elems!r}")
        if elems:
            start = min(range(len(elems)), key=lambda i: label_key(elems[i]))
            elems = elems[start:] + elems[:start]
        object.__setattr__(self, "elements", elems)


@dataclass(frozen=True)
class LinearCut:
    """A linear order inducing a cyclic order; for finite orders, a rotation."""

    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def induced(self) -> CyclicOrder:
        return CyclicOrder(self.elements)

    def restrict(self, subset) -> tuple:
        return tuple(x for x in self.elements if x in subset)

    def __repr__(self):
        return "<" + ",".join(map(str, self.elements)) + ">"


@dataclass(frozen=True)
class CycleCompletion(_CyclicBase):
    """A cyclic sequence strictly alternating cutpoints and index elements.

    The stored cycle starts at the least cutpoint label.
    """

    cycle: tuple
    cut_set: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        cyc = tuple(self.cycle)
        cuts = frozenset(self.cut_set)
        if len(cyc) < 2 or len(cyc) % 2:
            raise ValueError("a cycle completion needs an even number (>= 2) of labels")
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"duplicate labels in {cyc!r}")
        if not cuts <= set(cyc):
            raise ValueError("cutpoints not on the cycle")
        flags = [x in cuts for x in cyc]
        first = flags.index(True) if True in flags else 0
        cyc = cyc[first:] + cyc[:first]
        flags = flags[first:] + flags[:first]
        if any(flag != (i % 2 == 0) for i, flag in enumerate(flags)):
            raise ValueError("cycle must alternate cutpoints and index elements")
        cut_positions = range(0, len(cyc), 2)
        start = min(cut_positions, key=lambda i: label_key(cyc[i]))
        cyc = cyc[start:] + cyc[:start]
        object.__setattr__(self, "cycle", cyc)
        object.__setattr__(self, "cut_set", cuts)

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[Label, bool]]) -> "CycleCompletion":
        entries = list(entries)
        return cls(tuple(x for x, _ in entries), frozenset(x for x, cut in entries if cut))

    @property
    def elements(self) -> tuple:
        return self.cycle

    def index(self) -> tuple:
        return self.cycle[1::2]

    def cutpoints(self) -> tuple:
        return self.cycle[0::2]

    def index_order(self) -> CyclicOrder:
        return CyclicOrder(self.index())

    def is_cutpoint(self, x) -> bool:
        self.pos(x)
        return x in self.cut_set

    def as_cyclic_order(self) -> CyclicOrder:
        return CyclicOrder(self.cycle)


def _positions(z, *labels) -> list[int]:
    return [z.pos(x) for x in labels]


def cyclic_triple(z, a, b, c) -> bool:
    """True iff ``a, b, c`` are distinct and ``b`` comes strictly before ``c`` reading from ``a``."""
    pa, pb, pc = _positions(z, a, b, c)
    if len({pa, pb, pc}) < 3:
        return False
    n = len(z)
    return (pb - pa) % n < (pc - pa) % n


def interval(z, a, b, closed_left: bool = True, closed_right: bool = True) -> list:
    """``]a,b[`` with the endpoints added per the flags, in cyclic order from ``a``."""
    pa, pb = _positions(z, a, b)
    n = len(z)
    elems = z.elements
    if pa == pb:
        return [a] if (closed_left or closed_right) else []
    inner = [elems[(pa + j) % n] for j in range(1, (pb - pa) % n)]
    out = [a] if closed_left else []
    out.extend(inner)
    if closed_right:
        out.append(b)
    return out


def is_interval(z, subset) -> bool:
    subset = set(subset)
    for x in subset:
        z.pos(x)
    n = len(z)
    if not subset or len(subset) == n:
        return True
    elems = z.elements
    starts = sum(1 for i in range(n) if elems[i] in subset and elems[i - 1] not in subset)
    return starts == 1


def successor(z, a):
    if len(z) < 2:
        raise ValueError("successor needs at least two elements")
    return z.elements[(z.pos(a) + 1) % len(z)]


def predecessor(z, a):
    if len(z) < 2:
        raise ValueError("predecessor needs at least two elements")
    return z.elements[(z.pos(a) - 1) % len(z)]


def triples(z) -> set:
    """The full ternary relation of ``z``."""
    return {t for t in itertools.permutations(z.elements, 3) if cyclic_triple(z, *t)}


def cuts(z: CyclicOrder) -> list[LinearCut]:
    """All cuts of a finite cyclic order: one rotation starting at each element."""
    if not len(z):
        raise ValueError("empty cyclic order has no cuts")
    e = z.elements
    return [LinearCut(e[i:] + e[:i]) for i in range(len(e))]


def _fresh_prefix(taken: set, base: str, count: int) -> str:
    prefix = base
    while any(f"{prefix}{j}" in taken for j in range(count)):
        prefix += "_"
    return prefix


def completion(i: CyclicOrder) -> CycleCompletion:
    """The interleaving ``[c0, i0, c1, i1, ...]`` with fresh cutpoint labels."""
    if len(i) < 2:
        raise ValueError("a cycle completion needs at least two index elements")
    prefix = _fresh_prefix(set(i.elements), "c", len(i))
    cyc = []
    for j, x in enumerate(i.elements):
        cyc.append(f"{prefix}{j}")
        cyc.append(x)
    return CycleCompletion(tuple(cyc), frozenset(cyc[0::2]))


def completion_via_cuts(i: CyclicOrder, cut: LinearCut | None = None) -> CycleCompletion:
    """Cycle completion built from the initial segments of a cut.

    For a cut ``L`` the linear order ``D(L)`` on elements and initial segments
    puts ``x <= y`` when both are elements ordered by ``L``, both are segments
    ordered by inclusion, ``x`` lies in segment ``y``, or element ``y`` lies
    outside segment ``x``.  Dropping the full segment and reading the rest
    cyclically gives ``Z(L)``; each remaining segment ``T`` is renamed to the
    cut ``L|(S - T) + L|T``.  The cutpoints of the result are those cuts.
    """
    if not len(i):
        raise ValueError("empty cyclic order")
    if cut is None:
        cut = cuts(i)[0]
    if cut.induced() != i:
        raise ValueError(f"{cut!r} is not a cut of {i!r}")
    seq = cut.elements
    rank = {x: r for r, x in enumerate(seq)}
    segments = [frozenset(seq[:j]) for j in range(len(seq) + 1)]
    items = [("elem", x) for x in seq] + [("seg", s) for s in segments]

    def d_leq(x, y) -> bool:
        kx, vx = x
        ky, vy = y
        if kx == "elem" and ky == "elem":
            return rank[vx] <= rank[vy]
        if kx == "seg" and ky == "seg":
            return vx <= vy
        if kx == "elem":
            return vx in vy
        return vy not in vx

    def compare(x, y) -> int:
        if x == y:
            return 0
        return -1 if d_leq(x, y) else 1

    d_order = sorted(items, key=functools.cmp_to_key(compare))
    full = ("seg", segments[-1])
    d_prime = [x for x in d_order if x != full]

    def eta(item):
        kind, value = item
        if kind == "elem":
            return value
        return LinearCut(tuple(x for x in seq if x not in value) + tuple(x for x in seq if x in value))

    relabelled = [eta(x) for x in d_prime]
    cut_labels = frozenset(eta(x) for x in d_prime if x[0] == "seg")
    return CycleCompletion(tuple(relabelled), cut_labels)


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    """A total map between two cyclic orders (or cycle completions)."""

    domain: Any
    codomain: Any
    mapping: Mapping

    def __call__(self, x):
        return self.mapping[x]

    def __eq__(self, other):
        return (
            isinstance(other, MonotoneMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and dict(self.mapping) == dict(other.mapping)
        )

    __hash__ = None

    def is_total(self) -> bool:
        return set(self.mapping) == set(self.domain.elements) and all(
            y in self.codomain for y in self.mapping.values()
        )

    def is_surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.codomain.elements)

    def is_monotone(self) -> bool:
        return is_monotone(self.mapping, self.domain, self.codomain)

    def restrict(self, labels) -> dict:
        return {x: self.mapping[x] for x in labels}


def is_monotone(mapping: Mapping, domain, codomain) -> bool:
    """``f(v)`` strictly between ``f(u)`` and ``f(w)`` implies ``v`` between ``u`` and ``w``."""
    for u, v, w in itertools.permutations(domain.elements, 3):
        if cyclic_triple(codomain, mapping[u], mapping[v], mapping[w]) and not cyclic_triple(domain, u, v, w):
            return False
    return True


def is_mirror_monotone(mapping: Mapping, domain, codomain) -> bool:
    for r, s, t in itertools.permutations(domain.elements, 3):
        if cyclic_triple(codomain, mapping[r], mapping[s], mapping[t]) and not cyclic_triple(domain, t, s, r):
            return False
    return True


def classify_map(mapping: Mapping, domain, codomain) -> str:
    """``"monotone"``, ``"mirror_monotone"`` or ``"neither"``, by checking every triple."""
    if is_monotone(mapping, domain, codomain):
        return "monotone"
    if is_mirror_monotone(mapping, domain, codomain):
        return "mirror_monotone"
    return "neither"


def search_maps(domain, codomain, fixed: Mapping | None = None, *, surjective: bool = True,
                iso: bool = False) -> list[dict]:
    """Exhaustive backtracking search for monotone maps (or isomorphisms).

    Each new assignment ``x -> y`` is checked against every ordered pair of
    already assigned elements; by cyclicity this covers every triple that
    contains ``x``.
    """
    fixed = dict(fixed or {})
    dom = list(domain.elements)
    cod = list(codomain.elements)
    free = [x for x in dom if x not in fixed]
    results = []

    def consistent(assign: dict, x) -> bool:
        fx = assign[x]
        others = [u for u in assign if u != x]
        for u, w in itertools.permutations(others, 2):
            img = cyclic_triple(codomain, assign[u], fx, assign[w])
            pre = cyclic_triple(domain, u, x, w)
            if iso:
                if img != pre:
                    return False
            elif img and not pre:
                return False
        return True

    assign = {}
    for x, y in fixed.items():
        assign[x] = y
        if not consistent(assign, x):
            return []
    if iso and len(set(assign.values())) < len(assign):
        return []

    def rec(pos: int):
        if pos == len(free):
            if surjective and set(assign.values()) != set(cod):
                return
            results.append(dict(assign))
            return
        if surjective:
            missing = len(set(cod) - set(assign.values()))
            if missing > len(free) - pos:
                return
        x = free[pos]
        used = set(assign.values()) if iso else ()
        for y in cod:
            if y in used:
                continue
            assign[x] = y
            if consistent(assign, x):
                rec(pos + 1)
            del assign[x]

    rec(0)
    return results


def find_isomorphisms(c1, c2, fixed: Mapping | None = None) -> list[dict]:
    if len(c1) != len(c2):
        return []
    return search_maps(c1, c2, fixed, surjective=True, iso=True)


def extend_monotone(f: MonotoneMap, domain_completion: CycleCompletion | None = None,
                    codomain_completion: CycleCompletion | None = None) -> MonotoneMap:
    """Unique surjective monotone extension of ``f: I' -> I`` to the completions.

    A cutpoint whose two index neighbours share an image goes to that image;
    otherwise it goes to the cutpoint of ``C(I)`` lying between the two images.
    """
    src, dst = f.domain, f.codomain
    if len(dst) < 2:
        raise ValueError("codomain needs at least two elements")
    if not f.is_total():
        raise ValueError("map is not total")
    if not f.is_surjective():
        raise ValueError("map is not surjective")
    if not f.is_monotone():
        raise ValueError("map is not monotone")
    # with a two-element codomain monotonicity is vacuous; a map winding round
    # more than once has non-interval fibres and no monotone extension
    for y in dst.elements:
        if not is_interval(src, [x for x in src.elements if f.mapping[x] == y]):
            raise ValueError(f"fibre of {y!r} is not an interval, no monotone extension exists")
    cdom = domain_completion or completion(src)
    ccod = codomain_completion or completion(dst)
    if cdom.index_order() != src or ccod.index_order() != dst:
        raise ValueError("completions do not match the index orders")
    mapping = {}
    for x in cdom.elements:
        if not cdom.is_cutpoint(x):
            mapping[x] = f.mapping[x]
            continue
        before = f.mapping[predecessor(cdom, x)]
        after = f.mapping[successor(cdom, x)]
        if before == after:
            mapping[x] = before
            continue
        upper = successor(ccod, before)
        lower = predecessor(ccod, after)
        if upper != lower:
            raise ValueError("map is not monotone around a cutpoint")
        mapping[x] = upper
    return MonotoneMap(cdom, ccod, mapping)


def cutpoint_preimage(F: MonotoneMap, v) -> Label:
    """The unique preimage of codomain cutpoint ``v``; it is a cutpoint of the domain."""
    if not F.codomain.is_cutpoint(v):
        raise ValueError(f"{v!r} is not a cutpoint of the codomain")
    pre = [x for x, y in F.mapping.items() if y == v]
    if len(pre) != 1:
        raise ValueError(f"cutpoint {v!r} has {len(pre)} preimages")
    (w,) = pre
    if not F.domain.is_cutpoint(w):
        raise ValueError(f"preimage {w!r} of {v!r} is not a cutpoint")
    return w


def preimage(F: MonotoneMap, targets) -> set:
    targets = set(targets)
    return {x for x, y in F.mapping.items() if y in targets}


def all_cyclic_orders(labels: Sequence) -> list[CyclicOrder]:
    """Every cyclic order on ``labels`` (the first label is held fixed)."""
    labels = list(labels)
    if len(labels) <= 1:
        return [CyclicOrder(tuple(labels))]
    head, rest = labels[0], labels[1:]
    return [CyclicOrder((head,) + p) for p in itertools.permutations(rest)]
