"""k-pseudoflowers over a cycle completion.

A pseudoflower assigns a vertex set ``P_z`` to every label of a cycle
completion ``C(I)``.  The residual set ``X`` is whatever no ``P_z`` covers, the
interval set of cutpoints ``v, w`` is ``V(v,w) = X + union of P_z for z in
[v,w]`` and the interval separation is ``S(v,w) = (V(v,w), V(w,v))``.  The
petal separation of an index ``i`` is ``S(s(i), p(i))``, so the petal sits on
the second side.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping

from .cyclic import (
    CycleCompletion,
    LabelError,
    MonotoneMap,
    extend_monotone,
    interval,
    is_interval,
    is_monotone,
    label_key,
    predecessor,
    search_maps,
    successor,
)
from .universe import Graph, Separation, is_graph_separation

WITNESS_SEARCH_LIMIT = 8


class InvalidFlower(ValueError):
    """Raised when an operation needs a valid pseudoflower and did not get one."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


class GuardExceeded(RuntimeError):
    """A desk-scale size guard was hit."""


@dataclass(frozen=True, eq=False)
class PseudoFlower:
    k: int
    completion: CycleCompletion
    petal_sets: Mapping
    ground: frozenset

    def __post_init__(self):
        sets = {z: frozenset(p) for z, p in dict(self.petal_sets).items()}
        labels = set(self.completion.elements)
        missing = labels - set(sets)
        if missing:
            raise LabelError(f"no vertex set for labels {sorted(missing, key=label_key)!r}")
        extra = set(sets) - labels
        if extra:
            raise LabelError(f"vertex sets for unknown labels {sorted(extra, key=label_key)!r}")
        object.__setattr__(self, "petal_sets", sets)
        object.__setattr__(self, "ground", frozenset(self.ground))
        stray = frozenset().union(*sets.values()) - self.ground
        if stray:
            raise ValueError(f"vertices {sorted(stray)} outside the ground set")

    def _key(self):
        return (self.k, self.completion, self.ground,
                frozenset(self.petal_sets.items()))

    def __eq__(self, other):
        return isinstance(other, PseudoFlower) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        parts = []
        for z in self.completion.cycle:
            mark = "|" if z in self.completion.cut_set else ""
            parts.append(f"{mark}{z}:{sorted(self.petal_sets[z])}")
        return f"PseudoFlower(k={self.k}, X={sorted(self.x_set)}, [{' '.join(parts)}])"

    @cached_property
    def x_set(self) -> frozenset:
        return self.ground - frozenset().union(*self.petal_sets.values())

    def index(self) -> tuple:
        return self.completion.index()

    def cutpoints(self) -> tuple:
        return self.completion.cutpoints()

    def P(self, z) -> frozenset:
        return self.petal_sets[z]

    def neighbours(self, i) -> tuple:
        """``(p(i), s(i))``: the cutpoints before and after index ``i``."""
        if self.completion.is_cutpoint(i):
            raise ValueError(f"{i!r} is a cutpoint, not an index")
        return predecessor(self.completion, i), successor(self.completion, i)

    def relabel(self, mapping: Mapping) -> "PseudoFlower":
        cyc = tuple(mapping.get(z, z) for z in self.completion.cycle)
        cuts = frozenset(mapping.get(z, z) for z in self.completion.cut_set)
        sets = {mapping.get(z, z): p for z, p in self.petal_sets.items()}
        return PseudoFlower(self.k, CycleCompletion(cyc, cuts), sets, self.ground)


def make_flower(k: int, entries: Iterable[tuple[Any, bool, Iterable[int]]], ground) -> PseudoFlower:
    """Build a flower from ``(label, is_cut, vertex_set)`` entries in cycle order."""
    entries = list(entries)
    comp = CycleCompletion.from_entries((z, cut) for z, cut, _ in entries)
    return PseudoFlower(k, comp, {z: frozenset(p) for z, _, p in entries}, frozenset(ground))


def _require_cutpoint(f: PseudoFlower, v) -> None:
    if not f.completion.is_cutpoint(v):
        raise ValueError(f"{v!r} is not a cutpoint")


def _interval_set(f: PseudoFlower, v, w) -> frozenset:
    out = set(f.x_set)
    for z in interval(f.completion, v, w):
        out |= f.petal_sets[z]
    return frozenset(out)


def interval_set(f: PseudoFlower, v, w) -> frozenset:
    """``V(v,w)`` for distinct cutpoints ``v, w``."""
    _require_cutpoint(f, v)
    _require_cutpoint(f, w)
    if v == w:
        raise ValueError("interval set needs distinct cutpoints")
    return _interval_set(f, v, w)


def interval_separation(f: PseudoFlower, v, w) -> Separation:
    """``S(v,w) = (V(v,w), V(w,v))``."""
    return Separation(interval_set(f, v, w), interval_set(f, w, v))


def petal_separation(f: PseudoFlower, i) -> Separation:
    """``S(i) = S(s(i), p(i))``; the petal ``P_i + X`` is the second side."""
    p, s = f.neighbours(i)
    return interval_separation(f, s, p)


def interval_separations(f: PseudoFlower) -> dict:
    """All ``S(v,w)`` over ordered pairs of distinct cutpoints."""
    cuts = f.cutpoints()
    return {(v, w): interval_separation(f, v, w) for v, w in itertools.permutations(cuts, 2)}


def displayed(f: PseudoFlower) -> set:
    return set(interval_separations(f).values())


@dataclass(frozen=True)
class ClauseResult:
    clause: int
    code: str
    passed: bool
    counterexample: tuple = ()
    message: str = ""


@dataclass
class ValidationReport:
    clauses: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.clauses)

    def failures(self) -> list:
        return [c for c in self.clauses if not c.passed]

    def failed_clauses(self) -> set:
        return {c.clause for c in self.failures()}

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "clauses": [
                {
                    "clause": c.clause,
                    "code": c.code,
                    "passed": c.passed,
                    "counterexample": [str(x) for x in c.counterexample],
                    "message": c.message,
                }
                for c in self.clauses
            ],
        }


def validate(g: Graph, f: PseudoFlower, stated_x: Iterable[int] | None = None) -> ValidationReport:
    """Check every clause of the pseudoflower definition and report all failures.

    Clause 0 covers structure (ground set, index size, a stated ``X``);
    clauses 1 to 4 are, in order, cutpoint size, interval separations,
    petal containment and uniqueness of minimal petals.
    """
    rep = ValidationReport()
    add = rep.clauses.append
    x = f.x_set

    ok = f.ground == g.vertices
    add(ClauseResult(0, "GROUND", ok, (), "" if ok else "vertex sets do not live on the graph's vertex set"))
    ok = len(f.index()) >= 2
    add(ClauseResult(0, "INDEX_SIZE", ok, (), "" if ok else "index set has fewer than two elements"))
    if stated_x is not None:
        ok = frozenset(stated_x) == x
        add(ClauseResult(0, "X_MISMATCH", ok, (), "" if ok else f"stated X differs from derived X={sorted(x)}"))

    diff = f.k - len(x)
    parity_ok = diff >= 0 and diff % 2 == 0
    add(ClauseResult(1, "PARITY", parity_ok, (),
                     "" if parity_ok else f"k - |X| = {diff} is not a non-negative even number"))
    size_bad = ()
    if parity_ok:
        for v in f.cutpoints():
            if len(f.P(v)) != diff // 2:
                size_bad = (v,)
                break
    add(ClauseResult(1, "CUTPOINT_SIZE", parity_ok and not size_bad, size_bad,
                     "" if not size_bad else f"|P_{size_bad[0]}| != {diff // 2}"))

    sep_bad = order_bad = separator_bad = ()
    if f.ground == g.vertices:
        for (v, w), s in interval_separations(f).items():
            if not sep_bad and not is_graph_separation(g, s):
                sep_bad = (v, w)
            if not order_bad and s.order > f.k:
                order_bad = (v, w)
            if not separator_bad and s.separator != f.P(v) | f.P(w) | x:
                separator_bad = (v, w)
    else:
        sep_bad = ("ground",)
    add(ClauseResult(2, "SEPARATION", not sep_bad, sep_bad, "" if not sep_bad else "not a graph separation"))
    add(ClauseResult(2, "ORDER", not order_bad, order_bad, "" if not order_bad else f"order exceeds {f.k}"))
    add(ClauseResult(2, "SEPARATOR", not separator_bad, separator_bad,
                     "" if not separator_bad else "separator is not P_v + P_w + X"))

    nest_bad = ()
    for i in f.index():
        p, s = f.neighbours(i)
        if not (f.P(p) | f.P(s)) <= f.P(i):
            nest_bad = (i,)
            break
    add(ClauseResult(3, "PETAL_CONTAINS_CUTS", not nest_bad, nest_bad,
                     "" if not nest_bad else "P_p + P_s is not contained in P_i"))

    star_bad = ()
    if parity_ok:
        small = [i for i in f.index() if len(f.P(i)) == diff // 2]
        for i, j in itertools.combinations(small, 2):
            if f.P(i) == f.P(j):
                star_bad = (i, j)
                break
    add(ClauseResult(4, "STAR", not star_bad, star_bad,
                     "" if not star_bad else "two minimal petals share their vertex set"))
    return rep


def require_valid(g: Graph, f: PseudoFlower) -> None:
    rep = validate(g, f)
    if not rep.valid:
        codes = ", ".join(f"{c.clause}:{c.code}" for c in rep.failures())
        raise InvalidFlower(f"invalid pseudoflower ({codes})", rep)


def classify(f: PseudoFlower, g: Graph | None = None) -> str:
    if g is not None:
        require_valid(g, f)
    if all(not f.P(v) for v in f.cutpoints()):
        return "pseudoanemone"
    return "pseudodaisy"


def _is_flower_on(f: PseudoFlower, cuts) -> bool:
    for v, w in itertools.permutations(cuts, 2):
        s = interval_separation(f, v, w)
        if s.order != f.k or not (s.a - s.b) or not (s.b - s.a):
            return False
    return True


def is_flower(f: PseudoFlower, g: Graph | None = None) -> bool:
    if g is not None:
        require_valid(g, f)
    return _is_flower_on(f, f.cutpoints())


def flower_subsets(f: PseudoFlower, petals: int) -> list[tuple]:
    """Cutpoint sets ``D`` of size ``petals`` whose concatenation is a k-flower.

    The interval separations of a concatenation to ``D`` are exactly the
    ``S(v,w)`` with ``v, w`` in ``D``, so the test only looks at those.
    """
    return [d for d in itertools.combinations(f.cutpoints(), petals) if _is_flower_on(f, d)]


def extends_flower_with(f: PseudoFlower, petals: int) -> bool:
    """Whether ``f`` extends some k-flower with at least ``petals`` petals."""
    if petals > len(f.cutpoints()):
        return False
    return bool(flower_subsets(f, max(petals, 2)))


@dataclass(frozen=True, eq=False)
class WitnessMap:
    """A map ``C(I') -> C(I)`` offered as evidence that ``target <= source``."""

    source: PseudoFlower
    target: PseudoFlower
    mapping: Mapping

    def as_monotone(self) -> MonotoneMap:
        return MonotoneMap(self.source.completion, self.target.completion, dict(self.mapping))


def is_witness(w: WitnessMap) -> bool:
    big, small = w.source, w.target
    F = dict(w.mapping)
    if big.k != small.k or big.ground != small.ground or big.x_set != small.x_set:
        return False
    if set(F) != set(big.completion.elements):
        return False
    if any(y not in small.completion for y in F.values()):
        return False
    if set(F.values()) != set(small.completion.elements):
        return False
    if {F[i] for i in big.index()} != set(small.index()):
        return False
    if not is_monotone(F, big.completion, small.completion):
        return False
    for v in small.cutpoints():
        for u in small.cutpoints():
            targets = set(interval(small.completion, v, u))
            pre = [z for z in big.completion.elements if F[z] in targets]
            rhs = frozenset(big.x_set).union(*(big.P(z) for z in pre))
            if _interval_set(small, v, u) != rhs:
                return False
    return True


def find_witnesses(f_small: PseudoFlower, f_big: PseudoFlower) -> list[WitnessMap]:
    """All witnesses of ``f_small <= f_big``, by exhaustive search.

    Every witness restricts to a surjective monotone map between the index
    orders and is the unique extension of that restriction, so enumerating the
    index maps is enough.  Exponential; guarded to ``|I'| <= 8``.
    """
    src = f_big.completion.index_order()
    dst = f_small.completion.index_order()
    if len(src) > WITNESS_SEARCH_LIMIT:
        raise GuardExceeded(f"witness search limited to {WITNESS_SEARCH_LIMIT} indices, got {len(src)}")
    out = []
    for m in search_maps(src, dst, surjective=True):
        try:
            F = extend_monotone(MonotoneMap(src, dst, m), f_big.completion, f_small.completion)
        except ValueError:
            continue
        w = WitnessMap(f_big, f_small, F.mapping)
        if is_witness(w):
            out.append(w)
    return out


def _fresh(taken: set, base: str) -> str:
    if base not in taken:
        return base
    j = 1
    while f"{base}_{j}" in taken:
        j += 1
    return f"{base}_{j}"


def concatenate_with_witness(f: PseudoFlower, d: Iterable) -> tuple[PseudoFlower, WitnessMap]:
    """The subflower on the cutpoints ``d`` and the witness onto it.

    Cutpoints in ``d`` keep their labels and sets.  Between consecutive
    ``u, w`` of ``d`` there is one new petal whose set is the union of all
    ``P_z`` with ``z`` in ``[u, w]``.  A new petal covering a single old petal
    keeps its label; otherwise the old labels are joined with ``+``.
    """
    d = set(d)
    for v in d:
        _require_cutpoint(f, v)
    if len(d) < 2:
        raise ValueError("a concatenation needs at least two cutpoints")
    cyc = f.completion.cycle
    start = next(j for j, z in enumerate(cyc) if z in d)
    cyc = cyc[start:] + cyc[:start]
    arcs = []
    for z in cyc:
        if z in d:
            arcs.append([z, []])
        else:
            arcs[-1][1].append(z)

    taken = set(d)
    entries = []
    mapping = {}
    for j, (u, inner) in enumerate(arcs):
        w = arcs[(j + 1) % len(arcs)][0]
        old_index = [z for z in inner if not f.completion.is_cutpoint(z)]
        label = old_index[0] if len(old_index) == 1 else "+".join(map(str, old_index))
        label = _fresh(taken, label) if label in taken else label
        taken.add(label)
        members = frozenset(f.P(u) | f.P(w)).union(*(f.P(z) for z in inner))
        entries.append((u, True, f.P(u)))
        entries.append((label, False, members))
        mapping[u] = u
        for z in inner:
            mapping[z] = label
    small = make_flower(f.k, entries, f.ground)
    return small, WitnessMap(f, small, mapping)


def concatenate(f: PseudoFlower, d: Iterable) -> PseudoFlower:
    return concatenate_with_witness(f, d)[0]


def identity_witness(f: PseudoFlower) -> WitnessMap:
    return WitnessMap(f, f, {z: z for z in f.completion.elements})


def vertex_interval(f: PseudoFlower, x: int) -> list:
    """``{z : x in P_z}`` listed in cyclic order from the start of the interval."""
    if x in f.x_set:
        raise ValueError(f"vertex {x} lies in X")
    if x not in f.ground:
        raise ValueError(f"vertex {x} is not in the ground set")
    comp = f.completion
    members = [z for z in comp.elements if x in f.P(z)]
    if not is_interval(comp, members):
        raise AssertionError(f"vertex {x} does not span an interval; is the flower valid?")
    if len(members) == len(comp):
        return list(comp.elements)
    first = next(z for z in members if predecessor(comp, z) not in members)
    last = next(z for z in members if successor(comp, z) not in members)
    return interval(comp, first, last)


def anemone_from_groups(k: int, groups: list, ground) -> PseudoFlower:
    """Anemone with empty cutpoints ``c0..`` and petals ``i0..`` in the given order."""
    entries = []
    for j, grp in enumerate(groups):
        entries.append((f"c{j}", True, ()))
        entries.append((f"i{j}", False, grp))
    return make_flower(k, entries, ground)
