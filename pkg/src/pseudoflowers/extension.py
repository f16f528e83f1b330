"""Proper crossing, anchoring, petal subdivision and maximalization."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .flower import (
    InvalidFlower,
    PseudoFlower,
    WitnessMap,
    _fresh,
    interval_separation,
    interval_separations,
    make_flower,
    petal_separation,
    validate,
)
from .profiles import (
    Profile,
    distinguished_pairs,
    distinguishes,
    is_located,
    signature,
)
from .universe import Graph, Separation, corners, crosses, join, meet


class PreconditionError(ValueError):
    """A hypothesis of an extension step does not hold; the message names it."""


@dataclass(frozen=True)
class AnchoredSeparation:
    """``separation`` is anchored at cutpoint ``anchor`` on petal ``petal``.

    ``inverted`` records that the separation handed to :func:`anchor` matches
    the inverse of ``separation`` (its joins with the petal separation agree
    with those of ``separation.inverse()``).
    """

    separation: Separation
    petal: object
    anchor: object
    inverted: bool = False

    @property
    def C(self):
        return self.separation.a

    @property
    def D(self):
        return self.separation.b

    def to_json(self) -> dict:
        return {
            "C": sorted(self.C),
            "D": sorted(self.D),
            "petal": str(self.petal),
            "anchor": str(self.anchor),
        }


def _in_some(s: Separation, profiles: Sequence[Profile]) -> bool:
    for p in profiles:
        if s in p.system.index and s in p:
            return True
    return False


def properly_crosses(s: Separation, t: Separation, profiles: Sequence[Profile]) -> bool:
    """``s`` and ``t`` cross and each of their eight corners lies in some profile."""
    if not profiles or not crosses(s, t):
        return False
    return all(_in_some(c, profiles) for c in corners(s, t))


def is_anchored_at(f: PseudoFlower, i, cd: Separation, v) -> bool:
    p, s = f.neighbours(i)
    if v in (p, s) or not f.completion.is_cutpoint(v):
        return False
    si = petal_separation(f, i)
    return (meet(cd, si) == interval_separation(f, v, p)
            and meet(cd.inverse(), si) == interval_separation(f, s, v))


def anchoring_equations(f: PseudoFlower, i, a: AnchoredSeparation) -> dict:
    """The four set equations that hold for an anchored separation."""
    p, s = f.neighbours(i)
    C, D = a.C, a.D
    vps = interval_separation(f, p, s).a
    return {
        "C_disjoint_P_s": not (C & f.P(s)),
        "D_disjoint_P_p": not (D & f.P(p)),
        "X_in_separator": f.x_set <= (C & D),
        "separator_outside_petal": (C & D) - vps == f.P(a.anchor),
    }


def _displayed_distinguish(f: PseudoFlower, p: Profile, q: Profile) -> bool:
    return any(distinguishes(s, p, q) for s in interval_separations(f).values())


def located_profiles(f: PseudoFlower, profiles: Sequence[Profile]) -> list[Profile]:
    return [p for p in profiles if is_located(f, p)]


def distinguishes_three_located(f: PseudoFlower, profiles: Sequence[Profile]) -> bool:
    located = located_profiles(f, profiles)
    pairs = distinguished_pairs(f, located)
    return any({(a, b), (a, c), (b, c)} <= pairs
               for a, b, c in itertools.combinations(range(len(located)), 3))


def _first(profiles, test):
    for q in profiles:
        if test(q):
            return q
    return None


def anchor(f: PseudoFlower, i, cd: Separation, profiles: Sequence[Profile]) -> AnchoredSeparation:
    """Replace ``cd`` by a separation anchored at some cutpoint, keeping its joins with ``S(i)``.

    Profiles are picked first-match in list order; the anchor is the first
    cutpoint after ``s(i)`` in cyclic order whose separation ``S(v, s(i))``
    tells the two chosen profiles apart.
    """
    p, s = f.neighbours(i)
    si = petal_separation(f, i)
    if cd.order != f.k:
        raise PreconditionError(f"separation has order {cd.order}, need {f.k}")
    if not properly_crosses(cd, si, profiles):
        raise PreconditionError("separation does not properly cross the petal separation")
    if not distinguishes_three_located(f, profiles):
        raise PreconditionError("flower does not distinguish three located profiles")

    for v in f.cutpoints():
        if is_anchored_at(f, i, cd, v):
            return AnchoredSeparation(cd, i, v, False)
        if is_anchored_at(f, i, cd.inverse(), v):
            return AnchoredSeparation(cd.inverse(), i, v, True)

    dc = cd.inverse()
    sic = si.inverse()
    both = lambda x, y: (lambda q: x in q and y in q)
    tell = lambda a, b: _displayed_distinguish(f, a, b)

    P1 = _first(profiles, both(cd, si))
    upper = [q for q in profiles if cd in q and sic in q]
    if any(tell(a, b) for a, b in itertools.combinations(upper, 2)):
        P2 = _first(profiles, both(dc, sic))
        P3 = _first(upper, lambda q: tell(q, P2))
    else:
        P3 = upper[0] if upper else None
        P2 = _first(profiles, lambda q: P1 is not None and P3 is not None and tell(q, P1) and tell(q, P3))
    if P1 is None or P2 is None or P3 is None:
        raise PreconditionError("could not select the profiles the construction needs")
    assert dc in P2 and sic in P2, "second profile must contain the inverse orientations"

    cuts = list(f.cutpoints())
    start = cuts.index(s)
    scan = [cuts[(start + j) % len(cuts)] for j in range(1, len(cuts))]
    v = next((w for w in scan if distinguishes(interval_separation(f, w, s), P2, P3)), None)
    if v is None:
        raise PreconditionError("no cutpoint tells the selected profiles apart")

    inverted = interval_separation(f, v, p) not in P3
    base = dc if inverted else cd
    c2 = join(base, interval_separation(f, v, p))
    d1 = join(c2.inverse(), interval_separation(f, s, v))
    result = d1.inverse()

    assert is_anchored_at(f, i, result, v), "construction did not produce an anchored separation"
    original = dc if inverted else cd
    assert join(original, si) == join(result, si)
    assert join(original.inverse(), si) == join(result.inverse(), si)
    return AnchoredSeparation(result, i, v, inverted)


def subdivide_with_witness(f: PseudoFlower, i, a: AnchoredSeparation,
                           g: Graph | None = None) -> tuple[PseudoFlower, WitnessMap, dict]:
    """Split petal ``i`` into ``i_1, m, i_2`` so the anchored separation is displayed.

    Returns the new flower, the witness collapsing ``i_1, m, i_2`` onto ``i``
    and the new labels under keys ``"i1"``, ``"m"``, ``"i2"``.
    """
    if a.petal != i or not is_anchored_at(f, i, a.separation, a.anchor):
        raise PreconditionError("anchoring equations fail on the input")
    p, s = f.neighbours(i)
    C, D = a.C, a.D
    P_m = (C & D) - interval_separation(f, s, p).a
    taken = set(f.completion.elements)
    labels = {}
    for key, base in (("i1", f"{i}_1"), ("m", f"{i}_m"), ("i2", f"{i}_2")):
        labels[key] = _fresh(taken, base)
        taken.add(labels[key])
    entries = []
    for z in f.completion.cycle:
        if z == i:
            entries.append((labels["i1"], False, C & f.P(i)))
            entries.append((labels["m"], True, P_m))
            entries.append((labels["i2"], False, D & f.P(i)))
        else:
            entries.append((z, f.completion.is_cutpoint(z), f.P(z)))
    new = make_flower(f.k, entries, f.ground)
    if g is not None:
        rep = validate(g, new)
        if not rep.valid:
            raise InvalidFlower("subdivision is not a pseudoflower", rep)
    mapping = {z: z for z in f.completion.elements}
    for key in ("i1", "m", "i2"):
        mapping[labels[key]] = i
    del mapping[i]
    return new, WitnessMap(new, f, mapping), labels


def subdivide(f: PseudoFlower, i, a: AnchoredSeparation, g: Graph | None = None) -> PseudoFlower:
    return subdivide_with_witness(f, i, a, g)[0]


def _order_k_members(f: PseudoFlower, profiles: Sequence[Profile]) -> list[Separation]:
    system = profiles[0].system
    if system.k != f.k + 1:
        raise PreconditionError(f"profiles orient S_{system.k}, flower needs S_{f.k + 1}")
    return [t for t in system.members if t.order == f.k]


def _try_extend(f: PseudoFlower, t: Separation, profiles, g, before: set) -> PseudoFlower | None:
    """One anchored subdivision along ``t`` that distinguishes strictly more pairs."""
    for i in f.index():
        if not properly_crosses(t, petal_separation(f, i), profiles):
            continue
        try:
            a = anchor(f, i, t, profiles)
            new = subdivide(f, i, a, g)
        except (PreconditionError, InvalidFlower):
            continue
        if distinguished_pairs(new, profiles) > before:
            return new
    return None


def _candidates(f: PseudoFlower, profiles: Sequence[Profile]) -> list[Separation]:
    located = located_profiles(f, profiles)
    shown = {signature(s, profiles) for s in interval_separations(f).values()}
    out = []
    for t in _order_k_members(f, profiles):
        if signature(t, profiles) in shown:
            continue
        if not any(distinguishes(t, a, b) for a, b in itertools.combinations(located, 2)):
            continue
        out.append(t)
    return out


def maximalize(f: PseudoFlower, profiles: Sequence[Profile], g: Graph | None = None,
               trace: list | None = None) -> PseudoFlower:
    """Subdivide petals until no order-k separation adds a distinguished pair.

    Each accepted step strictly enlarges the set of distinguished profile
    pairs, so there are at most ``|P|^2`` steps.  The scan restarts from the
    first candidate after every step.
    """
    if not profiles:
        raise PreconditionError("empty profile set")
    g = g or profiles[0].system.graph
    if not distinguishes_three_located(f, profiles):
        raise PreconditionError("flower does not distinguish three located profiles")
    bound = len(profiles) ** 2
    steps = 0
    while True:
        before = distinguished_pairs(f, profiles)
        new = None
        for t in _candidates(f, profiles):
            new = _try_extend(f, t, profiles, g, before)
            if new is not None:
                break
        if new is None:
            return f
        steps += 1
        if trace is not None:
            trace.append(new)
        assert steps <= bound, "maximalize exceeded |P|^2 steps"
        f = new


def is_leq_maximal(f: PseudoFlower, profiles: Sequence[Profile], g: Graph | None = None) -> bool:
    """No order-k separation properly crossing a petal admits a valid anchored subdivision."""
    if not profiles:
        return True
    g = g or profiles[0].system.graph
    for t in _order_k_members(f, profiles):
        for i in f.index():
            if not properly_crosses(t, petal_separation(f, i), profiles):
                continue
            try:
                subdivide(f, i, anchor(f, i, t, profiles), g)
            except (PreconditionError, InvalidFlower):
                continue
            return False
    return True


def is_preccurlyeq_maximal(f: PseudoFlower, profiles: Sequence[Profile], g: Graph | None = None) -> bool:
    """Every separation telling two located profiles apart is displayed up to
    equivalence, or no anchored subdivision along it gains a distinguished pair."""
    if not profiles:
        return True
    g = g or profiles[0].system.graph
    system = profiles[0].system
    located = located_profiles(f, profiles)
    shown = {signature(s, profiles) for s in interval_separations(f).values()}
    before = distinguished_pairs(f, profiles)
    for t in system.members:
        if t.order > f.k or signature(t, profiles) in shown:
            continue
        if not any(distinguishes(t, a, b) for a, b in itertools.combinations(located, 2)):
            continue
        if t.order == f.k and _try_extend(f, t, profiles, g, before) is not None:
            return False
    return True
