"""Separation systems ``S_k``, consistent orientations, profiles and tangles.

Orientations are stored as bitmaps over the canonical member list of a
:class:`SeparationSystem`.  Enumeration is a depth-first search over member
pairs with propagation: choosing ``s`` forces every ``t <= s`` other than
``s*`` (consistency) and every join ``r v s`` that still lies in the system
(the profile property).  A tangle satisfies both rules as well, since
``(r v s)*`` together with ``r`` and ``s`` would cover the ground set.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .flower import GuardExceeded, PseudoFlower, interval_separation, interval_separations
from .universe import Graph, Separation, chain_supremum, enumerate_separations, leq

DEFAULT_MAX_PAIRS = 64
MAX_MASK_VERTICES = 62
CHAIN_LIMIT = 200_000


class IncompleteOrientation(ValueError):
    """An orientation does not pick exactly one member of every pair."""


class NotLocated(ValueError):
    """No cutpoint locates the profile."""


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


class SeparationSystem:
    """All separations of a graph of order less than ``k``, in canonical order."""

    def __init__(self, graph: Graph, k: int):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.graph = graph
        self.k = k
        self.members: tuple = tuple(enumerate_separations(graph, k - 1))
        self.index = {s: j for j, s in enumerate(self.members)}
        self.inv = np.array([self.index[s.inverse()] for s in self.members], dtype=np.int64)

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        return s in self.index

    def __eq__(self, other):
        return isinstance(other, SeparationSystem) and (self.graph, self.k) == (other.graph, other.k)

    def __hash__(self):
        return hash((self.graph, self.k))

    def __repr__(self):
        return f"SeparationSystem(k={self.k}, members={len(self.members)})"

    @cached_property
    def pair_reps(self) -> tuple:
        """Canonical-first member of every pair ``{s, s*}``."""
        return tuple(j for j in range(len(self.members)) if j <= self.inv[j])

    @property
    def pair_count(self) -> int:
        return len(self.pair_reps)

    @cached_property
    def _arrays(self):
        if self.graph.vertex_count > MAX_MASK_VERTICES:
            raise GuardExceeded(f"bitmask engine supports at most {MAX_MASK_VERTICES} vertices")
        n = self.graph.vertex_count
        A = np.array([_mask(s.a) for s in self.members], dtype=np.int64)
        B = np.array([_mask(s.b) for s in self.members], dtype=np.int64)
        keys = (A << n) | B
        order = np.argsort(keys)
        return A, B, keys[order], order

    def lookup(self, a_masks: np.ndarray, b_masks: np.ndarray) -> np.ndarray:
        """Member indices of the given mask pairs, ``-1`` where absent."""
        A, B, skeys, order = self._arrays
        n = self.graph.vertex_count
        keys = (a_masks << n) | b_masks
        pos = np.searchsorted(skeys, keys)
        pos[pos >= len(skeys)] = 0
        hit = skeys[pos] == keys
        return np.where(hit, order[pos], -1)

    def separation_at(self, j: int) -> Separation:
        return self.members[j]


def separation_system(g: Graph, k: int) -> SeparationSystem:
    return SeparationSystem(g, k)


@dataclass(frozen=True, eq=False)
class Profile:
    """An orientation of a separation system, stored as a bitmap."""

    system: SeparationSystem
    bits: int
    kind: str = "profile"

    def __contains__(self, s: Separation) -> bool:
        j = self.system.index.get(s)
        if j is None:
            raise KeyError(f"{s!r} is not in the separation system")
        return bool(self.bits >> j & 1)

    def indices(self) -> list[int]:
        return [j for j in range(len(self.system)) if self.bits >> j & 1]

    def separations(self) -> list[Separation]:
        return [self.system.members[j] for j in self.indices()]

    def as_array(self) -> np.ndarray:
        return np.array([bool(self.bits >> j & 1) for j in range(len(self.system))])

    def __eq__(self, other):
        return isinstance(other, Profile) and self.system == other.system and self.bits == other.bits

    def __hash__(self):
        return hash((self.system, self.bits))

    def __len__(self):
        return bin(self.bits).count("1")

    def __repr__(self):
        return f"Profile({self.kind}, k={self.system.k}, size={len(self)})"


def _bits_from_array(chosen: np.ndarray) -> int:
    out = 0
    for j in np.nonzero(chosen)[0].tolist():
        out |= 1 << j
    return out


def orientation(system: SeparationSystem, chosen: Iterable[Separation], kind: str = "profile") -> Profile:
    """Wrap a set of separations as an orientation, checking completeness."""
    bits = 0
    for s in chosen:
        j = system.index.get(s)
        if j is None:
            raise IncompleteOrientation(f"{s!r} is not in the separation system")
        bits |= 1 << j
    p = Profile(system, bits, kind)
    _require_complete(p)
    return p


def _require_complete(o: Profile) -> np.ndarray:
    chosen = o.as_array()
    inv = o.system.inv
    both = chosen & chosen[inv] & (inv != np.arange(len(inv)))
    if both.any():
        raise IncompleteOrientation("orientation contains both members of a pair")
    if not (chosen | chosen[inv]).all():
        raise IncompleteOrientation("orientation leaves a pair unoriented")
    return chosen


def is_consistent(o: Profile) -> bool:
    """No chosen ``r, s`` with ``r* <= s`` unless they are the same pair."""
    chosen = _require_complete(o)
    system = o.system
    A, B, _, _ = system._arrays
    idx = np.nonzero(chosen)[0]
    for s in idx.tolist():
        # r* <= s  <=>  B_r <= A_s and B_s <= A_r
        below = ((B[idx] & ~A[s]) == 0) & ((B[s] & ~A[idx]) == 0)
        bad = idx[below]
        bad = bad[(bad != s) & (bad != system.inv[s])]
        if len(bad):
            return False
    return True


def is_profile(o: Profile) -> bool:
    """Consistent, and for chosen ``r, s`` the inverse of ``r v s`` is not chosen."""
    if not is_consistent(o):
        return False
    chosen = o.as_array()
    system = o.system
    A, B, _, _ = system._arrays
    idx = np.nonzero(chosen)[0]
    for r in idx.tolist():
        # (r v s)* = (B_r & B_s, A_r | A_s)
        j = system.lookup(B[r] & B[idx], A[r] | A[idx])
        j = j[j >= 0]
        if chosen[j].any():
            return False
    return True


def _maximal_masks(masks: Sequence[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    out = []
    for m in masks:
        if not any(m & ~o == 0 for o in out):
            out.append(m)
    return out


def _has_cover(a_masks: Sequence[int], full: int) -> bool:
    """Whether three (not necessarily distinct) of the masks cover ``full``."""
    top = _maximal_masks(a_masks)
    arr = np.array(top, dtype=np.int64)
    for x, y in itertools.combinations_with_replacement(range(len(top)), 2):
        need = full & ~(top[x] | top[y])
        if need == 0 or ((arr & need) == need).any():
            return True
    return False


def is_tangle(o: Profile) -> bool:
    """Consistent, and no three chosen ``A``-sides cover the ground set."""
    if not is_consistent(o):
        return False
    full = _mask(o.system.graph.vertices)
    return not _has_cover([_mask(s.a) for s in o.separations()], full)


class _Engine:
    """Propagation state for the orientation search."""

    def __init__(self, system: SeparationSystem):
        self.system = system
        self.A, self.B, _, _ = system._arrays
        self.inv = system.inv
        self.K = system.k
        self.self_inverse = np.nonzero(self.inv == np.arange(len(self.inv)))[0]

    def add(self, chosen: np.ndarray, x: int) -> bool:
        A, B, inv = self.A, self.B, self.inv
        queue = [x]
        while queue:
            x = queue.pop()
            if chosen[x]:
                continue
            if chosen[inv[x]]:
                return False
            chosen[x] = True
            below = ((A & ~A[x]) == 0) & ((B[x] & ~B) == 0)
            below[x] = False
            below[inv[x]] = False
            new = np.nonzero(below & ~chosen)[0]
            if chosen[inv[new]].any():
                return False
            queue.extend(new.tolist())
            members = np.nonzero(chosen)[0]
            ja = A[x] | A[members]
            jb = B[x] & B[members]
            small = np.bitwise_count(ja & jb) < self.K
            j = self.system.lookup(ja[small], jb[small])
            j = j[j >= 0]
            j = j[~chosen[j]]
            if chosen[inv[j]].any():
                return False
            queue.extend(j.tolist())
        return True

    def search(self, leaf, max_nodes: int | None = None) -> None:
        m = len(self.inv)
        if len(self.self_inverse):
            # (s v s)* = s for s = s*, so no profile can orient such a pair
            return
        nodes = 0

        def dfs(chosen):
            nonlocal nodes
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise GuardExceeded(f"search exceeded {max_nodes} nodes")
            open_ = np.nonzero(~(chosen | chosen[self.inv]))[0]
            if not len(open_):
                leaf(chosen)
                return
            x = int(open_[0])
            for y in (x, int(self.inv[x])):
                c = chosen.copy()
                if self.add(c, y):
                    dfs(c)

        dfs(np.zeros(m, dtype=bool))


def enumerate_profiles(g: Graph, k: int, tangles_only: bool = False,
                       max_pairs: int = DEFAULT_MAX_PAIRS) -> list[Profile]:
    """All profiles (or tangles) of ``S_k``, in search order.

    The search branches on the first open pair in canonical order, trying the
    canonical-first orientation before its inverse.
    """
    system = SeparationSystem(g, k)
    if system.pair_count > max_pairs:
        raise GuardExceeded(f"S_{k} has {system.pair_count} pairs, guard is {max_pairs}")
    full = _mask(g.vertices)
    found = []

    def leaf(chosen):
        p = Profile(system, _bits_from_array(chosen))
        tangle = not _has_cover([_mask(s.a) for s in p.separations()], full)
        if tangles_only and not tangle:
            return
        found.append(Profile(system, p.bits, "tangle" if tangle else "profile"))

    _Engine(system).search(leaf)
    return found


def brute_force_orientations(system: SeparationSystem, test) -> list[Profile]:
    """Every orientation passing ``test``; only for tiny systems."""
    reps = system.pair_reps
    if len(reps) > 16:
        raise GuardExceeded("brute-force scan limited to 16 pairs")
    out = []
    for flips in itertools.product((False, True), repeat=len(reps)):
        bits = 0
        for j, flip in zip(reps, flips):
            bits |= 1 << int(system.inv[j] if flip else j)
        p = Profile(system, bits)
        if test(p):
            out.append(p)
    return out


def distinguishes(s: Separation, p: Profile, q: Profile) -> bool:
    if s not in p.system.index and s not in q.system.index:
        raise KeyError(f"{s!r} lies outside both separation systems")
    si = s.inverse()
    return (s in p and si in q) or (si in p and s in q)


def distinguished_pairs(seps, profiles: Sequence[Profile]) -> set:
    """Index pairs ``(a, b)``, ``a < b``, of profiles told apart by some separation.

    ``seps`` may be a pseudoflower, in which case its interval separations are used.
    """
    if isinstance(seps, PseudoFlower):
        seps = list(interval_separations(seps).values())
    seps = list(seps)
    out = set()
    for a, b in itertools.combinations(range(len(profiles)), 2):
        if any(distinguishes(s, profiles[a], profiles[b]) for s in seps):
            out.add((a, b))
    return out


def locate(f: PseudoFlower, p: Profile) -> tuple:
    """A cutpoint ``v`` and side locating ``p``, found by scanning all cutpoints.

    The side ``"all_from_v"`` means ``S(v,w)`` lies in ``p`` for every other
    cutpoint ``w``; ``"all_toward_v"`` means ``S(w,v)`` does.
    """
    if f.k >= p.system.k:
        raise ValueError(f"profile of S_{p.system.k} cannot orient separations of order {f.k}")
    cuts = f.cutpoints()
    for v in cuts:
        others = [w for w in cuts if w != v]
        if all(interval_separation(f, v, w) in p for w in others):
            return v, "all_from_v"
        if all(interval_separation(f, w, v) in p for w in others):
            return v, "all_toward_v"
    raise NotLocated("no cutpoint locates the profile")


def is_located(f: PseudoFlower, p: Profile) -> bool:
    try:
        locate(f, p)
    except NotLocated:
        return False
    return True


def signature(s: Separation, profiles: Sequence[Profile]) -> tuple:
    """Which profiles contain ``s``; two separations are equivalent iff these agree."""
    return tuple(s in p for p in profiles)


def equivalent(s: Separation, t: Separation, profiles: Sequence[Profile]) -> bool:
    return signature(s, profiles) == signature(t, profiles)


def equivalence_classes(seps: Iterable[Separation], profiles: Sequence[Profile]) -> list[list[Separation]]:
    """Partition by signature; classes keep input order and appear by first member."""
    classes: dict[tuple, list] = {}
    for s in seps:
        classes.setdefault(signature(s, profiles), []).append(s)
    return list(classes.values())


def displayed_classes(f: PseudoFlower, profiles: Sequence[Profile]) -> set:
    """Signatures of the classes that contain an interval separation of ``f``."""
    return {signature(s, profiles) for s in interval_separations(f).values()}


def is_relevant(s: Separation, profiles: Sequence[Profile]) -> bool:
    """Whether ``s`` distinguishes two of the profiles."""
    sig = signature(s, profiles)
    sig_inv = signature(s.inverse(), profiles)
    return any(sig[a] and sig_inv[b] for a in range(len(sig)) for b in range(len(sig)))


def preccurlyeq(f1: PseudoFlower, f2: PseudoFlower, profiles: Sequence[Profile]) -> bool:
    """Every relevant separation displayed by ``f1`` is equivalent to one displayed by ``f2``."""
    shown = displayed_classes(f2, profiles)
    for s in interval_separations(f1).values():
        if is_relevant(s, profiles) and signature(s, profiles) not in shown:
            return False
    return True


def maximal_chains(seps: Sequence[Separation], limit: int = CHAIN_LIMIT) -> list[list[Separation]]:
    """All maximal ``<=``-chains of a finite set of separations, bottom first."""
    seps = list(dict.fromkeys(seps))
    below = {s: [t for t in seps if t != s and leq(t, s)] for s in seps}
    covers = {s: [t for t in seps if t != s and leq(s, t)
                  and not any(u not in (s, t) and leq(s, u) and leq(u, t) for u in seps)]
              for s in seps}
    out = []

    def walk(chain):
        nxt = covers[chain[-1]]
        if not nxt:
            out.append(list(chain))
            if len(out) > limit:
                raise GuardExceeded(f"more than {limit} maximal chains")
            return
        for t in nxt:
            chain.append(t)
            walk(chain)
            chain.pop()

    for s in seps:
        if not below[s]:
            walk([s])
    return out


def is_closed(p: Profile, limit: int = CHAIN_LIMIT) -> bool:
    """Every chain in ``p`` has its supremum in ``p``.

    Finite chains attain their supremum, so this always holds; the check walks
    every maximal chain and every initial segment of it to confirm.
    """
    members = p.separations()
    if len(members) > 200:
        raise GuardExceeded("closedness check limited to 200 chosen separations")
    for chain in maximal_chains(members, limit):
        for j in range(1, len(chain) + 1):
            if chain_supremum(chain[:j], p.system.graph) not in p:
                return False
    return True
