"""Brute-force reference implementations used to check the library.

Everything here works on plain Python sets, tuples and sequences and
deliberately avoids the package's own helpers, so agreement between the two
is evidence rather than tautology.
"""
from __future__ import annotations

import itertools


# -- separations -----------------------------------------------------------

def brute_separations(n, edges, max_order):
    """All (A, B) over range(n) with no edge between A-B and B-A, order <= max_order.

    Scans all 3**n assignments of each vertex to A only, B only or both.
    """
    out = set()
    for labels in itertools.product((0, 1, 2), repeat=n):
        a = frozenset(v for v in range(n) if labels[v] in (0, 2))
        b = frozenset(v for v in range(n) if labels[v] in (1, 2))
        if len(a & b) > max_order:
            continue
        if any((u in a - b and v in b - a) or (v in a - b and u in b - a) for u, v in edges):
            continue
        out.add((a, b))
    return out


def set_meet(s, t):
    return (s[0] & t[0], s[1] | t[1])


def set_join(s, t):
    return (s[0] | t[0], s[1] & t[1])


def set_leq(s, t):
    return s[0] <= t[0] and t[1] <= s[1]


def set_inverse(s):
    return (s[1], s[0])


def set_order(s):
    return len(s[0] & s[1])


# -- cyclic orders ---------------------------------------------------------

def cyc(seq, a, b, c):
    """(a, b, c) in the cyclic order read off ``seq``."""
    if len({a, b, c}) < 3:
        return False
    n = len(seq)
    pa, pb, pc = seq.index(a), seq.index(b), seq.index(c)
    return (pb - pa) % n < (pc - pa) % n


def axioms_hold(seq, rel):
    """The four cyclic-order axioms for a relation ``rel(a, b, c)`` on ``seq``."""
    for a, b, c in itertools.permutations(seq, 3):
        if rel(a, b, c) and not rel(b, c, a):
            return False
        if rel(a, b, c) and rel(c, b, a):
            return False
        if not (rel(a, b, c) or rel(c, b, a)):
            return False
    for a, b, c, d in itertools.permutations(seq, 4):
        if rel(a, b, c) and rel(a, c, d) and not rel(a, b, d):
            return False
    return True


def open_interval(seq, a, b):
    return {c for c in seq if cyc(seq, a, c, b)}


def closed_interval(seq, a, b):
    if a == b:
        return {a}
    return open_interval(seq, a, b) | {a, b}


def nontrivial_intervals(seq):
    """Proper non-empty subsets that are cyclic intervals (strings of neighbours)."""
    n = len(seq)
    out = set()
    for start in range(n):
        for length in range(1, n):
            out.add(frozenset(seq[(start + j) % n] for j in range(length)))
    return out


def interval_bounds(cycle, cutset):
    """Map each set [v,w] ∩ I (v != w cutpoints) to the list of pairs producing it."""
    index = [z for z in cycle if z not in cutset]
    found = {}
    for v, w in itertools.permutations([z for z in cycle if z in cutset], 2):
        key = frozenset(closed_interval(cycle, v, w)) & frozenset(index)
        found.setdefault(key, []).append((v, w))
    return found


def is_monotone_map(seq_dom, seq_cod, f):
    """f(v) in ]f(u), f(w)[ implies v in ]u, w[."""
    for u, v, w in itertools.permutations(seq_dom, 3):
        if cyc(seq_cod, f[u], f[v], f[w]) and not cyc(seq_dom, u, v, w):
            return False
    return True


def all_maps(dom, cod):
    for images in itertools.product(cod, repeat=len(dom)):
        yield dict(zip(dom, images))


def interval_preimages_are_intervals(seq_dom, seq_cod, f):
    """Every preimage of an interval of the codomain is an interval (empty and full allowed)."""
    dom_ok = nontrivial_intervals(seq_dom) | {frozenset(), frozenset(seq_dom)}
    for iv in nontrivial_intervals(seq_cod) | {frozenset(seq_cod)}:
        pre = frozenset(x for x in seq_dom if f[x] in iv)
        if pre not in dom_ok:
            return False
    return True


def brute_extensions(cdom, cdom_cuts, ccod, ccod_cuts, f):
    """All surjective monotone F: C(I') -> C(I) extending f with F(I') = I.

    Index elements are pinned to ``f``; every cutpoint image is tried.
    """
    free = [z for z in cdom if z in cdom_cuts]
    out = []
    for images in itertools.product(ccod, repeat=len(free)):
        F = dict(f)
        F.update(zip(free, images))
        if set(F.values()) != set(ccod):
            continue
        if {F[z] for z in cdom if z not in cdom_cuts} != {z for z in ccod if z not in ccod_cuts}:
            continue
        if is_monotone_map(cdom, ccod, F):
            out.append(F)
    return out


# -- pseudoflowers ---------------------------------------------------------

def v_set(cycle, sets, x, v, w):
    """X plus every P_z for z walking forward from v to w inclusive."""
    n = len(cycle)
    j = cycle.index(v)
    out = set(x)
    while True:
        out |= sets[cycle[j]]
        if cycle[j] == w:
            break
        j = (j + 1) % n
    return frozenset(out)


def flower_clause_failures(n, edges, k, cycle, cutset, sets):
    """Re-derive which of clauses 1..4 fail for the family ``sets`` on ``cycle``."""
    ground = frozenset(range(n))
    x = ground - frozenset().union(*sets.values())
    cuts = [z for z in cycle if z in cutset]
    index = [z for z in cycle if z not in cutset]
    failed = set()
    half2 = k - len(x)
    if half2 < 0 or half2 % 2 or any(len(sets[v]) != half2 // 2 for v in cuts):
        failed.add(1)
    for v, w in itertools.permutations(cuts, 2):
        a, b = v_set(cycle, sets, x, v, w), v_set(cycle, sets, x, w, v)
        bad_edge = any((p in a - b and q in b - a) or (q in a - b and p in b - a) for p, q in edges)
        if a | b != ground or bad_edge or len(a & b) > k or a & b != sets[v] | sets[w] | x:
            failed.add(2)
    for i in index:
        j = cycle.index(i)
        if not (sets[cycle[j - 1]] | sets[cycle[(j + 1) % len(cycle)]]) <= sets[i]:
            failed.add(3)
    if half2 >= 0 and half2 % 2 == 0:
        small = [i for i in index if len(sets[i]) == half2 // 2]
        if any(sets[i] == sets[j] for i, j in itertools.combinations(small, 2)):
            failed.add(4)
    return failed


# -- orientations ----------------------------------------------------------

def pair_list(seps):
    """One representative per {s, s*} pair, in first-seen order."""
    seen, reps = set(), []
    for s in seps:
        if s not in seen:
            reps.append(s)
            seen.update({s, set_inverse(s)})
    return reps


def brute_orientations(seps, ground, kind):
    """All orientations of ``seps`` (pairs of frozensets) that are consistent
    and satisfy the profile (``kind='profile'``) or tangle (``'tangle'``) rule,
    each returned as a frozenset of chosen separations."""
    members = set(seps)
    reps = pair_list(seps)
    out = []
    for flips in itertools.product((False, True), repeat=len(reps)):
        chosen = frozenset(set_inverse(r) if f else r for r, f in zip(reps, flips))
        if not _consistent(chosen):
            continue
        if kind == "profile" and not _profile(chosen, members):
            continue
        if kind == "tangle" and not _tangle(chosen, ground):
            continue
        out.append(chosen)
    return out


def _consistent(chosen):
    for r in chosen:
        for s in chosen:
            if set_leq(set_inverse(r), s) and {r, set_inverse(r)} != {s, set_inverse(s)}:
                return False
    return True


def _profile(chosen, members):
    for r in chosen:
        for s in chosen:
            j = set_join(r, s)
            if j in members and set_inverse(j) in chosen:
                return False
    return True


def _tangle(chosen, ground):
    lefts = [s[0] for s in chosen]
    for a, b, c in itertools.combinations_with_replacement(lefts, 3):
        if a | b | c == ground:
            return False
    return True


def located_scan(cuts, sep_of, contains):
    """Cutpoints v with S(v,w) chosen for all w, or S(w,v) chosen for all w."""
    out = []
    for v in cuts:
        others = [w for w in cuts if w != v]
        if all(contains(sep_of(v, w)) for w in others):
            out.append((v, "all_from_v"))
        if all(contains(sep_of(w, v)) for w in others):
            out.append((v, "all_toward_v"))
    return out
