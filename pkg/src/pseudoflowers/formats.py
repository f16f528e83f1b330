"""Text and JSON formats for graphs, flowers, profiles and arcs.

Every writer emits canonical data (sorted vertex lists, canonical
separation order) so that parse-then-write is the identity on its output.
"""
from __future__ import annotations

import json
import os
import tempfile

from .flower import PseudoFlower, make_flower
from .profiles import Profile, SeparationSystem
from .universe import Graph, Separation


class ParseError(ValueError):
    """Malformed input text or JSON."""


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` and blank lines are skipped; an optional first
    data line ``n <count>`` fixes the vertex count, otherwise it is one more
    than the largest id.  Self-loops and repeated edges are rejected.
    """
    count = None
    edges = []
    seen = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first and parts[0] == "n":
            first = False
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: bad header {line!r}")
            count = int(parts[1])
            continue
        first = False
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = map(int, parts)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: repeated edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if count is None:
        count = 1 + max((v for e in edges for v in e), default=-1)
    if any(v >= count for e in edges for v in e):
        raise ParseError(f"edge endpoint outside 0..{count - 1}")
    return Graph(count, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what} must be a list of integers")
    return value


def separation_to_json(s: Separation) -> list:
    return [sorted(s.a), sorted(s.b)]


def separation_from_json(data) -> Separation:
    if not isinstance(data, list) or len(data) != 2:
        raise ParseError("a separation is a pair [A, B]")
    return Separation(_int_list(data[0], "side A"), _int_list(data[1], "side B"))


def separations_to_json(seps, max_order: int) -> dict:
    return {"max_order": max_order, "count": len(seps), "separations": [separation_to_json(s) for s in seps]}


def flower_to_json(f: PseudoFlower) -> dict:
    cycle = []
    for z in f.completion.cycle:
        key = "cut" if f.completion.is_cutpoint(z) else "petal"
        cycle.append({key: str(z), "set": sorted(f.P(z))})
    return {"k": f.k, "cycle": cycle, "x": sorted(f.x_set)}


def flower_from_json(data, g: Graph) -> tuple[PseudoFlower, list | None]:
    """Parse a flower; returns it with the stated ``X`` (or ``None``) for validation."""
    if not isinstance(data, dict) or not isinstance(data.get("k"), int) or not isinstance(data.get("cycle"), list):
        raise ParseError("flower JSON needs integer 'k' and list 'cycle'")
    entries = []
    for j, item in enumerate(data["cycle"]):
        if not isinstance(item, dict) or ("cut" in item) == ("petal" in item):
            raise ParseError(f"cycle entry {j} needs exactly one of 'cut' or 'petal'")
        is_cut = "cut" in item
        if is_cut != (j % 2 == 0):
            raise ParseError("cycle must alternate cut and petal entries, starting with a cut")
        label = item["cut"] if is_cut else item["petal"]
        if not isinstance(label, str):
            raise ParseError(f"cycle entry {j}: label must be a string")
        vs = _int_list(item.get("set", []), f"set of {label}")
        if any(v < 0 or v >= g.vertex_count for v in vs):
            raise ParseError(f"set of {label} has vertices outside the graph")
        entries.append((label, is_cut, vs))
    if len(entries) < 2 or len(entries) % 2:
        raise ParseError("cycle must have an even number (>= 2) of entries")
    stated = data.get("x")
    if stated is not None:
        stated = _int_list(stated, "x")
    try:
        f = make_flower(data["k"], entries, g.vertices)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return f, stated


def profiles_to_json(k: int, profiles) -> dict:
    return {
        "k": k,
        "profiles": [
            {"id": n, "kind": p.kind, "chosen": [separation_to_json(s) for s in p.separations()]}
            for n, p in enumerate(profiles)
        ],
    }


def profiles_from_json(data, g: Graph) -> tuple[int, list[Profile]]:
    if not isinstance(data, dict) or not isinstance(data.get("k"), int) or not isinstance(data.get("profiles"), list):
        raise ParseError("profiles JSON needs integer 'k' and list 'profiles'")
    system = SeparationSystem(g, data["k"])
    out = []
    for item in data["profiles"]:
        if not isinstance(item, dict) or item.get("kind") not in ("tangle", "profile"):
            raise ParseError("each profile needs kind 'tangle' or 'profile'")
        bits = 0
        for raw in item.get("chosen", []):
            s = separation_from_json(raw)
            j = system.index.get(s)
            if j is None:
                raise ParseError(f"{s!r} is not a separation of order < {data['k']}")
            bits |= 1 << j
        out.append(Profile(system, bits, item["kind"]))
    return data["k"], out


def arcs_from_json(data) -> tuple[tuple, tuple | None]:
    if not isinstance(data, dict) or not isinstance(data.get("arcs"), list):
        raise ParseError("arc JSON needs a list 'arcs'")
    arcs = tuple(tuple(_int_list(a, "arc")) for a in data["arcs"])
    att = data.get("attachment")
    return arcs, (tuple(_int_list(att, "attachment")) if att is not None else None)


def arcs_to_json(arcs, attachment) -> dict:
    return {"arcs": [list(a) for a in arcs], "attachment": sorted(attachment or [])}


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def atomic_write(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
