"""Command-line front end.

Every subcommand prints a JSON run report (``command``, ``status``,
``payload``, ``diagnostics``) on stdout.  Where a command takes ``--out``,
its data (separations, profiles, located cutpoints, the maximal flower) is
also written there so it can feed the next command.

Exit codes: 0 ok, 1 I/O error, 2 invalid input, 3 size guard hit,
64 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .dot import render_dot
from .extension import PreconditionError, maximalize
from .flower import GuardExceeded, InvalidFlower, classify, is_flower, validate
from .generators import DaisySpec, gen_anemone, gen_clique, gen_daisy, gen_grid
from .profiles import DEFAULT_MAX_PAIRS, NotLocated, enumerate_profiles, locate
from .universe import enumerate_separations

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_GUARD, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Invalid(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path):
    return formats.parse_graph(_read(path))


def _load_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise formats.ParseError(f"{path}: {exc}") from exc


def _load_flower(path, g):
    return formats.flower_from_json(_load_json(path), g)


def _data(args, payload):
    if args.command == "maximalize":
        return payload["flower"]
    return payload


def cmd_separations(args):
    g = _load_graph(args.graph)
    if args.max_order < 0:
        raise UsageError("--max-order must be non-negative")
    return formats.separations_to_json(enumerate_separations(g, args.max_order), args.max_order), []


def cmd_profiles(args):
    g = _load_graph(args.graph)
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    ps = enumerate_profiles(g, args.order, args.tangles_only, args.max_pairs)
    return formats.profiles_to_json(args.order, ps), [f"{len(ps)} orientations found"]


def cmd_validate(args):
    g = _load_graph(args.graph)
    f, stated = _load_flower(args.flower, g)
    rep = validate(g, f, stated)
    payload = rep.to_json()
    if not rep.valid:
        raise _Invalid("flower fails validation", payload)
    payload["classification"] = classify(f)
    payload["is_flower"] = is_flower(f)
    return payload, []


def _load_pair(args):
    g = _load_graph(args.graph)
    f, stated = _load_flower(args.flower, g)
    rep = validate(g, f, stated)
    if not rep.valid:
        raise _Invalid("flower fails validation", rep.to_json())
    k, ps = formats.profiles_from_json(_load_json(args.profiles), g)
    if k != f.k + 1:
        raise UsageError(f"a {f.k}-pseudoflower needs {f.k + 1}-profiles, got {k}-profiles")
    return g, f, ps


def cmd_locate(args):
    g, f, ps = _load_pair(args)
    rows, diags = [], []
    for n, p in enumerate(ps):
        try:
            v, side = locate(f, p)
            rows.append({"id": n, "located": True, "cutpoint": str(v), "side": side})
        except NotLocated:
            rows.append({"id": n, "located": False, "cutpoint": None, "side": None})
            diags.append(f"profile {n} is not located")
    return {"located": rows}, diags


def cmd_maximalize(args):
    g, f, ps = _load_pair(args)
    try:
        trace = []
        result = maximalize(f, ps, g, trace)
    except PreconditionError as exc:
        raise _Invalid(str(exc)) from exc
    return {"flower": formats.flower_to_json(result), "steps": len(trace)}, []


def _write_generated(args, g, f=None):
    payload = {"graph": formats.format_graph(g)}
    if f is not None:
        payload["flower"] = formats.flower_to_json(f)
    if args.graph_out:
        formats.atomic_write(args.graph_out, payload["graph"])
    if f is not None and args.flower_out:
        formats.atomic_write(args.flower_out, formats.canonical_dumps(payload["flower"]))
    return payload, []


def cmd_gen(args):
    kind = args.kind
    if kind == "clique":
        return _write_generated(args, gen_clique(args.n))
    if kind == "grid":
        return _write_generated(args, gen_grid(args.rows, args.cols))
    if kind == "daisy":
        if not (args.base and args.arcs):
            raise UsageError("gen daisy needs --base and --arcs")
        base = _load_graph(args.base)
        arcs, att = formats.arcs_from_json(_load_json(args.arcs))
        try:
            g, f = gen_daisy(DaisySpec(base, arcs, args.x_size, args.copies, att))
        except ValueError as exc:
            raise _Invalid(str(exc)) from exc
        return _write_generated(args, g, f)
    if kind == "anemone":
        if not args.graph:
            raise UsageError("gen anemone needs --graph")
        g = _load_graph(args.graph)
        try:
            x = [int(v) for v in args.x.split(",") if v.strip()]
            grouping = None
            if args.groups:
                grouping = [[int(c) for c in grp.split(",")] for grp in args.groups.split(";")]
        except ValueError as exc:
            raise UsageError(f"bad --x or --groups: {exc}") from exc
        try:
            f = gen_anemone(g, x, grouping)
        except ValueError as exc:
            raise _Invalid(str(exc)) from exc
        return _write_generated(args, g, f)
    raise UsageError(f"unknown generator {kind!r}")


def cmd_render(args):
    g = _load_graph(args.graph)
    f, _ = _load_flower(args.flower, g)
    text = render_dot(g, f)
    formats.atomic_write(args.dot, text)
    return {"dot": args.dot, "clusters": len(f.index()) + 1}, []


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pseudoflowers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("separations", help="list separations of bounded order")
    p.add_argument("--graph", required=True, help="edge-list graph file")
    p.add_argument("--max-order", type=int, required=True, help="largest separator size")
    p.add_argument("--out", help="also write the result data here")
    p.set_defaults(func=cmd_separations)

    p = sub.add_parser("profiles", help="enumerate profiles or tangles of S_K")
    p.add_argument("--graph", required=True, help="edge-list graph file")
    p.add_argument("--order", type=int, required=True, help="K: orient separations of order < K")
    p.add_argument("--tangles-only", action="store_true", help="keep tangles only")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                   help=f"size guard on separation pairs (default {DEFAULT_MAX_PAIRS})")
    p.add_argument("--out", help="also write the result data here")
    p.set_defaults(func=cmd_profiles)

    p = sub.add_parser("validate", help="check a pseudoflower against its graph")
    p.add_argument("--graph", required=True, help="edge-list graph file")
    p.add_argument("--flower", required=True, help="flower JSON file")
    p.set_defaults(func=cmd_validate)

    for name, func, helptext in (("locate", cmd_locate, "locate profiles in a flower"),
                                 ("maximalize", cmd_maximalize, "subdivide petals until maximal")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--graph", required=True, help="edge-list graph file")
        p.add_argument("--flower", required=True, help="flower JSON file")
        p.add_argument("--profiles", required=True, help="profiles JSON file of order k+1")
        p.add_argument("--out", help="also write the result data here")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="generate graphs and flowers")
    p.add_argument("kind", choices=["daisy", "anemone", "grid", "clique"], help="what to generate")
    p.add_argument("--n", type=int, default=4, help="clique size")
    p.add_argument("--rows", type=int, default=2, help="grid rows")
    p.add_argument("--cols", type=int, default=2, help="grid columns")
    p.add_argument("--base", help="daisy: base graph file")
    p.add_argument("--arcs", help="daisy: arc JSON file")
    p.add_argument("--x-size", type=int, default=0, help="daisy: size of X")
    p.add_argument("--copies", type=int, default=3, help="daisy: number of copies")
    p.add_argument("--graph", help="anemone: graph file")
    p.add_argument("--x", default="", help="anemone: comma-separated X vertices")
    p.add_argument("--groups", help="anemone: component groups, e.g. '0,1;2'")
    p.add_argument("--graph-out", help="write the generated graph here")
    p.add_argument("--flower-out", help="write the generated flower here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="write a DOT drawing of a flower")
    p.add_argument("--graph", required=True, help="edge-list graph file")
    p.add_argument("--flower", required=True, help="flower JSON file")
    p.add_argument("--dot", required=True, help="output DOT file")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, code, payload, diags = "ok", EXIT_OK, None, []
    try:
        payload, diags = args.func(args)
    except OSError as exc:
        status, code, diags = "error", EXIT_IO, [f"I/O error: {exc}"]
    except (formats.ParseError, UsageError) as exc:
        status, code, diags = "error", EXIT_USAGE, [str(exc)]
    except GuardExceeded as exc:
        status, code, diags = "error", EXIT_GUARD, [f"guard exceeded: {exc}"]
    except (_Invalid, InvalidFlower) as exc:
        status, code = "invalid", EXIT_INVALID
        payload = getattr(exc, "payload", None)
        diags = [str(exc)]
        if payload and "clauses" in payload:
            diags += [f"clause {c['clause']} {c['code']} failed" for c in payload["clauses"] if not c["passed"]]
    if code == EXIT_OK and getattr(args, "out", None):
        try:
            formats.atomic_write(args.out, formats.canonical_dumps(_data(args, payload)))
        except OSError as exc:
            status, code, diags = "error", EXIT_IO, [f"I/O error: {exc}"]
    report = {"command": args.command, "status": status, "payload": payload, "diagnostics": diags}
    sys.stdout.write(formats.canonical_dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
