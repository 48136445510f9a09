"""Command-line front end.

Exit codes: 0 when the command ran and its check passed, 1 when a check
failed, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import corpus as corpus_mod
from .drawing import (
    Drawing,
    DrawingError,
    drawing_from_json,
    drawing_to_json,
    layout_figure,
    subdivide_drawing,
)
from .graph import (
    DELTA,
    S,
    SD,
    Graph,
    GraphError,
    barycentric_subdivision,
    c_cbar,
    generate,
    gp,
    graph_from_json,
    heawood,
    load_graph,
)
from .obstruction import INTEGER, LAYOUTS, MOD2, make_layout, obstruction
from .strings import (
    RepresentationError,
    drawing_from_strings,
    load_representation,
    strings_from_drawing,
    verify_sd_disjointness,
    verify_string_representation,
)
from .svg import export_svg

OK, FAILED, INPUT_ERROR = 0, 1, 2
PAIR_KINDS = {"delta": DELTA, "s": S, "sd": SD}


class InputError(Exception):
    pass


def _param(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def resolve_graph(tokens: Sequence[str]) -> tuple[Graph, str | None, list]:
    """A graph file path, or a family name followed by its parameters.

    Returns the graph plus the family and parameters when named that way.
    ``subdivide`` takes a nested family, e.g. ``subdivide complete 5 1``.
    """
    if not tokens:
        raise InputError("no graph given")
    head, rest = tokens[0], list(tokens[1:])
    if len(tokens) == 1 and os.path.isfile(head):
        try:
            return load_graph(head), None, []
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read graph {head}: {exc}") from None
    try:
        if head == "subdivide":
            if len(rest) < 2:
                raise InputError("usage: subdivide FAMILY PARAMS... K")
            inner, _, _ = resolve_graph(rest[:-1])
            return generate("subdivide", inner, int(rest[-1])), head, rest
        params = [_param(t) for t in rest]
        return generate(head, *params), head, params
    except (GraphError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _figure_drawing(graph: Graph, family: str | None, params: list) -> Drawing:
    if family == "c_cbar" and params:
        return layout_figure("c_cbar", int(params[0]))
    if family in ("heawood", "gp"):
        return layout_figure(family)
    # a graph file: recognise the figure graphs by equality
    if graph == heawood():
        return layout_figure("heawood")
    if graph == gp():
        return layout_figure("gp")
    if graph.n % 4 == 0 and graph.n >= 20 and graph == c_cbar(graph.n // 4):
        return layout_figure("c_cbar", graph.n // 4)
    raise InputError("the figure layout exists only for heawood, gp and c_cbar N")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    graph, _, _ = resolve_graph([args.family, *args.params])
    _emit(graph.to_json(), args.output)
    return OK


def cmd_obstruction(args) -> int:
    graph, family, params = resolve_graph(args.graph)
    kind = PAIR_KINDS[args.pairs]
    if args.layout == "figure":
        drawing = _figure_drawing(graph, family, params)
    else:
        drawing = make_layout(graph, args.layout, args.seed)
    if kind == SD:
        drawing = subdivide_drawing(drawing, barycentric_subdivision(graph))
    report = obstruction(graph, kind, args.mode, drawing=drawing)
    payload = report.to_json()
    verified = report.verify()
    payload["verified"] = verified
    payload["odd_pairs"] = len(report.crossings.odd_pairs())
    _emit(payload, args.output)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(export_svg(drawing, highlight=report.crossings.odd_pairs()))
    if not verified:
        return FAILED
    if args.expect is not None and report.vanishes != (args.expect == "vanishes"):
        return FAILED
    return OK


def _load_rep(args):
    graph = resolve_graph([args.graph])[0] if args.graph else None
    try:
        return load_representation(args.rep, graph)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read representation {args.rep}: {exc}") from None


def cmd_strings(args) -> int:
    if args.action == "verify":
        report = verify_string_representation(_load_rep(args))
        _emit(report.to_json(), args.output)
        return OK if report.valid else FAILED

    if args.action in ("to-drawing", "roundtrip"):
        rep = _load_rep(args)
        report = verify_string_representation(rep)
        if not report.valid:
            _emit(report.to_json(), args.output)
            return FAILED
        sub, d = drawing_from_strings(rep)
        disjoint = verify_sd_disjointness(sub, d)
        if args.action == "to-drawing":
            _emit({"source": rep.graph.to_json(), "drawing": drawing_to_json(d),
                   "disjoint": disjoint.passed,
                   "clashes": [list(p) for p in disjoint.clashes]}, args.output)
            if args.svg:
                with open(args.svg, "w") as fh:
                    fh.write(export_svg(d))
            return OK if disjoint.passed else FAILED
        back = strings_from_drawing(sub, d)
        again = verify_string_representation(back)
        _emit({"disjoint": disjoint.passed, **again.to_json()}, args.output)
        return OK if disjoint.passed and again.valid else FAILED

    # from-drawing
    try:
        with open(args.rep) as fh:
            data = json.load(fh)
        source = graph_from_json(data["source"])
        d = drawing_from_json(data["drawing"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read drawing {args.rep}: {exc}") from None
    sub = barycentric_subdivision(source)
    if d.graph != sub.star:
        raise InputError("drawing is not a drawing of the subdivided source graph")
    disjoint = verify_sd_disjointness(sub, d)
    if not disjoint.passed:
        _emit({"valid": False, "clashes": [list(p) for p in disjoint.clashes]}, args.output)
        return FAILED
    rep = strings_from_drawing(sub, d)
    report = verify_string_representation(rep)
    _emit({**rep.to_json(), "valid": report.valid}, args.output)
    return OK if report.valid else FAILED


def cmd_corpus(args) -> int:
    try:
        spec = corpus_mod.load_spec(args.spec)
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"bad corpus spec {args.spec}: {exc}") from None
    try:
        workers = args.threads if args.threads is not None else corpus_mod.worker_count()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    summary = corpus_mod.run_corpus(spec, workers=workers)
    _emit(summary, args.output)
    return OK if summary["passed"] else FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringob",
                                     description="Modified Van Kampen obstructions for string graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph from a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("obstruction", help="decide whether an obstruction vanishes")
    p.add_argument("graph", nargs="+", help="graph file, or a family name with parameters")
    p.add_argument("--pairs", choices=sorted(PAIR_KINDS), default="s")
    p.add_argument("--mode", choices=(MOD2, INTEGER), default=MOD2)
    p.add_argument("--layout", choices=(*LAYOUTS, "figure"), default="moment")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", help="also write the drawing used, odd pairs marked")
    p.add_argument("--expect", choices=("vanishes", "obstructed"),
                   help="exit 1 unless the decision matches")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("strings", help="string representation tools")
    p.add_argument("action", choices=("verify", "to-drawing", "from-drawing", "roundtrip"))
    p.add_argument("rep", help="representation JSON (or to-drawing output for from-drawing)")
    p.add_argument("--graph", help="graph file to verify against instead of the one in the file")
    p.add_argument("--svg")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_strings)

    p = sub.add_parser("corpus", help="run a seeded batch of checks")
    p.add_argument("spec")
    p.add_argument("--threads", type=int, help="worker processes (default: STRINGOB_THREADS or CPU count)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, GraphError, DrawingError, RepresentationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
