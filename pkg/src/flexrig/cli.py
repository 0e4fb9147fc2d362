"""``flexrig`` command line: inspect graphs, list colourings, build motions.

Graph sources: a JSON file, ``-`` for stdin, ``int:<n>:<vertex_count>`` or
``catalog:<name>`` (e.g. ``catalog:C4``, ``catalog:CompleteBipartite(2,3)``).

Exit codes: 0 success, 1 usage error, 2 invalid input graph or unwritable
output, 3 infeasible request.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional

from . import graph as gmod
from .algebra import as_fraction
from .animation import animation_svg, write_svg
from .errors import (
    BaseListTooShort,
    DegenerateCoupling,
    Disconnected,
    GraphError,
    IrrationalLength,
    NotAnEdge,
    UnknownEdge,
    UnknownName,
)
from .graph import FlexGraph, automorphisms, catalog, from_integer, integer_encoding, triangle_components
from .motion import analyze_motion, fix_edge, grid_motion, motion_to_json, spatial_motion
from .movable import (
    constant_distance_closure,
    find_spatial_embedding,
    movability_status,
    spatial_embedding,
)
from .nac import NacColoring, has_nac_coloring, is_nac_coloring, isomorphism_classes, nac_colorings, named_colorings

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class Infeasible(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(source: str, stdin=None) -> FlexGraph:
    try:
        if source.startswith("catalog:"):
            return catalog(source[len("catalog:"):])
        if source.startswith("int:"):
            m = re.fullmatch(r"int:(\d+):(\d+)", source)
            if not m:
                raise InputError(f"expected int:<decimal>:<vertex_count>, got {source!r}")
            return from_integer(int(m.group(1)), int(m.group(2)))
        if source == "-":
            text = (stdin or sys.stdin).read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return FlexGraph.from_json(json.loads(text))
    except (GraphError, UnknownName, OSError, ValueError, TypeError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def _exact_json(text: str):
    """JSON with exact numbers; bare fractions like 3/4 are allowed."""
    text = re.sub(r"(?<![\w.\"])(-?\d+/\d+)", r'"\1"', text)
    return json.loads(text, parse_float=Fraction, parse_int=Fraction)


def _int_pair(text: str):
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _bracket_list(items: List[str], indent: str = " ") -> str:
    return "[" + (",\n" + indent).join(items) + "]"


def _emit_json(out, value):
    out.write(json.dumps(value, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------- commands

def cmd_catalog(args, out):
    if args.name is None:
        for name in gmod.catalog_names():
            out.write(name + "\n")
        return
    g = load_graph("catalog:" + args.name)
    if args.json:
        _emit_json(out, g.to_json())
    else:
        out.write(repr(g) + "\n")


def cmd_graph_info(args, out):
    g = load_graph(args.source)
    if args.json:
        _emit_json(out, g.to_json())
        return
    parts = triangle_components(g).components
    out.write(repr(g) + "\n")
    out.write(f"vertices: {len(g.vertices)}\nedges: {len(g.edges)}\n")
    out.write(f"connected: {g.is_connected()}\n")
    out.write(f"integer encoding: {integer_encoding(g)}\n")
    out.write(f"triangle components: {len(parts)}\n")
    for comp in parts:
        out.write(f"  {[list(e) for e in comp]}\n")
    if len(g.vertices) <= gmod._max_vertices():
        out.write(f"automorphisms: {len(automorphisms(g))}\n")


def cmd_nac_list(args, out):
    g = load_graph(args.source)
    cs = named_colorings(g) if args.names else nac_colorings(g)
    if args.json:
        _emit_json(out, [c.to_json() for c in cs])
    else:
        out.write(_bracket_list([str(c) for c in cs]) + "\n")


def cmd_nac_check(args, out):
    g = load_graph(args.source)
    if args.red is None:
        out.write(f"{has_nac_coloring(g)}\n")
        return
    try:
        red = json.loads(args.red)
    except ValueError as exc:
        raise UsageError(f"--red must be a JSON edge list: {exc}") from exc
    try:
        out.write(f"{is_nac_coloring(g, red)}\n")
    except UnknownEdge as exc:
        raise InputError(str(exc)) from exc


def cmd_nac_classes(args, out):
    g = load_graph(args.source)
    classes = isomorphism_classes(g, nac_colorings(g))
    if args.json:
        _emit_json(out, [{"letter": k.letter, "members": [c.to_json() for c in k.members]} for k in classes])
        return
    blocks = [_bracket_list([str(c) for c in k.members], indent="  ") for k in classes]
    out.write(_bracket_list(blocks) + "\n")


def _pick_coloring(g: FlexGraph, index: int) -> NacColoring:
    cs = nac_colorings(g)
    if not cs:
        raise Infeasible("the graph has no NAC-coloring")
    if not 0 <= index < len(cs):
        raise Infeasible(f"NAC-coloring index {index} out of range (0..{len(cs) - 1})")
    return cs[index]


def _finish_motion(args, motion, nac, out):
    if getattr(args, "fix_edge", None):
        motion = fix_edge(motion, _int_pair(args.fix_edge))
    if args.json:
        _emit_json(out, motion_to_json(motion, args.display))
    else:
        out.write(motion.parametrization(args.display) + "\n")
    if args.svg:
        doc = animation_svg(motion, nac=nac if args.color else None, frames=args.frames,
                            duration_s=args.duration)
        write_svg(args.svg, doc)
    if args.check:
        info = analyze_motion(motion)
        out.write(f"flex: {info.is_flex}, nontrivial: {info.nontrivial}, proper: {info.proper}\n")


def cmd_motion_grid(args, out):
    g = load_graph(args.source)
    c = _pick_coloring(g, args.nac)
    zigzag = None
    if args.zigzag:
        try:
            zigzag = _exact_json(args.zigzag)
        except ValueError as exc:
            raise UsageError(f"--zigzag must be JSON: {exc}") from exc
        if not (isinstance(zigzag, list) and len(zigzag) == 2):
            raise UsageError("--zigzag needs two lists of points")
    motion = grid_motion(g, c, zigzag)
    _finish_motion(args, motion, c, out)


def cmd_motion_spatial(args, out):
    g = load_graph(args.source)
    cs = nac_colorings(g)
    if args.pair:
        i, j = _int_pair(args.pair)
        if not (0 <= i < len(cs) and 0 <= j < len(cs)):
            raise Infeasible(f"pair {i},{j} out of range for {len(cs)} NAC-colorings")
        emb = spatial_embedding(g, cs[i], cs[j])
        if emb is None:
            raise Infeasible(f"NAC-colorings {i} and {j} give no injective spatial embedding")
    else:
        found = find_spatial_embedding(g, cs)
        if found is None:
            raise Infeasible("no pair of NAC-colorings gives an injective spatial embedding")
        emb = found[1]
    motion = spatial_motion(g, emb, args.coupling)
    _finish_motion(args, motion, None, out)


def cmd_movable(args, out):
    g = load_graph(args.source)
    verdict = movability_status(g)
    if args.json:
        _emit_json(out, verdict.to_json())
        return
    out.write(str(verdict) + "\n")
    for c in verdict.witness:
        out.write(f"  {c}\n")
    if verdict.closure is not None:
        out.write(f"  constant distance closure: {verdict.closure!r}\n")


def cmd_cdc(args, out):
    g = load_graph(args.source)
    trace = constant_distance_closure(g)
    if args.json:
        _emit_json(out, trace.to_json())
        return
    for k, stage in enumerate(trace.stages):
        out.write(f"stage {k}: U = {[list(e) for e in sorted(stage.upairs)]}\n")
    out.write(f"closure: {trace.closure!r}\n")
    out.write(f"complete: {trace.complete}\n")


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flexrig", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(p):
        p.add_argument("source", help="graph JSON file, '-', int:<n>:<k> or catalog:<name>")

    p = sub.add_parser("catalog", help="list named graphs or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    graph = sub.add_parser("graph", help="graph inspection").add_subparsers(dest="action", required=True,
                                                                          parser_class=_Parser)
    p = graph.add_parser("info", help='summary; JSON format {"vertices": [...], "edges": [[u, v], ...]}')
    source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph_info)

    nac = sub.add_parser("nac", help="NAC-colorings").add_subparsers(dest="action", required=True,
                                                                    parser_class=_Parser)
    p = nac.add_parser("list", help="all NAC-colorings up to colour swap")
    source(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--names", action="store_true", help="apply Greek-letter class names")
    p.set_defaults(func=cmd_nac_list)
    p = nac.add_parser("check", help="existence, or validity of --red")
    source(p)
    p.add_argument("--red", help="JSON list of red edges to test")
    p.set_defaults(func=cmd_nac_check)
    p = nac.add_parser("classes", help="isomorphism classes under graph automorphisms")
    source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nac_classes)

    motion = sub.add_parser("motion", help="construct motions").add_subparsers(dest="action", required=True,
                                                                              parser_class=_Parser)

    def motion_opts(p, display):
        source(p)
        p.add_argument("--display", choices=("trig", "rational"), default=display)
        p.add_argument("--json", action="store_true", help="motion as JSON (ascending [num, den] coefficients)")
        p.add_argument("--svg", metavar="FILE", help="write an animated SVG")
        p.add_argument("--frames", type=int, default=100)
        p.add_argument("--duration", type=_rational, default=Fraction(10), help="seconds per loop")
        p.add_argument("--fix-edge", metavar="U,V")
        p.add_argument("--check", action="store_true", help="print flex/nontrivial/proper")

    p = motion.add_parser("grid", help="grid or zig-zag construction from a NAC-coloring")
    motion_opts(p, "trig")
    p.add_argument("--nac", type=int, default=0, help="index into 'nac list'")
    p.add_argument("--zigzag", metavar="JSON",
                   help="[[rotating base points], [fixed base points]], fractions like 3/4 allowed")
    p.add_argument("--no-color", dest="color", action="store_false", help="neutral edge colour in the SVG")
    p.set_defaults(func=cmd_motion_grid)

    p = motion.add_parser("spatial", help="motion from a spatial embedding of a NAC-coloring pair")
    motion_opts(p, "rational")
    p.add_argument("--pair", metavar="I,J", help="indices into 'nac list' (default: first that works)")
    p.add_argument("--coupling", type=_rational, default=Fraction(3), help="coupling constant L, |L| != 0, 1")
    p.set_defaults(func=cmd_motion_spatial, color=False)

    p = sub.add_parser("movable", help="movability verdict with witness")
    source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_movable)

    p = sub.add_parser("cdc", help="constant distance closure trace")
    source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cdc)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "frames", 2) < 2:
        err.write("flexrig: error: --frames must be at least 2\n")
        return EXIT_USAGE
    try:
        args.func(args, out)
    except UsageError as exc:
        err.write(f"flexrig: error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        err.write(f"flexrig: invalid input: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err.write(f"flexrig: cannot write output: {exc}\n")
        return EXIT_INPUT
    except (Infeasible, Disconnected, BaseListTooShort, DegenerateCoupling, NotAnEdge,
            IrrationalLength) as exc:
        err.write(f"flexrig: infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
