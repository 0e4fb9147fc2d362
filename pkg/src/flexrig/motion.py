"""Parametric motions with exact rational-function coordinates.

A motion maps every vertex to a :class:`~flexrig.algebra.Point` in the
parameter ``t``. Grid motions use the rotation with
``(cos, sin) = halfangle_unit(1)`` and can be printed back in
``sin(alpha)``/``cos(alpha)`` form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import (
    Point,
    Poly,
    RatFunc,
    as_fraction,
    coupled_unit,
    format_ratfunc,
    halfangle_unit,
    rational_sqrt,
)
from .errors import (
    BaseListTooShort,
    DegenerateCoupling,
    Disconnected,
    InvalidEmbedding,
    IrrationalLength,
    NotAnEdge,
)
from .graph import Edge, FlexGraph
from .nac import NacColoring, color_components

DIRECTIONS = {
    "A": (1, 0, 0),
    "B": (0, 1, 0),
    "C": (0, 0, 1),
    "D": (-1, -1, -1),
}


@dataclass(frozen=True)
class ParametricMotion:
    graph: FlexGraph
    points: Dict[int, Point]
    display: str = "rational"
    provenance: str = "grid"

    def squared_distance(self, u: int, v: int) -> RatFunc:
        return (self.points[u] - self.points[v]).norm2()

    def parametrization(self, display: Optional[str] = None) -> str:
        return format_parametrization(self, display)

    def sample(self, t) -> Dict[int, Tuple[float, float]]:
        """Numeric placement at ``t`` (None evaluates the limit t -> infinity)."""
        out = {}
        for v, p in self.points.items():
            x, y = p(t)
            out[v] = (float(x), float(y))
        return out


@dataclass(frozen=True)
class GridPlacement:
    coords: Dict[int, Tuple[int, int]]
    red_base: Tuple[Tuple[Fraction, Fraction], ...]
    blue_base: Tuple[Tuple[Fraction, Fraction], ...]


def _require_connected(g: FlexGraph):
    if not g.is_connected():
        raise Disconnected("the graph is not connected")


def grid_placement(g: FlexGraph, c: NacColoring, zigzag=None) -> GridPlacement:
    """Grid coordinates (red component, blue component) and base points.

    ``zigzag`` is a pair ``(rotating, fixed)`` of point lists: the first is
    indexed by blue components and rotates, the second by red components
    and stays put. Default bases are ``(0, j)`` and ``(i, 0)``.
    """
    _require_connected(g)
    cc = color_components(g, c)
    n_red, n_blue = len(cc.red_components), len(cc.blue_components)
    if zigzag is None:
        blue_base = [(Fraction(0), Fraction(j)) for j in range(n_blue)]
        red_base = [(Fraction(i), Fraction(0)) for i in range(n_red)]
    else:
        rotating, fixed = zigzag
        blue_base = [(as_fraction(p[0]), as_fraction(p[1])) for p in rotating]
        red_base = [(as_fraction(p[0]), as_fraction(p[1])) for p in fixed]
        if len(blue_base) < n_blue or len(red_base) < n_red:
            raise BaseListTooShort(
                f"need {n_blue} rotating and {n_red} fixed base points, "
                f"got {len(blue_base)} and {len(red_base)}")
    return GridPlacement(dict(cc.indices), tuple(red_base), tuple(blue_base))


def grid_motion(g: FlexGraph, c: NacColoring, zigzag=None) -> ParametricMotion:
    """Grid (or zig-zag) construction: ``p(v) = a_i + Rot(t) b_j``.

    With the default bases this is ``(i + j sin(alpha), j cos(alpha))``.
    """
    gp = grid_placement(g, c, zigzag)
    unit = halfangle_unit(1)
    cos, sin = unit.x, unit.y
    points = {}
    for v in g.vertices:
        i, j = gp.coords[v]
        ax, ay = gp.red_base[i]
        bx, by = gp.blue_base[j]
        points[v] = Point(ax + cos * bx + sin * by, ay - sin * bx + cos * by)
    return ParametricMotion(g, points, display="trig", provenance="grid")


def spatial_motion(g: FlexGraph, emb, L=3) -> ParametricMotion:
    """Planar motion from a spatial embedding with four edge directions.

    The three axes are sent to ``1``, ``-L z`` and ``L z'`` (complex
    numbers in ``t``) with ``z = halfangle_unit(1)`` and ``z'`` its
    coupled curve; the diagonal then goes to ``-z z'`` and the four images
    sum to zero, so the map is well defined on every cycle.
    """
    L = as_fraction(L)
    if L == 0:
        raise DegenerateCoupling("coupling constant must be nonzero")
    check_embedding(g, emb)
    z = halfangle_unit(1)
    zc = coupled_unit(z, L)
    w_a = Point.of(1, 0)
    w_b = -z.point.scale(L)
    w_c = zc.point.scale(L)
    root = emb.omega[min(g.vertices)]
    points = {}
    for v in g.vertices:
        x, y, zz = (a - b for a, b in zip(emb.omega[v], root))
        points[v] = w_a.scale(x) + w_b.scale(y) + w_c.scale(zz)
    return ParametricMotion(g, points, display="rational", provenance="spatial")


def spatial_images(L=3) -> Dict[str, Point]:
    """Planar direction functions for the four embedding directions."""
    L = as_fraction(L)
    z = halfangle_unit(1)
    zc = coupled_unit(z, L)
    return {
        "A": Point.of(1, 0),
        "B": -z.point.scale(L),
        "C": zc.point.scale(L),
        "D": -(z.point.cmul(zc.point)),
    }


def check_embedding(g: FlexGraph, emb):
    """Raise InvalidEmbedding unless every edge follows its class direction."""
    for e in g.edges:
        u, v = e
        if e not in emb.class_of or e not in emb.edge_scalar:
            raise InvalidEmbedding(f"edge {e} has no class or scalar")
        d = DIRECTIONS[emb.class_of[e]]
        s = emb.edge_scalar[e]
        if s == 0:
            raise InvalidEmbedding(f"edge {e} has a zero scalar")
        diff = tuple(a - b for a, b in zip(emb.omega[u], emb.omega[v]))
        if diff != tuple(s * x for x in d):
            raise InvalidEmbedding(f"edge {e} is not parallel to its direction {d}")


def fix_edge(m: ParametricMotion, edge: Sequence[int]) -> ParametricMotion:
    """Apply a direct isometry per frame so that ``u`` sits at the origin and
    ``v`` at ``(length, 0)``."""
    u, v = int(edge[0]), int(edge[1])
    if not m.graph.has_edge(u, v):
        raise NotAnEdge(f"{(u, v)} is not an edge")
    d = m.points[v] - m.points[u]
    length2 = d.norm2().constant_value()
    if length2 is None:
        raise NotAnEdge(f"edge {(u, v)} does not keep its length")
    length = rational_sqrt(length2)
    if length is None:
        raise IrrationalLength(f"edge length sqrt({length2}) is not rational")
    dx, dy = d.x / length, d.y / length
    base = m.points[u]
    points = {}
    for w, p in m.points.items():
        q = p - base
        points[w] = Point(dx * q.x + dy * q.y, dx * q.y - dy * q.x)
    return ParametricMotion(m.graph, points, m.display, m.provenance)


@dataclass(frozen=True)
class MotionAnalysis:
    labeling: Dict[Edge, Fraction]
    is_flex: bool
    nontrivial: bool
    proper: bool
    sample: Callable = field(repr=False)


def analyze_motion(m: ParametricMotion) -> MotionAnalysis:
    labeling = {}
    is_flex = True
    for u, v in m.graph.edges:
        c = m.squared_distance(u, v).constant_value()
        if c is None:
            is_flex = False
        else:
            labeling[(u, v)] = c
    nontrivial = False
    proper = True
    verts = m.graph.vertices
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            diff = m.points[verts[a]] - m.points[verts[b]]
            if diff.is_zero():
                proper = False
            if diff.norm2().constant_value() is None:
                nontrivial = True
    return MotionAnalysis(labeling, is_flex, nontrivial, proper, m.sample)


# ---------------------------------------------------------------- display

def _trig_split(f: RatFunc):
    """Write f as c0 + cc*cos + cs*sin, or None if it is not of that form.

    cos = (t^2-1)/(t^2+1) and sin = -2t/(t^2+1), so the numerator over
    t^2+1 is (c0+cc) t^2 - 2 cs t + (c0-cc).
    """
    if f.den.degree == 0:
        if f.num.degree > 0:
            return None
        return f.num.lead, Fraction(0), Fraction(0)
    if f.den != Poly((1, 0, 1)) or f.num.degree > 2:
        return None
    c = list(f.num.coeffs) + [Fraction(0)] * (3 - len(f.num.coeffs))
    c0 = (c[2] + c[0]) / 2
    cc = (c[2] - c[0]) / 2
    cs = -c[1] / 2
    return c0, cc, cs


def _fmt_num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_trig(parts) -> str:
    c0, cc, cs = parts
    terms = []
    for coef, name in ((cc, "cos(alpha)"), (cs, "sin(alpha)"), (c0, None)):
        if coef == 0:
            continue
        a = abs(coef)
        if name is None:
            body = _fmt_num(a)
        else:
            body = name if a == 1 else f"{_fmt_num(a)}*{name}"
        if not terms:
            terms.append(f"-{body}" if coef < 0 else body)
        else:
            terms.append(f" - {body}" if coef < 0 else f" + {body}")
    return "".join(terms) or "0"


def format_parametrization(m: ParametricMotion, display: Optional[str] = None) -> str:
    """``{v: (x, y), ...}`` one vertex per line; ``trig`` falls back to
    rational form when some coordinate is not linear in sin/cos."""
    display = display or m.display
    rows = []
    split = None
    if display == "trig":
        split = {}
        for v, p in m.points.items():
            sx, sy = _trig_split(p.x), _trig_split(p.y)
            if sx is None or sy is None:
                split = None
                break
            split[v] = (sx, sy)
    for v in m.graph.vertices:
        p = m.points[v]
        if split is not None:
            x, y = format_trig(split[v][0]), format_trig(split[v][1])
        else:
            x, y = format_ratfunc(p.x), format_ratfunc(p.y)
        rows.append(f"{v}: ({x}, {y})")
    return "{" + ",\n ".join(rows) + "}"


def _coeff_pairs(p: Poly) -> List[List[int]]:
    return [[c.numerator, c.denominator] for c in p.coeffs]


def motion_to_json(m: ParametricMotion, display: Optional[str] = None) -> dict:
    verts = {}
    for v in m.graph.vertices:
        p = m.points[v]
        verts[str(v)] = {
            axis: {"num": _coeff_pairs(f.num), "den": _coeff_pairs(f.den)}
            for axis, f in (("x", p.x), ("y", p.y))
        }
    return {
        "parameter": "t",
        "display": display or m.display,
        "provenance": m.provenance,
        "graph": m.graph.to_json(),
        "vertices": verts,
    }


def _poly_from_pairs(pairs) -> Poly:
    return Poly(Fraction(int(a), int(b)) for a, b in pairs)


def motion_from_json(data: dict, graph: Optional[FlexGraph] = None) -> ParametricMotion:
    if graph is None:
        graph = FlexGraph.from_json(data["graph"])
    points = {}
    for key, coords in data["vertices"].items():
        fx, fy = (RatFunc(_poly_from_pairs(coords[a]["num"]), _poly_from_pairs(coords[a]["den"]))
                  for a in ("x", "y"))
        points[int(key)] = Point(fx, fy)
    return ParametricMotion(graph, points, data.get("display", "rational"),
                            data.get("provenance", "grid"))


def grid_angle_to_t(alpha: float) -> Optional[float]:
    """Parameter t with (cos, sin)(t) = (cos alpha, sin alpha); None at the pole alpha = 0."""
    half = (alpha - math.pi) / 2
    if abs(math.cos(half)) < 1e-12:
        return None
    return math.tan(half)
