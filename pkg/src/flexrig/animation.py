"""Animated SVG export of motions (SMIL keyframes on line endpoints)."""
from __future__ import annotations

import json
import math
import os
import tempfile
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .motion import ParametricMotion, grid_angle_to_t
from .nac import NacColoring

RED = "#d62728"
BLUE = "#1f77b4"
NEUTRAL = "#555555"
VERTEX_FILL_MOTION = "#ffffff"
VERTEX_FILL_STATIC = "#333333"
VERTEX_STROKE = "#333333"

SVG_NS = "http://www.w3.org/2000/svg"


def sample_parameters(m: ParametricMotion, frames: int, param_range=None) -> List[Optional[float]]:
    """Parameter values for each frame; None stands for t at infinity.

    Grid motions sweep the rotation angle over a full turn unless an explicit
    t-interval is given; everything else samples ``t`` in [-5, 5].
    """
    if param_range is None and m.provenance == "grid":
        return [grid_angle_to_t(2 * math.pi * k / frames) for k in range(frames)]
    lo, hi = (-5.0, 5.0) if param_range is None else (float(param_range[0]), float(param_range[1]))
    return [lo + (hi - lo) * k / (frames - 1) for k in range(frames)]


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def animation_svg(m: ParametricMotion, nac: Optional[NacColoring] = None, frames: int = 100,
                  duration_s=10, param_range=None, size: int = 400) -> str:
    """SVG 1.1 document animating the motion, one ``<line>`` per edge.

    Edges are stroked red/blue according to ``nac`` when given.
    """
    if frames < 2:
        raise ValueError("an animation needs at least two frames")
    params = sample_parameters(m, frames, param_range)
    samples = [m.sample(t) for t in params]
    xs = [p[0] for s in samples for p in s.values()]
    ys = [p[1] for s in samples for p in s.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    margin = 30.0
    scale = (size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def screen(p: Tuple[float, float]) -> Tuple[float, float]:
        return margin + (p[0] - x0) * scale, margin + (y1 - p[1]) * scale

    track: Dict[int, List[Tuple[float, float]]] = {
        v: [screen(s[v]) for s in samples] for v in m.graph.vertices
    }
    dur = f"{float(Fraction(duration_s)):g}s"

    ET.register_namespace("", SVG_NS)
    root = ET.Element(f"{{{SVG_NS}}}svg", {
        "version": "1.1",
        "width": str(size),
        "height": str(size),
        "viewBox": f"0 0 {size} {size}",
    })

    def animate(el, attr: str, values: Sequence[float]):
        ET.SubElement(el, f"{{{SVG_NS}}}animate", {
            "attributeName": attr,
            "values": ";".join(_fmt(v) for v in values),
            "dur": dur,
            "repeatCount": "indefinite",
        })

    edges = ET.SubElement(root, f"{{{SVG_NS}}}g", {"id": "edges", "stroke-width": "3",
                                                   "stroke-linecap": "round"})
    for u, v in m.graph.edges:
        if nac is None:
            color, kind = NEUTRAL, "edge"
        elif (u, v) in nac.red:
            color, kind = RED, "edge red"
        else:
            color, kind = BLUE, "edge blue"
        line = ET.SubElement(edges, f"{{{SVG_NS}}}line", {
            "class": kind,
            "stroke": color,
            "x1": _fmt(track[u][0][0]), "y1": _fmt(track[u][0][1]),
            "x2": _fmt(track[v][0][0]), "y2": _fmt(track[v][0][1]),
        })
        animate(line, "x1", [p[0] for p in track[u]])
        animate(line, "y1", [p[1] for p in track[u]])
        animate(line, "x2", [p[0] for p in track[v]])
        animate(line, "y2", [p[1] for p in track[v]])

    nodes = ET.SubElement(root, f"{{{SVG_NS}}}g", {"id": "vertices"})
    for v in m.graph.vertices:
        cx, cy = track[v][0]
        circle = ET.SubElement(nodes, f"{{{SVG_NS}}}circle", {
            "class": "vertex", "r": "8",
            "fill": VERTEX_FILL_MOTION, "stroke": VERTEX_STROKE, "stroke-width": "2",
            "cx": _fmt(cx), "cy": _fmt(cy),
        })
        animate(circle, "cx", [p[0] for p in track[v]])
        animate(circle, "cy", [p[1] for p in track[v]])
        label = ET.SubElement(nodes, f"{{{SVG_NS}}}text", {
            "class": "label", "font-size": "10", "text-anchor": "middle",
            "dominant-baseline": "central", "x": _fmt(cx), "y": _fmt(cy),
        })
        label.text = str(v)
        animate(label, "x", [p[0] for p in track[v]])
        animate(label, "y", [p[1] for p in track[v]])

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _atomic_write(path, text: str):
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".flexrig-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_svg(path, document: str):
    """Check well-formedness, then write atomically."""
    ET.fromstring(document.encode("utf-8"))
    _atomic_write(path, document)


def write_json(path, value):
    _atomic_write(path, json.dumps(value, indent=2, sort_keys=True) + "\n")
