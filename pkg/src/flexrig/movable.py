"""Movability: injective grids, spatial embeddings, constant distance closure."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, count
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .algebra import linear_solve
from .errors import Disconnected
from .graph import Edge, FlexGraph, UnionFind, norm_edge
from .motion import DIRECTIONS
from .nac import NacColoring, color_components, nac_colorings

PAIR_CLASSES = ("RR", "RB", "BR", "BB")
# order in which classes are offered the diagonal direction
DIAGONAL_ORDER = ("BB", "BR", "RB", "RR")
_COMPLEMENT = {"RR": "BB", "BB": "RR", "RB": "BR", "BR": "RB"}


def _require_connected(g: FlexGraph):
    if not g.is_connected():
        raise Disconnected("the graph is not connected")


def has_injective_grid_construction(g: FlexGraph, colorings=None) -> Tuple[bool, Optional[NacColoring]]:
    """First colouring whose (red, blue) component index map is injective."""
    _require_connected(g)
    if colorings is None:
        colorings = nac_colorings(g)
    for c in colorings:
        idx = color_components(g, c).indices
        if len(set(idx.values())) == len(idx):
            return True, c
    return False, None


@dataclass(frozen=True)
class SpatialEmbedding:
    omega: Dict[int, Tuple[Fraction, Fraction, Fraction]]
    edge_scalar: Dict[Edge, Fraction]
    class_of: Dict[Edge, str]
    pair_class: Dict[str, str]  # "A".."D" -> colour pair such as "RB"

    @property
    def direction_of(self) -> Dict[str, Tuple[int, int, int]]:
        return dict(DIRECTIONS)


def _pair_class(c1: NacColoring, c2: NacColoring, e: Edge) -> str:
    return ("R" if e in c1.red else "B") + ("R" if e in c2.red else "B")


def trial_values() -> Iterator[Fraction]:
    """1, -1, 2, 1/2, -2, -1/2, 3, ... : distinct nonzero rationals by height."""
    seen = set()
    for height in count(2):
        for den in range(1, height):
            num = height - den
            for sign in (1, -1):
                for x in (Fraction(num, den), Fraction(den, num)):
                    x = sign * x
                    if x not in seen:
                        seen.add(x)
                        yield x


def _axis_assignment(diagonal: str) -> Dict[str, str]:
    # the class opposite the diagonal (differing in both colours) takes the
    # first axis; the remaining two follow in DIAGONAL_ORDER
    first = _COMPLEMENT[diagonal]
    rest = [p for p in DIAGONAL_ORDER if p not in (diagonal, first)]
    return {"A": first, "B": rest[0], "C": rest[1], "D": diagonal}


def _dot(row, vec) -> Fraction:
    return sum((a * b for a, b in zip(row, vec) if a), Fraction(0))


def _spanning_tree(g: FlexGraph, root: int) -> Dict[int, List[Tuple[Edge, int]]]:
    """For each vertex, the tree path from ``root`` as (edge, sign) steps.

    Following a step from parent ``p`` to child ``c`` adds
    ``sign * t_e * d_e`` to the position, where ``omega(u) - omega(v) = t_e d_e``
    for the edge ``(u, v)`` with ``u < v``.
    """
    paths = {root: []}
    queue = [root]
    for x in queue:
        for y in g.adjacency[x]:
            if y not in paths:
                e = norm_edge(x, y)
                paths[y] = paths[x] + [(e, 1 if y == e[0] else -1)]
                queue.append(y)
    return paths


def spatial_embedding(g: FlexGraph, c1: NacColoring, c2: NacColoring,
                      max_trials: int = 200) -> Optional[SpatialEmbedding]:
    """Injective embedding in 3-space whose edge directions follow the colour
    pairs of ``(c1, c2)``, or None.

    The unknowns are the edge scalars; positions are accumulated along a
    spanning tree and every non-tree edge gives three homogeneous equations.
    Each of the four choices of diagonal class is tried. A concrete point of
    the solution space is taken on the moment curve ``x -> (1, x, x^2, ...)``
    in nullspace coordinates, which leaves every non-identically-zero linear
    form nonzero for all but finitely many x.
    """
    if c1 == c2:
        return None
    classes = {e: _pair_class(c1, c2, e) for e in g.edges}
    if set(classes.values()) != set(PAIR_CLASSES):
        return None
    verts = list(g.vertices)
    root = min(verts)
    paths = _spanning_tree(g, root)
    if len(paths) != len(verts):
        return None
    col = {e: k for k, e in enumerate(g.edges)}
    m = len(g.edges)
    tree_edges = {e for p in paths.values() for e, _ in p}

    for diagonal in DIAGONAL_ORDER:
        assign = _axis_assignment(diagonal)
        letter = {pair: axis for axis, pair in assign.items()}
        direction = {e: DIRECTIONS[letter[classes[e]]] for e in g.edges}

        # position of every vertex as 3 linear forms in the edge scalars
        pos = {}
        for v in verts:
            forms = [[0] * m for _ in range(3)]
            for e, sign in paths[v]:
                for a in range(3):
                    forms[a][col[e]] += sign * direction[e][a]
            pos[v] = forms
        rows = []
        for e in g.edges:
            if e in tree_edges:
                continue
            u, v = e
            for a in range(3):
                row = [x - y for x, y in zip(pos[u][a], pos[v][a])]
                row[col[e]] -= direction[e][a]
                rows.append(row)
        if rows:
            basis = linear_solve(rows, [0] * len(rows)).nullspace
        else:
            basis = tuple(tuple(Fraction(int(i == k)) for i in range(m)) for k in range(m))
        if not basis:
            continue

        def on_basis(form):
            return [_dot(form, b) for b in basis]

        scalar_forms = [[b[k] for b in basis] for k in range(m)]
        pair_forms = [[on_basis([x - y for x, y in zip(pos[u][a], pos[v][a])]) for a in range(3)]
                      for u, v in combinations(verts, 2)]
        if any(not any(f) for f in scalar_forms):
            continue
        if any(not any(any(f) for f in comp) for comp in pair_forms):
            continue
        for trial, x in enumerate(trial_values()):
            if trial >= max_trials:
                break
            coeffs = [x ** k for k in range(len(basis))]
            if any(_dot(f, coeffs) == 0 for f in scalar_forms):
                continue
            if any(all(_dot(f, coeffs) == 0 for f in comp) for comp in pair_forms):
                continue
            scalars_vec = [_dot(f, coeffs) for f in scalar_forms]
            omega = {v: tuple(_dot(pos[v][a], scalars_vec) for a in range(3)) for v in verts}
            scalars = {e: scalars_vec[col[e]] for e in g.edges}
            class_of = {e: letter[classes[e]] for e in g.edges}
            return SpatialEmbedding(omega, scalars, class_of, assign)
    return None


def has_injective_spatial_embedding(g: FlexGraph, certificate: bool = False, colorings=None):
    """Search unordered pairs of colourings for a spatial embedding.

    Returns a bool, or ``(bool, pair or None)`` when ``certificate`` is set.
    """
    _require_connected(g)
    found = find_spatial_embedding(g, colorings)
    if certificate:
        return (True, found[0]) if found else (False, None)
    return found is not None


def find_spatial_embedding(g: FlexGraph, colorings=None):
    """``((c1, c2), embedding)`` for the first working pair, or None."""
    if colorings is None:
        colorings = nac_colorings(g)
    for c1, c2 in combinations(colorings, 2):
        emb = spatial_embedding(g, c1, c2)
        if emb is not None:
            return (c1, c2), emb
    return None


# ------------------------------------------------- constant distance closure

def unicolor_pairs(g: FlexGraph, colorings=None) -> FrozenSet[Edge]:
    """Non-adjacent pairs joined by a path monochromatic in every colouring.

    Edges with the same colour vector across all colourings form classes; a
    pair qualifies iff it is connected inside one class. With no colourings
    all edges share the empty vector.
    """
    if colorings is None:
        colorings = nac_colorings(g)
    by_sig: Dict[tuple, List[Edge]] = {}
    for e in g.edges:
        sig = tuple(e in c.red for c in colorings)
        by_sig.setdefault(sig, []).append(e)
    pairs = set()
    for edges in by_sig.values():
        uf = UnionFind()
        for u, v in edges:
            uf.add(u)
            uf.add(v)
            uf.union(u, v)
        for group in uf.groups():
            for u, v in combinations(group, 2):
                if not g.has_edge(u, v):
                    pairs.add((u, v))
    return frozenset(pairs)


@dataclass(frozen=True)
class CdcStage:
    graph: FlexGraph
    upairs: FrozenSet[Edge]


@dataclass(frozen=True)
class CdcTrace:
    stages: Tuple[CdcStage, ...]
    closure: FlexGraph

    @property
    def complete(self) -> bool:
        return self.closure.is_complete()

    def to_json(self) -> dict:
        return {
            "stages": [{"added": [list(e) for e in sorted(s.upairs)]} for s in self.stages],
            "complete": self.complete,
        }


def constant_distance_closure(g: FlexGraph) -> CdcTrace:
    stages = []
    current = g
    while True:
        up = unicolor_pairs(current)
        stages.append(CdcStage(current, up))
        if not up:
            return CdcTrace(tuple(stages), current)
        current = current.with_edges(up)


@dataclass(frozen=True)
class Movability:
    status: str  # "Movable", "NotMovable" or "Unknown"
    reason: str
    witness: tuple = ()
    closure: Optional[FlexGraph] = None

    def __str__(self):
        if self.status == "Unknown":
            return "Unknown"
        return f"{self.status}: {self.reason}"

    def to_json(self) -> dict:
        out = {"status": self.status, "reason": self.reason,
               "witness": [c.to_json() for c in self.witness]}
        if self.closure is not None:
            out["closure"] = self.closure.to_json()
        return out


def movability_status(g: FlexGraph) -> Movability:
    """Tri-state verdict from the sufficient and necessary conditions."""
    _require_connected(g)
    colorings = nac_colorings(g)
    if not colorings:
        return Movability("NotMovable", "no NAC-coloring")
    ok, c = has_injective_grid_construction(g, colorings)
    if ok:
        return Movability("Movable", "injective grid", (c,))
    found = find_spatial_embedding(g, colorings)
    if found is not None:
        return Movability("Movable", "spatial embedding", found[0])
    trace = constant_distance_closure(g)
    if trace.complete:
        return Movability("NotMovable", "constant distance closure complete")
    return Movability("Unknown", "no condition applies", closure=trace.closure)
