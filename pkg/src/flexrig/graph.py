"""Graph representation and the combinatorial kernels everything else uses.

Vertex labels are kept as given (no re-indexing) so printed output uses the
caller's names. Edges are normalised to ``(min, max)`` tuples and stored
sorted.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    DuplicateEdge,
    GraphError,
    LoopEdge,
    OutOfRange,
    TooLarge,
    UnknownName,
    UnknownVertex,
)

Edge = Tuple[int, int]

DEFAULT_MAX_VERTICES = 16


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class UnionFind:
    """Disjoint sets over arbitrary hashable items, path halving + union by size."""

    def __init__(self, items: Iterable = ()):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self) -> List[list]:
        """Sets as sorted lists, ordered by their smallest member."""
        out: Dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted((sorted(g) for g in out.values()), key=lambda g: g[0])


class FlexGraph:
    """Simple undirected graph with integer vertex labels.

    >>> FlexGraph([[0, 1], [1, 2], [0, 2]])
    FlexGraph with the vertices [0, 1, 2] and edges [(0, 1), (0, 2), (1, 2)]
    """

    __slots__ = ("vertices", "edges", "adjacency", "name", "_edge_set")

    def __init__(self, edges: Iterable[Sequence[int]] = (), vertices: Optional[Iterable[int]] = None,
                 name: Optional[str] = None):
        seen = set()
        norm = []
        for pair in edges:
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} does not have two endpoints")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge {e} given twice")
            seen.add(e)
            norm.append(e)
        if vertices is None:
            verts = sorted({x for e in norm for x in e})
        else:
            verts = [int(x) for x in vertices]
            if len(set(verts)) != len(verts):
                raise GraphError("repeated vertex label")
            vs = set(verts)
            for e in norm:
                for x in e:
                    if x not in vs:
                        raise UnknownVertex(f"edge {e} uses undeclared vertex {x}")
            verts = sorted(verts)
        self.vertices: Tuple[int, ...] = tuple(verts)
        self.edges: Tuple[Edge, ...] = tuple(sorted(norm))
        self._edge_set = frozenset(self.edges)
        adj: Dict[int, list] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: Dict[int, Tuple[int, ...]] = {v: tuple(sorted(n)) for v, n in adj.items()}
        self.name = name

    def __repr__(self):
        body = f"FlexGraph with the vertices {list(self.vertices)} and edges {list(self.edges)}"
        return f"{self.name}: {body}" if self.name else body

    def __eq__(self, other):
        if not isinstance(other, FlexGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def non_edges(self) -> List[Edge]:
        return [(u, v) for u, v in combinations(self.vertices, 2) if not self.has_edge(u, v)]

    def components(self) -> List[List[int]]:
        uf = UnionFind(self.vertices)
        for u, v in self.edges:
            uf.union(u, v)
        return uf.groups()

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "FlexGraph":
        return FlexGraph(list(self.edges) + [norm_edge(*e) for e in extra], self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "FlexGraph":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "edges" not in data:
            raise GraphError('graph JSON needs an "edges" key')
        return cls(data["edges"], data.get("vertices"), name=data.get("name"))


def new_graph(edges, vertices=None) -> FlexGraph:
    return FlexGraph(edges, vertices)


def _pair_index(i: int, j: int) -> int:
    # column-wise upper triangle: (0,1),(0,2),(1,2),(0,3),...
    return j * (j - 1) // 2 + i


def integer_encoding(g: FlexGraph) -> int:
    """Bit k is set iff the k-th vertex pair (by position) is an edge."""
    pos = {v: k for k, v in enumerate(g.vertices)}
    n = 0
    for u, v in g.edges:
        i, j = sorted((pos[u], pos[v]))
        n |= 1 << _pair_index(i, j)
    return n


def from_integer(n: int, vertex_count: int) -> FlexGraph:
    if vertex_count < 0:
        raise OutOfRange("negative vertex count")
    pairs = vertex_count * (vertex_count - 1) // 2
    if not 0 <= n < (1 << pairs):
        raise OutOfRange(f"{n} does not encode a graph on {vertex_count} vertices")
    edges = [(i, j) for j in range(vertex_count) for i in range(j) if n >> _pair_index(i, j) & 1]
    return FlexGraph(edges, range(vertex_count))


@dataclass(frozen=True)
class TrianglePartition:
    components: Tuple[Tuple[Edge, ...], ...]
    edge_to_component: Dict[Edge, int]


def triangle_components(g: FlexGraph) -> TrianglePartition:
    """Finest edge partition keeping the three edges of each triangle together.

    Components are ordered by their smallest edge.
    """
    uf = UnionFind(g.edges)
    for u, v in g.edges:
        nu = set(g.adjacency[u])
        for w in g.adjacency[v]:
            if w in nu:
                uf.union((u, v), norm_edge(u, w))
                uf.union((u, v), norm_edge(v, w))
    comps = tuple(tuple(c) for c in uf.groups())
    index = {e: k for k, comp in enumerate(comps) for e in comp}
    return TrianglePartition(comps, index)


def _max_vertices() -> int:
    env = os.environ.get("FLEXRIG_MAX_VERTICES")
    return int(env) if env else DEFAULT_MAX_VERTICES


def _refined_colors(g: FlexGraph) -> Dict[int, int]:
    # iterated degree refinement (colour = own colour + multiset of neighbour colours)
    color = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {v: (color[v], tuple(sorted(color[w] for w in g.adjacency[v]))) for v in g.vertices}
        palette = {s: k for k, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def automorphisms(g: FlexGraph, max_vertices: Optional[int] = None) -> List[Dict[int, int]]:
    """All automorphisms as vertex dictionaries, identity first.

    Backtracking over vertices in label order, with candidates restricted to
    the same refined degree class.
    """
    bound = _max_vertices() if max_vertices is None else max_vertices
    if len(g.vertices) > bound:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds the automorphism bound {bound}")
    color = _refined_colors(g)
    order = list(g.vertices)
    nbrs = {v: set(g.adjacency[v]) for v in order}
    result = []
    mapping: Dict[int, int] = {}
    used = set()

    def extend(k: int):
        if k == len(order):
            result.append(dict(mapping))
            return
        v = order[k]
        for w in order:
            if w in used or color[w] != color[v]:
                continue
            if any((x in nbrs[v]) != (mapping[x] in nbrs[w]) for x in order[:k]):
                continue
            mapping[v] = w
            used.add(w)
            extend(k + 1)
            used.discard(w)
            del mapping[v]

    extend(0)
    return result


# ---------------------------------------------------------------- catalog

def _cycle(n: int) -> FlexGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return FlexGraph([(i, (i + 1) % n) for i in range(n)], name=f"Cycle graph C{n}")


def _path(n: int) -> FlexGraph:
    return FlexGraph([(i, i + 1) for i in range(n - 1)], range(n), name=f"Path graph P{n}")


def _complete(n: int) -> FlexGraph:
    return FlexGraph(list(combinations(range(n), 2)), range(n), name=f"Complete graph K{n}")


def _complete_bipartite(m: int, n: int) -> FlexGraph:
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return FlexGraph(edges, range(m + n), name=f"Complete bipartite graph of order {m}+{n}")


def _three_prism() -> FlexGraph:
    return FlexGraph([(0, 3), (0, 4), (3, 4), (1, 2), (1, 5), (2, 5), (0, 5), (1, 4), (2, 3)],
                     name="3-prism")


def _q1() -> FlexGraph:
    return FlexGraph([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (3, 7), (4, 7),
                      (5, 6), (5, 7), (6, 7)], name="Q1")


def _diamond() -> FlexGraph:
    return FlexGraph([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], name="Diamond")


_CATALOG = {
    "Cycle": (_cycle, 1),
    "Path": (_path, 1),
    "Complete": (_complete, 1),
    "CompleteBipartite": (_complete_bipartite, 2),
    "ThreePrism": (_three_prism, 0),
    "Q1": (_q1, 0),
    "Diamond": (_diamond, 0),
}

_ALIASES = {"C": "Cycle", "P": "Path", "K": "Complete"}

# Named graphs whose edge lists are not available to this package.
UNSOURCED = ("NoNAC", "MaxEmbeddingsLaman")


def catalog_names() -> List[str]:
    return list(_CATALOG)


def catalog(name: str, *params: int) -> FlexGraph:
    """Build a named graph.

    Accepts ``catalog("Cycle", 5)``, ``catalog("Cycle(5)")`` and the short
    forms ``C5``, ``K4``, ``P3``.
    """
    name = name.strip()
    m = re.fullmatch(r"(\w+?)\s*\(([\d,\s]*)\)", name)
    if m:
        name = m.group(1)
        params = tuple(int(x) for x in m.group(2).split(",") if x.strip()) + params
    else:
        m = re.fullmatch(r"([CPK])(\d+)", name)
        if m:
            name, params = _ALIASES[m.group(1)], (int(m.group(2)),) + params
    if name not in _CATALOG:
        if name in UNSOURCED:
            raise UnknownName(f"edge list of {name!r} is not available in this package")
        raise UnknownName(f"unknown graph {name!r}; known: {', '.join(_CATALOG)}")
    factory, arity = _CATALOG[name]
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return factory(*params)
