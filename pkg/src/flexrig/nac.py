"""NAC-colorings: validity, enumeration, colour components, symmetry classes.

A colouring is stored up to swapping the two colours: the smallest edge of
the graph is always red.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import UnknownEdge
from .graph import Edge, FlexGraph, UnionFind, automorphisms, norm_edge, triangle_components

GREEK = (
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lambda", "mu", "nu", "xi", "omicron", "pi",
    "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
)


def _edge_list(edges: Iterable[Edge]) -> str:
    return "[" + ", ".join(f"[{u}, {v}]" for u, v in sorted(edges)) + "]"


@dataclass(frozen=True)
class NacColoring:
    red: FrozenSet[Edge]
    blue: FrozenSet[Edge]
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def from_red(cls, g: FlexGraph, red: Iterable[Sequence[int]], name: Optional[str] = None) -> "NacColoring":
        """Canonical colouring with the given red edges (swapped if needed)."""
        red_set = _edge_set(g, red)
        blue_set = frozenset(g.edges) - red_set
        if g.edges and g.edges[0] not in red_set:
            red_set, blue_set = blue_set, red_set
        return cls(red_set, blue_set, name)

    def sort_key(self) -> tuple:
        return tuple(sorted(self.red))

    def color(self, e: Edge) -> str:
        e = norm_edge(*e)
        if e in self.red:
            return "red"
        if e in self.blue:
            return "blue"
        raise UnknownEdge(f"{e} is not coloured")

    def is_red(self, e: Edge) -> bool:
        return norm_edge(*e) in self.red

    def __str__(self):
        text = f"NAC-coloring with red edges {_edge_list(self.red)} and blue edges {_edge_list(self.blue)}"
        return f"{self.name}: {text}" if self.name else text

    def to_json(self) -> dict:
        out = {"red": [list(e) for e in sorted(self.red)], "blue": [list(e) for e in sorted(self.blue)]}
        if self.name:
            out["name"] = self.name
        return out


def _edge_set(g: FlexGraph, edges: Iterable[Sequence[int]]) -> FrozenSet[Edge]:
    out = set()
    for e in edges:
        ne = norm_edge(int(e[0]), int(e[1]))
        if not g.has_edge(*ne):
            raise UnknownEdge(f"{ne} is not an edge of the graph")
        out.add(ne)
    return frozenset(out)


def _closes_almost_cycle(vertices, own: Iterable[Edge], other: Iterable[Edge]) -> bool:
    # an edge of one colour inside a component of the other colour closes
    # a cycle with exactly one edge of that colour
    uf = UnionFind(vertices)
    for u, v in other:
        uf.union(u, v)
    return any(uf.find(u) == uf.find(v) for u, v in own)


def is_nac_coloring(g: FlexGraph, red: Iterable[Sequence[int]]) -> bool:
    red_set = _edge_set(g, red)
    blue_set = [e for e in g.edges if e not in red_set]
    if not red_set or not blue_set:
        return False
    if _closes_almost_cycle(g.vertices, red_set, blue_set):
        return False
    return not _closes_almost_cycle(g.vertices, blue_set, red_set)


def nac_colorings(g: FlexGraph, first_only: bool = False) -> List[NacColoring]:
    """All canonical NAC-colorings, sorted by red edge set.

    Colours are assigned per triangle component; the component holding the
    smallest edge is always red, the others run through the binary counter.
    """
    comps = triangle_components(g).components
    m = len(comps)
    if m < 2:
        return []
    found = []
    for mask in range(1, 1 << (m - 1)):
        red = list(comps[0])
        blue = []
        for k in range(1, m):
            (blue if mask >> (k - 1) & 1 else red).extend(comps[k])
        if _closes_almost_cycle(g.vertices, red, blue) or _closes_almost_cycle(g.vertices, blue, red):
            continue
        found.append(NacColoring(frozenset(red), frozenset(blue)))
        if first_only:
            break
    found.sort(key=NacColoring.sort_key)
    return found


def has_nac_coloring(g: FlexGraph) -> bool:
    return bool(nac_colorings(g, first_only=True))


def conjugate(c: NacColoring) -> NacColoring:
    """Swap the colours and re-canonicalise.

    Because colourings are stored up to the swap this returns an equal
    object; it exists so callers can state the operation explicitly.
    """
    swapped_red, swapped_blue = c.blue, c.red
    smallest = min(c.red | c.blue)
    if smallest not in swapped_red:
        swapped_red, swapped_blue = swapped_blue, swapped_red
    return NacColoring(swapped_red, swapped_blue, c.name)


@dataclass(frozen=True)
class ColorComponents:
    red_components: Tuple[Tuple[int, ...], ...]
    blue_components: Tuple[Tuple[int, ...], ...]
    indices: Dict[int, Tuple[int, int]]


def color_components(g: FlexGraph, c: NacColoring) -> ColorComponents:
    red_uf = UnionFind(g.vertices)
    blue_uf = UnionFind(g.vertices)
    for u, v in g.edges:
        (red_uf if (u, v) in c.red else blue_uf).union(u, v)
    reds = [tuple(x) for x in red_uf.groups()]
    blues = [tuple(x) for x in blue_uf.groups()]
    ri = {v: k for k, comp in enumerate(reds) for v in comp}
    bi = {v: k for k, comp in enumerate(blues) for v in comp}
    return ColorComponents(tuple(reds), tuple(blues), {v: (ri[v], bi[v]) for v in g.vertices})


@dataclass(frozen=True)
class NacClass:
    members: Tuple[NacColoring, ...]
    letter: str


def class_letter(k: int) -> str:
    """Greek letter of the k-th class; past omega the letters repeat with a round suffix."""
    base = GREEK[k % len(GREEK)]
    rounds = k // len(GREEK)
    return base if rounds == 0 else f"{base}_{rounds + 1}_"


def permute_coloring(g: FlexGraph, c: NacColoring, sigma: Dict[int, int]) -> NacColoring:
    """Canonical form of ``c o sigma``: edge e gets the colour of sigma(e)."""
    red = [e for e in g.edges if norm_edge(sigma[e[0]], sigma[e[1]]) in c.red]
    return NacColoring.from_red(g, red)


def isomorphism_classes(g: FlexGraph, colorings: Sequence[NacColoring],
                        auts: Optional[List[Dict[int, int]]] = None) -> List[NacClass]:
    """Group colourings related by a graph automorphism and name them.

    Members of a class with more than one colouring are named letter+index
    (``alpha1``, ``alpha2``), singletons get the bare letter.
    """
    if auts is None:
        auts = automorphisms(g)
    ordered = sorted(colorings, key=NacColoring.sort_key)
    index = {c: k for k, c in enumerate(ordered)}
    uf = UnionFind(range(len(ordered)))
    for k, c in enumerate(ordered):
        for sigma in auts:
            image = permute_coloring(g, c, sigma)
            if image in index:
                uf.union(k, index[image])
    classes = []
    for n, group in enumerate(uf.groups()):
        letter = class_letter(n)
        if len(group) == 1:
            members = (replace(ordered[group[0]], name=letter),)
        else:
            members = tuple(replace(ordered[k], name=f"{letter}{i + 1}") for i, k in enumerate(group))
        classes.append(NacClass(members, letter))
    return classes


def named_colorings(g: FlexGraph, colorings: Optional[Sequence[NacColoring]] = None) -> List[NacColoring]:
    """The colourings in enumeration order, carrying their class names."""
    if colorings is None:
        colorings = nac_colorings(g)
    names = {c: c.name for cls in isomorphism_classes(g, colorings) for c in cls.members}
    return [replace(c, name=names[c]) for c in sorted(colorings, key=NacColoring.sort_key)]
