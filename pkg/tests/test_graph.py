import json
from itertools import combinations

import pytest

from flexrig.errors import DuplicateEdge, LoopEdge, OutOfRange, TooLarge, UnknownName, UnknownVertex
from flexrig.graph import (
    FlexGraph,
    automorphisms,
    catalog,
    catalog_names,
    from_integer,
    integer_encoding,
    new_graph,
    triangle_components,
)

from oracles import constant_distance_pairs

CATALOG = ["C4", "C5", "P3", "K2", "K4", "Diamond", "ThreePrism", "Q1", "CompleteBipartite(2,3)",
           "CompleteBipartite(3,3)", "Path(5)"]


def test_new_graph_triangle():
    g = new_graph([[0, 1], [1, 2], [0, 2]])
    assert g.vertices == (0, 1, 2)
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert repr(g) == "FlexGraph with the vertices [0, 1, 2] and edges [(0, 1), (0, 2), (1, 2)]"


def test_new_graph_errors():
    with pytest.raises(DuplicateEdge):
        new_graph([[0, 1], [0, 1]])
    with pytest.raises(DuplicateEdge):
        new_graph([[0, 1], [1, 0]])
    with pytest.raises(LoopEdge):
        new_graph([[2, 2]])
    with pytest.raises(UnknownVertex):
        new_graph([[0, 5]], vertices=[0, 1])


def test_isolated_vertices_kept():
    g = new_graph([[0, 1]], vertices=[0, 1, 2])
    assert g.vertices == (0, 1, 2)
    assert not g.is_connected()


def test_integer_encoding_examples():
    assert integer_encoding(catalog("K3")) == 7
    empty = from_integer(0, 3)
    assert empty.vertices == (0, 1, 2) and empty.edges == ()
    c4 = catalog("C4")
    assert from_integer(integer_encoding(c4), 4) == c4
    # (0,1),(0,2),(1,2),(0,3),... -> bit 3 is the pair (0,3)
    assert from_integer(8, 4).edges == ((0, 3),)
    with pytest.raises(OutOfRange):
        from_integer(64, 4)


def test_triangle_components_examples():
    assert len(triangle_components(catalog("C4")).components) == 4
    k4 = triangle_components(catalog("K4"))
    assert len(k4.components) == 1 and len(k4.components[0]) == 6
    prism = triangle_components(catalog("ThreePrism"))
    assert sorted(map(len, prism.components)) == [1, 1, 1, 3, 3]


def _brute_triangle_classes(g):
    # naive fixpoint: merge classes while some triangle is split
    cls = {e: {e} for e in g.edges}
    changed = True
    while changed:
        changed = False
        for a, b, c in combinations(g.vertices, 3):
            tri = [(a, b), (a, c), (b, c)]
            if all(g.has_edge(*e) for e in tri):
                merged = cls[tri[0]] | cls[tri[1]] | cls[tri[2]]
                if any(cls[e] != merged for e in tri):
                    for e in merged:
                        cls[e] = merged
                    changed = True
    return {frozenset(s) for s in cls.values()}


@pytest.mark.parametrize("name", CATALOG)
def test_triangle_components_match_naive(name):
    g = catalog(name)
    part = triangle_components(g)
    assert {frozenset(c) for c in part.components} == _brute_triangle_classes(g)
    for e, k in part.edge_to_component.items():
        assert e in part.components[k]
    # each component spans a connected subgraph
    for comp in part.components:
        assert FlexGraph(comp).is_connected()


@pytest.mark.parametrize("name, count", [("C4", 8), ("K4", 24), ("P3", 2), ("ThreePrism", 12),
                                         ("Diamond", 4), ("CompleteBipartite(2,3)", 12)])
def test_automorphism_counts(name, count):
    assert len(automorphisms(catalog(name))) == count


@pytest.mark.parametrize("name", CATALOG)
def test_automorphisms_form_a_group(name):
    g = catalog(name)
    auts = automorphisms(g)
    as_keys = {tuple(sorted(a.items())) for a in auts}
    assert tuple((v, v) for v in g.vertices) in as_keys
    for a in auts:
        assert all(g.has_edge(a[u], a[v]) for u, v in g.edges)
        inv = {w: v for v, w in a.items()}
        assert tuple(sorted(inv.items())) in as_keys
        for b in auts:
            comp = {v: a[b[v]] for v in g.vertices}
            assert tuple(sorted(comp.items())) in as_keys


def test_automorphism_bound(monkeypatch):
    with pytest.raises(TooLarge):
        automorphisms(catalog("C5"), max_vertices=4)
    monkeypatch.setenv("FLEXRIG_MAX_VERTICES", "3")
    with pytest.raises(TooLarge):
        automorphisms(catalog("C4"))


def test_complete_bipartite():
    g = catalog("CompleteBipartite", 2, 3)
    assert g.vertices == (0, 1, 2, 3, 4)
    assert g.edges == ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))
    assert catalog("CompleteBipartite(2,3)") == g


@pytest.mark.parametrize("name", ["ThreePrism", "Q1"])
def test_catalog_edges_match_printed_motions(name):
    # edges are exactly the pairs at constant distance in the reference motion
    assert set(catalog(name).edges) == set(constant_distance_pairs(name))


@pytest.mark.parametrize("name", ["ThreePrism", "Q1"])
def test_laman_count(name):
    g = catalog(name)
    assert len(g.edges) == 2 * len(g.vertices) - 3


def test_catalog_unknown():
    with pytest.raises(UnknownName):
        catalog("Petersen")
    with pytest.raises(UnknownName):
        catalog("NoNAC")
    assert "Q1" in catalog_names()


@pytest.mark.parametrize("name", CATALOG)
def test_roundtrips(name):
    g = catalog(name)
    relabelled = from_integer(integer_encoding(g), len(g.vertices))
    assert len(relabelled.edges) == len(g.edges)
    if g.vertices == tuple(range(len(g.vertices))):
        assert relabelled == g
    assert FlexGraph.from_json(json.dumps(g.to_json())) == g
    assert FlexGraph.from_json({"edges": g.to_json()["edges"]}).edges == g.edges


@pytest.mark.parametrize("name", CATALOG)
def test_automorphisms_match_networkx(name):
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.isomorphism import GraphMatcher

    g = catalog(name)
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    expected = {tuple(sorted(m.items())) for m in GraphMatcher(h, h).isomorphisms_iter()}
    assert {tuple(sorted(a.items())) for a in automorphisms(g)} == expected
