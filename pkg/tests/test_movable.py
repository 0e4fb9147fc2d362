from itertools import combinations

import pytest

from flexrig.errors import Disconnected
from flexrig.graph import FlexGraph, catalog
from flexrig.motion import DIRECTIONS
from flexrig.movable import (
    constant_distance_closure,
    find_spatial_embedding,
    has_injective_grid_construction,
    has_injective_spatial_embedding,
    movability_status,
    spatial_embedding,
    trial_values,
    unicolor_pairs,
)
from flexrig.nac import NacColoring, nac_colorings

from oracles import brute_nac_red_sets, brute_unicolor_pairs

CATALOG = ["C4", "C5", "P3", "K2", "K4", "Diamond", "ThreePrism", "Q1", "CompleteBipartite(2,3)",
           "CompleteBipartite(3,3)", "C6", "Path(4)"]


@pytest.fixture(scope="module")
def q1_found():
    return find_spatial_embedding(catalog("Q1"))


def _check_embedding(g, c1, c2, emb):
    # direct substitution into the parallelism equations
    for u, v in g.edges:
        d = DIRECTIONS[emb.class_of[(u, v)]]
        diff = tuple(a - b for a, b in zip(emb.omega[u], emb.omega[v]))
        assert diff == tuple(emb.edge_scalar[(u, v)] * x for x in d)
        assert emb.edge_scalar[(u, v)] != 0
    assert len(set(emb.omega.values())) == len(g.vertices)
    assert set(emb.class_of.values()) == {"A", "B", "C", "D"}
    # class is a function of the colour pair, and vice versa
    pair_of = {}
    for e in g.edges:
        key = (e in c1.red, e in c2.red)
        assert pair_of.setdefault(emb.class_of[e], key) == key
    assert len(set(pair_of.values())) == 4


def _parallel(a, b):
    return a[0] * b[1] == a[1] * b[0] and a[0] * b[2] == a[2] * b[0] and a[1] * b[2] == a[2] * b[1]


@pytest.mark.parametrize("name, expected", [("ThreePrism", True), ("Q1", False), ("Diamond", False),
                                            ("C4", True)])
def test_injective_grid(name, expected):
    ok, c = has_injective_grid_construction(catalog(name))
    assert ok is expected
    assert (c is not None) is expected


def test_injective_grid_certificates():
    g = catalog("ThreePrism")
    assert has_injective_grid_construction(g)[1] == nac_colorings(g)[0]
    # the two colourings with adjacent red edges fold C4 onto a path
    g = catalog("C4")
    assert has_injective_grid_construction(g)[1] == nac_colorings(g)[2]


def test_c4_embedding_example():
    g = catalog("C4")
    c1 = NacColoring.from_red(g, [(0, 1), (0, 3)])
    c2 = NacColoring.from_red(g, [(0, 1), (1, 2)])
    emb = spatial_embedding(g, c1, c2)
    _check_embedding(g, c1, c2, emb)
    assert {abs(s) for s in emb.edge_scalar.values()} == {1}
    t = emb.edge_scalar
    assert t[(0, 1)] == -t[(2, 3)] or emb.class_of[(0, 1)] == "D" or emb.class_of[(2, 3)] == "D"


def test_equal_colorings_give_nothing():
    g = catalog("C4")
    c = nac_colorings(g)[0]
    assert spatial_embedding(g, c, c) is None


def test_q1_embedding(q1_found):
    g = catalog("Q1")
    (c1, c2), emb = q1_found
    _check_embedding(g, c1, c2, emb)
    cs = nac_colorings(g)
    assert (cs.index(c1), cs.index(c2)) == (3, 7)
    # planar lengths are |t_e| rho_class with rho = (1, 3, 3, 1)
    assert abs(emb.edge_scalar[(5, 6)]) == 2
    assert all(abs(s) == 1 for e, s in emb.edge_scalar.items() if e != (5, 6))


def test_parallel_iff_same_class(q1_found):
    g = catalog("Q1")
    _, emb = q1_found
    vec = {(u, v): tuple(a - b for a, b in zip(emb.omega[u], emb.omega[v])) for u, v in g.edges}
    for e, f in combinations(g.edges, 2):
        assert _parallel(vec[e], vec[f]) == (emb.class_of[e] == emb.class_of[f])


@pytest.mark.parametrize("name", ["C4", "C6", "CompleteBipartite(2,3)", "CompleteBipartite(3,3)", "ThreePrism"])
def test_every_returned_embedding_is_valid(name):
    g = catalog(name)
    for c1, c2 in combinations(nac_colorings(g), 2):
        emb = spatial_embedding(g, c1, c2)
        if emb is not None:
            _check_embedding(g, c1, c2, emb)


@pytest.mark.parametrize("name, expected", [("Q1", True), ("C4", True), ("Diamond", False),
                                            ("ThreePrism", False)])
def test_has_injective_spatial_embedding(name, expected):
    g = catalog(name)
    assert has_injective_spatial_embedding(g) is expected
    ok, pair = has_injective_spatial_embedding(g, certificate=True)
    assert ok is expected and (pair is not None) is expected


def test_c4_certificate_is_first_pair():
    g = catalog("C4")
    ok, pair = has_injective_spatial_embedding(g, certificate=True)
    cs = nac_colorings(g)
    assert pair == (cs[0], cs[1])


def test_trial_values_distinct_and_deterministic():
    first = [x for _, x in zip(range(200), trial_values())]
    assert first == [x for _, x in zip(range(200), trial_values())]
    assert len(set(first)) == 200 and 0 not in first
    assert first[:3] == [1, -1, 2]


@pytest.mark.parametrize("name, expected", [("C4", set()), ("Diamond", {(0, 1)}), ("ThreePrism", set()),
                                            ("K4", set())])
def test_unicolor_pairs_examples(name, expected):
    assert unicolor_pairs(catalog(name)) == expected


@pytest.mark.parametrize("name", [n for n in CATALOG if len(catalog(n).edges) <= 12])
def test_unicolor_pairs_match_path_search(name):
    g = catalog(name)
    reds = brute_nac_red_sets(g.vertices, g.edges)
    assert unicolor_pairs(g) == brute_unicolor_pairs(g.vertices, g.edges, reds)


def test_cdc_examples():
    c4 = constant_distance_closure(catalog("C4"))
    assert c4.closure == catalog("C4") and len(c4.stages) == 1
    d = constant_distance_closure(catalog("Diamond"))
    assert d.closure == catalog("K4") and d.complete
    assert d.to_json() == {"stages": [{"added": [[0, 1]]}, {"added": []}], "complete": True}
    assert not constant_distance_closure(catalog("Q1")).complete


@pytest.mark.parametrize("name", CATALOG)
def test_cdc_trace_and_idempotence(name):
    g = catalog(name)
    trace = constant_distance_closure(g)
    assert trace.stages[0].graph == g
    for a, b in zip(trace.stages, trace.stages[1:]):
        assert b.graph == a.graph.with_edges(a.upairs)
        assert a.upairs and not a.upairs & set(a.graph.edges)
    assert not trace.stages[-1].upairs
    assert trace.closure == trace.stages[-1].graph
    assert set(g.edges) <= set(trace.closure.edges)
    assert trace.closure.vertices == g.vertices
    assert constant_distance_closure(trace.closure).closure == trace.closure
    assert len(trace.stages) <= len(g.vertices) * (len(g.vertices) - 1) // 2 + 1


def test_vacuous_closure_is_complete():
    g = FlexGraph([(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (3, 4), (2, 4)])
    assert not nac_colorings(g)
    assert constant_distance_closure(g).complete


@pytest.mark.parametrize("name, text", [
    ("ThreePrism", "Movable: injective grid"),
    ("Diamond", "NotMovable: no NAC-coloring"),
    ("K4", "NotMovable: no NAC-coloring"),
    ("Q1", "Movable: spatial embedding"),
    ("C4", "Movable: injective grid"),
])
def test_movability_examples(name, text):
    assert str(movability_status(catalog(name))) == text


def test_movability_witness_json():
    v = movability_status(catalog("ThreePrism"))
    data = v.to_json()
    assert data["status"] == "Movable" and len(data["witness"]) == 1
    assert len(movability_status(catalog("Q1")).witness) == 2


@pytest.mark.parametrize("name", CATALOG)
def test_verdict_consistent_with_closure(name):
    g = catalog(name)
    verdict = movability_status(g)
    if verdict.status == "Movable":
        assert not constant_distance_closure(g).complete


def test_disconnected_rejected():
    g = FlexGraph([(0, 1), (2, 3)])
    for fn in (has_injective_grid_construction, has_injective_spatial_embedding, movability_status):
        with pytest.raises(Disconnected):
            fn(g)
