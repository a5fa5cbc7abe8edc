import random

import pytest
from hypothesis import given, settings, strategies as st

from geohit.generators import random_instance
from geohit.geom import GeometricInstance, HalfSpace, Point
from geohit.hardness import hard_instance_r4, star_hypergraph
from geohit.hypergraph import (
    Hypergraph,
    build,
    build_with_report,
    delete_edges,
    edges_intersecting,
    from_abstract,
    intersection_graph,
)

from oracles import graph_isomorphic_hypergraphs


def test_build_single_point():
    inst = GeometricInstance(2, [Point([0, 0])], [HalfSpace([1, 0], -1)])
    assert build(inst).edges == ((0,),)


def test_build_merges_identical_traces():
    pts = [Point([0, 0]), Point([2, 0]), Point([5, 5])]
    inst = GeometricInstance(2, pts, [HalfSpace([1, 0], 1), HalfSpace([2, 0], 2), HalfSpace([0, 1], 100)])
    H, rep = build_with_report(inst)
    assert H.edges == ((1, 2),)
    assert H.provenance == ((0, 1),)
    assert rep.empty_traces == 1 and rep.duplicate_traces == 1


def test_build_hard_instance_is_star():
    H = build(hard_instance_r4(3))
    assert H.edges == star_hypergraph(3).base.edges
    assert H.num_vertices == 3 and all(len(e) == 2 for e in H.edges)
    assert len(intersection_graph(H).adjacency) == 3


def test_from_abstract_dedup_and_errors():
    assert from_abstract(3, [[0, 1], [1, 2], [1, 0]]).num_edges == 2
    H = from_abstract(2, [[0], [1]])
    assert H.num_edges == 2 and not intersection_graph(H).adjacency
    with pytest.raises(ValueError):
        from_abstract(2, [[0, 2]])
    with pytest.raises(ValueError):
        from_abstract(2, [[]])


def test_fano_structure(fano):
    assert fano.num_edges == 7
    sets = fano.edge_sets()
    assert all(len(sets[i] & sets[j]) == 1 for i in range(7) for j in range(i + 1, 7))
    G = intersection_graph(fano)
    assert len(G.adjacency) == 21
    assert all(edges_intersecting(fano, e) == set(range(7)) for e in range(7))


def test_star_intersection_graph_is_complete():
    G = intersection_graph(star_hypergraph(5).base)
    assert len(G.adjacency) == 10


def test_edges_intersecting_examples(disjoint4):
    assert all(edges_intersecting(disjoint4, e) == {e} for e in range(4))
    H = from_abstract(4, [[0, 1], [1, 2], [3]])
    assert edges_intersecting(H, 0) == {0, 1}
    with pytest.raises(IndexError):
        edges_intersecting(H, 3)


def test_delete_edges(fano):
    assert delete_edges(fano, range(7)).num_edges == 0
    assert delete_edges(fano, []) == fano
    assert delete_edges(fano, [3]).num_edges == 6
    with pytest.raises(IndexError):
        delete_edges(fano, [7])


def test_hypergraph_invariants_enforced():
    with pytest.raises(ValueError):
        Hypergraph(3, ((1, 0),))
    with pytest.raises(ValueError):
        Hypergraph(3, ((0,), (0,)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_point_permutation_gives_isomorphic_hypergraph(seed):
    inst = random_instance(2, "disc", 6, 5, seed)
    perm = list(range(6))
    random.Random(seed).shuffle(perm)
    shuffled = GeometricInstance(2, [inst.points[i] for i in perm], inst.ranges)
    assert graph_isomorphic_hypergraphs(build(inst), build(shuffled))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["halfplane", "disc", "halfspace"]))
def test_neighbourhoods_match_intersection_graph(seed, family):
    dim = 3 if family == "halfspace" else 2
    inst = random_instance(dim, family, 10, 8, seed)
    H = build(inst)
    G = intersection_graph(H)
    for e in range(H.num_edges):
        assert edges_intersecting(H, e) == {e} | G.neighbors(e)
    assert H.num_edges <= len(inst.ranges)
    traces = [tuple(i for i, p in enumerate(inst.points) if r.value(p) >= r.offset) if isinstance(r, HalfSpace)
              else None for r in inst.ranges]
    if family != "disc":
        distinct = len({t for t in traces if t})
        assert H.num_edges == distinct
