import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from geohit.generators import random_abstract, random_general_position_6, random_instance
from geohit.geom import Point
from geohit.hardness import star_hypergraph
from geohit.hypergraph import from_abstract
from geohit.verify import (
    PlanarityCertificate,
    check_certificate,
    check_duality_chain,
    check_k33_separations,
    check_planarity_property,
    check_rotation,
    fractional_helly_stat,
    is_planar,
    obstruction_kind,
    two_intersection_graph,
)

from oracles import float_separable


def test_two_intersection_graph_examples(disjoint4):
    T = two_intersection_graph(disjoint4, [0, 1, 2, 3])
    assert T.adjacency == {}
    H = from_abstract(2, [[0], [1], [0, 1]])
    T = two_intersection_graph(H, [0, 1])
    assert T.adjacency == {(0, 1): 2}
    with pytest.raises(ValueError):
        two_intersection_graph(H, [0, 2])


def test_edge_meeting_three_members_is_ignored():
    H = from_abstract(3, [[0], [1], [2], [0, 1, 2], [1, 2]])
    T = two_intersection_graph(H, [0, 1, 2])
    assert T.adjacency == {(1, 2): 4}


@pytest.mark.parametrize(
    "G, planar, kind",
    [
        (nx.complete_graph(4), True, None),
        (nx.complete_graph(5), False, "K5"),
        (nx.complete_bipartite_graph(3, 3), False, "K3,3"),
        (nx.petersen_graph(), False, "K3,3"),
        (nx.empty_graph(4), True, None),
        (nx.icosahedral_graph(), True, None),
    ],
)
def test_is_planar(G, planar, kind):
    cert = is_planar(G)
    assert cert.planar == planar and cert.kind == kind
    assert check_certificate(G, cert)


def test_certificate_checker_rejects_forgeries():
    K4 = nx.complete_graph(4)
    assert check_rotation(K4, is_planar(K4).rotation)
    assert not check_rotation(K4, {0: [1, 2], 1: [0, 2, 3], 2: [0, 1, 3], 3: [1, 2]})
    K5 = nx.complete_graph(5)
    edges = list(K5.edges)
    assert obstruction_kind(K5, edges) == "K5"
    assert obstruction_kind(K5, edges[:-1]) is None
    assert not check_certificate(K4, PlanarityCertificate(False, obstruction=tuple(K4.edges), kind="K5"))


def test_forged_rotation_rejected():
    # a 4-cycle with one vertex's rotation reversed is still planar (degree 2);
    # use a triangular prism where a wrong rotation yields a genus-1 surface
    G = nx.circular_ladder_graph(3)
    rot = is_planar(G).rotation
    assert check_rotation(G, rot)
    v = next(iter(rot))
    flipped = dict(rot)
    flipped[v] = [flipped[v][0], flipped[v][2], flipped[v][1]]
    assert not check_rotation(G, flipped)


def test_planarity_for_small_matching():
    inst = random_instance(2, "disc", 8, 4, seed=2)
    rep = check_planarity_property(inst)
    assert len(rep.matching) <= 4 and rep.planar and rep.certificate_ok


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["disc", "halfspace"]))
def test_planarity_random(seed, family):
    dim = 3 if family == "halfspace" else 2
    inst = random_instance(dim, family, 20, 25, seed, max_size=6)
    assert check_planarity_property(inst).planar
    rep = check_planarity_property(inst, rng=random.Random(seed))
    assert rep.planar and rep.certificate_ok


def test_k33_degenerate_inputs():
    same = [Point((0, 0, 0))] * 6
    rep = check_k33_separations(same, strict=False)
    assert rep.feasible_pairs == () and not rep.all_nine
    with pytest.raises(ValueError):
        check_k33_separations(same)


def test_k33_two_clusters():
    u = [(0, 0, 0), (1, 0, 2), (0, 2, 1)]
    w = [(1000, 3, 1), (1002, 1, 0), (1001, 0, 3)]
    pts = [Point(p) for p in u + w]
    rep = check_k33_separations(pts)
    # frozen from the floating-point HiGHS oracle
    assert rep.feasible_pairs == ((0, 0), (0, 1), (0, 2), (1, 2), (2, 0), (2, 2))
    assert not rep.all_nine


@pytest.mark.parametrize("seed", range(20))
def test_k33_against_float_oracle(seed):
    pts = random_general_position_6(random.Random(seed))
    rep = check_k33_separations(pts)
    for i in range(3):
        for j in range(3):
            target = [pts[i].coords, pts[3 + j].coords]
            others = [p.coords for k, p in enumerate(pts) if k not in (i, 3 + j)]
            assert ((i, j) in rep.feasible_pairs) == float_separable(target, others)
    assert not rep.all_nine


def _rotate(p, R):
    return Point([sum(R[r][c] * p.coords[c] for c in range(3)) for r in range(3)])


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_k33_invariant_under_rational_rigid_motion(seed, tx, ty, tz):
    pts = random_general_position_6(random.Random(seed))
    c, s = Fraction(3, 5), Fraction(4, 5)
    R = [[c, -s, 0], [s, c, 0], [0, 0, 1]]
    moved = [Point([a + t for a, t in zip(_rotate(p, R).coords, (tx, ty, tz))]) for p in pts]
    assert check_k33_separations(pts).feasible_pairs == check_k33_separations(moved).feasible_pairs


def test_duality_examples(disjoint4, fano):
    rep = check_duality_chain(disjoint4)
    assert (rep.nu, rep.nu_star, rep.tau_star, rep.tau) == (4, 4, 4, 4) and rep.holds
    rep = check_duality_chain(fano)
    assert (rep.nu, rep.nu_star, rep.tau_star, rep.tau) == (1, Fraction(7, 3), Fraction(7, 3), 3)
    # |L| / (n + 1) with n = 2
    assert rep.nu_star == Fraction(7, 2 + 1)
    rep = check_duality_chain(star_hypergraph(5).base)
    assert (rep.nu, rep.nu_star, rep.tau) == (1, Fraction(5, 2), 3) and rep.holds


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_duality_never_fails_on_abstract(seed):
    assert check_duality_chain(random_abstract(10, 8, seed, max_edge=4)).holds


def test_fractional_helly(disjoint4, fano):
    assert fractional_helly_stat(fano) == {"alpha": 1, "beta": Fraction(3, 7)}
    assert fractional_helly_stat(disjoint4) == {"alpha": 0, "beta": Fraction(1, 4)}
    assert fractional_helly_stat(star_hypergraph(5).base) == {"alpha": 1, "beta": Fraction(2, 5)}
