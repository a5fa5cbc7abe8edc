from fractions import Fraction
from math import ceil, comb

import pytest

from geohit.geom import contains
from geohit.hardness import (
    BoundedDegreeHypergraph,
    check_embedding,
    embed,
    hard_instance_r4,
    poly_eval,
    sign_polynomial,
    star_hypergraph,
)
from geohit.hypergraph import build, from_abstract
from geohit.solvers import nu_exact, tau_exact

from oracles import brute_tau


def test_star_definition():
    S = star_hypergraph(3)
    assert S.base.num_vertices == 3 and S.base.num_edges == 3 and S.max_degree == 2
    S = star_hypergraph(5)
    assert S.base.num_vertices == 10 and S.base.num_edges == 5
    assert all(len(e) == 4 for e in S.base.edges)
    assert tau_exact(S.base).value >= 2
    with pytest.raises(ValueError):
        star_hypergraph(1)


def test_one_vertex_embedding_by_hand():
    emb = embed(BoundedDegreeHypergraph.of(from_abstract(1, [[0]])))
    assert emb.dim == 2
    assert emb.coefficients[0] == (-1, Fraction(32, 15), Fraction(-16, 15))
    assert emb.points[0].coords == (Fraction(32, 15), Fraction(-16, 15))
    assert emb.halfspaces[0].normal == (1, 1) and emb.halfspaces[0].offset == 1
    assert emb.certificates[0][0] == Fraction(16, 15)


def test_sign_polynomial_roots_and_values():
    p = sign_polynomial([2, 5])
    assert poly_eval(p, Fraction(0)) == -1
    for r in (Fraction(7, 4), Fraction(9, 4), Fraction(19, 4), Fraction(21, 4)):
        assert poly_eval(p, r) == 0
    assert poly_eval(p, Fraction(2)) > 0 and poly_eval(p, Fraction(3)) < 0


def test_isolated_vertex_sits_at_origin():
    emb = embed(BoundedDegreeHypergraph.of(from_abstract(2, [[0]])))
    assert all(c == 0 for c in emb.points[1].coords)
    assert not contains(emb.halfspaces[0], emb.points[1])


def test_star3_round_trip():
    S = star_hypergraph(3)
    emb = embed(S)
    assert emb.dim == 4
    assert build(emb.instance()).edges == S.base.edges


def test_check_embedding_detects_tampering():
    S = star_hypergraph(4)
    emb = embed(S)
    bad = emb.certificates[0][:1] + (Fraction(1),) + emb.certificates[0][2:]
    tampered = type(emb)(emb.dim, emb.points, emb.halfspaces, emb.coefficients, (bad,) + emb.certificates[1:])
    assert check_embedding(S.base, tampered)


@pytest.mark.parametrize("n", range(3, 10))
def test_gap_family(n):
    inst = hard_instance_r4(n)
    assert inst.dim == 4 and len(inst.points) == comb(n, 2) and len(inst.ranges) == n
    H = build(inst)
    assert H.edges == star_hypergraph(n).base.edges
    for i, hs in enumerate(inst.ranges):
        for v, x in enumerate(inst.points):
            assert hs.value(x) != 1
            assert contains(hs, x) == (v in H.edges[i])
    assert nu_exact(H).value == 1
    tau = tau_exact(H).value
    assert tau == ceil(n / 2) and tau >= Fraction(n - 1, 2)
    if n <= 7:
        assert tau == brute_tau(H.num_vertices, H.edges)


def test_hard_instance_n2_keeps_two_halfspaces():
    inst = hard_instance_r4(2)
    assert len(inst.ranges) == 2 and len(inst.points) == 1
    assert build(inst).edges == ((0,),)


def test_embedding_of_arbitrary_bounded_degree_hypergraph():
    H = from_abstract(6, [[0, 1], [1, 2, 3], [3, 4], [0, 4, 5], [2]])
    BH = BoundedDegreeHypergraph.of(H)
    emb = embed(BH)
    assert emb.dim == 2 * BH.max_degree
    assert build(emb.instance()).edges == H.edges
