"""Executable checks of the structural facts: duality, planarity, K_{3,3}."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

from geohit.geom import GeometricInstance, HalfSpace, Point, dot, general_position_3d
from geohit.hypergraph import Hypergraph, build, is_matching
from geohit.lp import feasible_point
from geohit.solvers import (
    check_fractional_hitting,
    check_fractional_matching,
    nu_exact,
    nu_star,
    tau_exact,
    tau_star,
)


# -- two-intersection graph ------------------------------------------------

@dataclass(frozen=True)
class TwoIntersectionGraph:
    """Nodes are the matching ``B``; ``adjacency[(e, e')]`` is a witnessing edge."""

    nodes: tuple[int, ...]
    adjacency: dict = field(hash=False)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.nodes)
        G.add_edges_from(self.adjacency)
        return G


def two_intersection_graph(H: Hypergraph, B: Sequence[int]) -> TwoIntersectionGraph:
    """Join ``e, e'`` in ``B`` when some edge meets both and no other member of ``B``."""
    B = tuple(B)
    if not is_matching(H, B):
        raise ValueError("B must consist of distinct pairwise disjoint edges")
    owner = {}
    for b in B:
        for v in H.edges[b]:
            owner[v] = b
    adjacency: dict[tuple[int, int], int] = {}
    for f, edge in enumerate(H.edges):
        hit = sorted({owner[v] for v in edge if v in owner})
        if len(hit) == 2:
            adjacency.setdefault((hit[0], hit[1]), f)
    return TwoIntersectionGraph(B, adjacency)


# -- planarity ---------------------------------------------------------------

@dataclass(frozen=True)
class PlanarityCertificate:
    planar: bool
    rotation: Optional[dict] = field(default=None, hash=False)  # node -> neighbours in cyclic order
    obstruction: Optional[tuple] = None  # edges of a K5 / K3,3 subdivision
    kind: Optional[str] = None  # "K5" or "K3,3"


def _as_graph(G) -> nx.Graph:
    if isinstance(G, nx.Graph):
        return G
    if isinstance(G, TwoIntersectionGraph):
        return G.to_networkx()
    nodes, edges = G
    out = nx.Graph()
    out.add_nodes_from(nodes)
    out.add_edges_from(edges)
    return out


def is_planar(G) -> PlanarityCertificate:
    """Planarity decision with a rotation system or a Kuratowski subdivision."""
    G = _as_graph(G)
    n, m = G.number_of_nodes(), G.number_of_edges()
    dense = n >= 3 and m > 3 * n - 6
    planar, cert = nx.check_planarity(G, counterexample=True)
    if planar:
        assert not dense
        rotation = {v: list(cert.neighbors_cw_order(v)) for v in cert.nodes}
        return PlanarityCertificate(True, rotation=rotation)
    edges = tuple(sorted(tuple(sorted(e)) for e in cert.edges))
    kind = obstruction_kind(G, edges)
    return PlanarityCertificate(False, obstruction=edges, kind=kind)


def count_faces(rotation: dict) -> int:
    """Number of face orbits of a rotation system (isolated vertices not counted)."""
    succ = {}
    for v, nbrs in rotation.items():
        k = len(nbrs)
        for idx, u in enumerate(nbrs):
            succ[(v, u)] = nbrs[(idx + 1) % k]
    seen = set()
    faces = 0
    for dart in succ:
        if dart in seen:
            continue
        faces += 1
        d = dart
        while d not in seen:
            seen.add(d)
            u, v = d
            d = (v, succ[(v, u)])
    return faces


def check_rotation(G, rotation: dict) -> bool:
    """The rotation system matches G and satisfies Euler's formula per component."""
    G = _as_graph(G)
    if set(rotation) != set(G.nodes):
        return False
    for v in G.nodes:
        if sorted(rotation[v], key=repr) != sorted(G.neighbors(v), key=repr) or len(set(rotation[v])) != len(rotation[v]):
            return False
    for comp in nx.connected_components(G):
        if len(comp) == 1:
            continue
        sub = {v: rotation[v] for v in comp}
        e = G.subgraph(comp).number_of_edges()
        if len(comp) - e + count_faces(sub) != 2:
            return False
    return True


def obstruction_kind(G, edges: Iterable[tuple]) -> Optional[str]:
    """``"K5"``/``"K3,3"`` if ``edges`` form a subdivision of one inside G, else None."""
    G = _as_graph(G)
    S = nx.Graph()
    for u, v in edges:
        if not G.has_edge(u, v):
            return None
        S.add_edge(u, v)
    deg = dict(S.degree())
    branch = [v for v, d in deg.items() if d != 2]
    if any(deg[v] < 2 for v in branch):
        return None
    bset = set(branch)
    pairs = set()
    visited_inner = set()
    for b in branch:
        for first in S.neighbors(b):
            prev, cur = b, first
            while cur not in bset:
                visited_inner.add(cur)
                nxt = [w for w in S.neighbors(cur) if w != prev]
                prev, cur = cur, nxt[0]
            if cur == b:
                return None
            pairs.add(frozenset((b, cur)))
    if visited_inner != set(deg) - bset:
        return None  # stray cycle of degree-2 vertices
    # each path was walked once from each end
    if sum(deg[b] for b in branch) != 2 * len(pairs):
        return None
    if len(branch) == 5 and all(deg[b] == 4 for b in branch) and len(pairs) == 10:
        return "K5"
    if len(branch) == 6 and all(deg[b] == 3 for b in branch) and len(pairs) == 9:
        K = nx.Graph([tuple(p) for p in pairs])
        if nx.is_bipartite(K):
            left, right = nx.bipartite.sets(K)
            if len(left) == 3 and len(right) == 3:
                return "K3,3"
    return None


def check_certificate(G, cert: PlanarityCertificate) -> bool:
    if cert.planar:
        return cert.rotation is not None and check_rotation(G, cert.rotation)
    if cert.obstruction is None or cert.kind is None:
        return False
    return obstruction_kind(G, cert.obstruction) == cert.kind


def random_maximal_matching(H: Hypergraph, rng) -> tuple[int, ...]:
    order = list(range(H.num_edges))
    rng.shuffle(order)
    used: set[int] = set()
    chosen = []
    for k in order:
        if not used.intersection(H.edges[k]):
            chosen.append(k)
            used.update(H.edges[k])
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class PlanarityReport:
    matching: tuple[int, ...]
    graph_edges: tuple[tuple[int, int], ...]
    witnesses: tuple[int, ...]
    certificate: PlanarityCertificate
    certificate_ok: bool

    @property
    def planar(self) -> bool:
        return self.certificate.planar


def check_planarity_property(
    instance: GeometricInstance, budget: Optional[int] = None, rng=None
) -> PlanarityReport:
    """Two-intersection graph of a maximum matching (random maximal if ``rng``) and its planarity."""
    H = build(instance)
    B = nu_exact(H, budget).witness if rng is None else random_maximal_matching(H, rng)
    T = two_intersection_graph(H, B)
    cert = is_planar(T)
    pairs = tuple(sorted(T.adjacency))
    return PlanarityReport(
        B, pairs, tuple(T.adjacency[p] for p in pairs), cert, check_certificate(T, cert)
    )


# -- K_{3,3} impossibility ----------------------------------------------------

@dataclass(frozen=True)
class K33Report:
    feasible_pairs: tuple[tuple[int, int], ...]
    separators: dict = field(hash=False)  # (i, j) -> HalfSpace with margin

    @property
    def all_nine(self) -> bool:
        return len(self.feasible_pairs) == 9


def _separator(target: Sequence[Point], others: Sequence[Point]) -> Optional[HalfSpace]:
    """A half-space ``a.x >= b`` with ``a.x - b >= 1`` on targets and ``<= -1`` on others."""
    A, rhs = [], []
    for p in target:
        A.append([-c for c in p.coords] + [1])
        rhs.append(-1)
    for p in others:
        A.append(list(p.coords) + [-1])
        rhs.append(-1)
    sol = feasible_point(A, rhs)
    if sol is None:
        return None
    a, b = sol[:-1], sol[-1]
    if not any(a):
        return None
    return HalfSpace(a, b)


def check_k33_separations(points: Sequence[Point], strict: bool = True) -> K33Report:
    """For each (i, j), can one half-space cut out exactly u_i and w_j?

    ``points`` is ``u1, u2, u3, w1, w2, w3``. With ``strict`` the points must be
    in general position.
    """
    points = list(points)
    if len(points) != 6 or any(p.dim != 3 for p in points):
        raise ValueError("expected six points in R^3")
    if strict and not general_position_3d(points):
        raise ValueError("points are not in general position")
    feasible = []
    seps = {}
    for i in range(3):
        for j in range(3):
            target = [points[i], points[3 + j]]
            others = [p for k, p in enumerate(points) if k not in (i, 3 + j)]
            hs = _separator(target, others)
            if hs is not None:
                for p in target:
                    assert hs.value(p) - hs.offset >= 1
                for p in others:
                    assert hs.value(p) - hs.offset <= -1
                feasible.append((i, j))
                seps[(i, j)] = hs
    return K33Report(tuple(feasible), seps)


# -- duality chain and fractional Helly ---------------------------------------

@dataclass(frozen=True)
class DualityReport:
    nu: int
    nu_star: Fraction
    tau_star: Fraction
    tau: int
    certificates_ok: bool

    @property
    def holds(self) -> bool:
        return self.certificates_ok and self.nu <= self.nu_star == self.tau_star <= self.tau


def check_duality_chain(H: Hypergraph, budget: Optional[int] = None) -> DualityReport:
    """nu <= nu* = tau* <= tau, with the fractional optima re-checked independently."""
    nu = nu_exact(H, budget)
    tau = tau_exact(H, budget)
    ns, ts = nu_star(H), tau_star(H)
    ok = (
        check_fractional_matching(H, ns)
        and check_fractional_hitting(H, ts)
        and is_matching(H, nu.witness)
        and all(set(tau.witness) & set(e) for e in H.edges)
    )
    return DualityReport(nu.value, ns.objective, ts.objective, tau.value, ok)


def fractional_helly_stat(H: Hypergraph) -> dict:
    """Share of intersecting edge pairs and the largest vertex degree over edge count."""
    m = H.num_edges
    if m == 0:
        raise ValueError("fractional Helly statistic needs at least one edge")
    sets = H.edge_sets()
    pairs = list(combinations(range(m), 2))
    alpha = Fraction(sum(1 for a, b in pairs if sets[a] & sets[b]), len(pairs)) if pairs else Fraction(1)
    return {"alpha": alpha, "beta": Fraction(H.max_degree(), m)}
