"""Star hypergraphs of K_n and their realization by points and half-spaces.

A hypergraph whose vertices each lie in at most ``d`` edges is realized in
R^{2d}: vertex ``v`` becomes the coefficient vector of a polynomial that is
positive exactly at the (1-based) indices of the edges containing ``v`` and
equals -1 at zero, and edge ``i`` becomes the half-space
``<x, (i, i^2, ..., i^{2d})> >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from geohit.geom import GeometricInstance, HalfSpace, Point, dot
from geohit.hypergraph import Hypergraph, build, from_abstract

QUARTER = Fraction(1, 4)


class EmbeddingDefect(AssertionError):
    """A constructed embedding failed its own certificate check."""


@dataclass(frozen=True)
class BoundedDegreeHypergraph:
    base: Hypergraph
    max_degree: int

    @classmethod
    def of(cls, H: Hypergraph) -> BoundedDegreeHypergraph:
        return cls(H, H.max_degree())


def star_pairs(n: int) -> list[tuple[int, int]]:
    """Edges of K_n in lexicographic order; vertex ``k`` of the star hypergraph is ``star_pairs(n)[k]``."""
    return list(combinations(range(n), 2))


def star_edges(n: int) -> list[tuple[int, ...]]:
    """The n stars in vertex order of K_n (for n = 2 both stars are the same set)."""
    if n < 2:
        raise ValueError("star hypergraph needs n >= 2")
    pairs = star_pairs(n)
    return [tuple(k for k, p in enumerate(pairs) if i in p) for i in range(n)]


def star_hypergraph(n: int) -> BoundedDegreeHypergraph:
    """Vertices are the edges of K_n; hyper-edge ``i`` collects the K_n-edges at vertex ``i``.

    For n = 2 the two stars coincide and collapse to a single edge.
    """
    return BoundedDegreeHypergraph.of(from_abstract(comb(n, 2), star_edges(n)))


# Polynomials are coefficient lists, constant term first.

def poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_polynomial(edge_indices: list[int]) -> list[Fraction]:
    """``-Q(x)/Q(0)`` with ``Q(x) = prod (x - (i + 1/4))(x - (i - 1/4))`` over 1-based ``edge_indices``."""
    q = [Fraction(1)]
    for i in edge_indices:
        # (x - i - 1/4)(x - i + 1/4) = x^2 - 2i x + i^2 - 1/16
        q = poly_mul(q, [Fraction(i * i) - QUARTER * QUARTER, Fraction(-2 * i), Fraction(1)])
    q0 = q[0]
    return [-c / q0 for c in q]


@dataclass(frozen=True)
class Embedding:
    dim: int
    points: tuple[Point, ...]
    halfspaces: tuple[HalfSpace, ...]
    coefficients: tuple[tuple[Fraction, ...], ...]
    certificates: tuple[tuple[Fraction, ...], ...]

    def instance(self) -> GeometricInstance:
        return GeometricInstance(self.dim, self.points, self.halfspaces)


def moment_normal(i: int, dim: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(i) ** k for k in range(1, dim + 1))


def check_embedding(edges, emb: Embedding) -> list[str]:
    """Re-derive every certificate from the stored coefficients; return the list of violations.

    ``edges`` is a Hypergraph or the explicit enumeration e_1..e_m.
    """
    problems = []
    edge_sets = [frozenset(e) for e in (edges.edges if isinstance(edges, Hypergraph) else edges)]
    for v, (x, coeffs) in enumerate(zip(emb.points, emb.coefficients)):
        if coeffs[0] != -1:
            problems.append(f"vertex {v}: constant coefficient {coeffs[0]} != -1")
        if tuple(x.coords) != tuple(coeffs[1:]):
            problems.append(f"vertex {v}: point does not match its coefficients")
        for i, hs in enumerate(emb.halfspaces, start=1):
            val = dot(hs.normal, x.coords)
            if val != emb.certificates[v][i - 1]:
                problems.append(f"vertex {v}, half-space {i}: stored certificate is wrong")
            if val != poly_eval(list(coeffs), Fraction(i)) + 1:
                problems.append(f"vertex {v}, half-space {i}: value is not P_v(i) + 1")
            inside = v in edge_sets[i - 1]
            if val == 1 or (val > 1) != inside:
                problems.append(f"vertex {v}, half-space {i}: value {val} contradicts incidence")
    return problems


def embed(BH: BoundedDegreeHypergraph) -> Embedding:
    """Realize ``BH`` in R^{2d} by points and half-spaces ``<x, n_i> >= 1``."""
    if BH.max_degree != BH.base.max_degree():
        raise ValueError("declared max_degree differs from the computed one")
    return embed_edges(BH.base.num_vertices, BH.base.edges)


def embed_edges(num_vertices: int, edges) -> Embedding:
    """Same construction on an explicit edge enumeration, repeats allowed."""
    edges = [tuple(e) for e in edges]
    member = [[] for _ in range(num_vertices)]
    for i, e in enumerate(edges, start=1):
        for v in e:
            member[v].append(i)
    d = max((len(m) for m in member), default=0)
    if d < 1:
        raise ValueError("cannot embed a hypergraph without incidences")
    dim = 2 * d
    coeffs = []
    for v in range(num_vertices):
        p = sign_polynomial(member[v])
        coeffs.append(tuple(p + [Fraction(0)] * (dim + 1 - len(p))))
    points = tuple(Point(c[1:]) for c in coeffs)
    halfspaces = tuple(HalfSpace(moment_normal(i, dim), 1) for i in range(1, len(edges) + 1))
    certs = tuple(tuple(hs.value(x) for hs in halfspaces) for x in points)
    emb = Embedding(dim, points, halfspaces, tuple(coeffs), certs)
    problems = check_embedding(edges, emb)
    if problems:
        raise EmbeddingDefect("; ".join(problems[:5]))
    return emb


def hard_instance_r4(n: int) -> GeometricInstance:
    """C(n,2) points and n half-spaces in R^4 whose trace hypergraph is the star hypergraph of K_n."""
    if n < 2:
        raise ValueError("hard instance needs n >= 2")
    return embed_edges(comb(n, 2), star_edges(n)).instance()


def realizes(instance: GeometricInstance, H: Hypergraph) -> bool:
    """Whether ``build(instance)`` equals ``H`` edge for edge (same order)."""
    return build(instance).edges == H.edges
