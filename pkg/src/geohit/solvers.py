"""Exact solvers for matching number, hitting number and their LP relaxations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from geohit.hypergraph import Hypergraph, intersection_graph, is_hitting_set, is_matching
from geohit.lp import OPTIMAL, linprog_exact


class BudgetExhausted(RuntimeError):
    """A branch-and-bound search hit its node limit before proving optimality."""

    def __init__(self, what: str, budget: int, incumbent: int):
        super().__init__(f"{what}: node budget {budget} exhausted (incumbent {incumbent})")
        self.what = what
        self.budget = budget
        self.incumbent = incumbent


@dataclass(frozen=True)
class MatchingResult:
    value: int
    witness: tuple[int, ...]
    nodes: int = 0


@dataclass(frozen=True)
class HittingSetResult:
    value: int
    witness: tuple[int, ...]
    optimal: bool = True
    nodes: int = 0


@dataclass(frozen=True)
class FractionalSolution:
    objective: Fraction
    weights: tuple[Fraction, ...]


class _Counter:
    def __init__(self, what: str, budget: Optional[int]):
        self.what = what
        self.budget = budget
        self.nodes = 0

    def tick(self, incumbent: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.what, self.budget, incumbent)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def nu_exact(H: Hypergraph, budget: Optional[int] = None) -> MatchingResult:
    """Maximum matching = maximum independent set of the intersection graph.

    Branching uses the fact that every maximal independent set contains the
    lowest-degree candidate ``v`` or one of its neighbours.
    """
    m = H.num_edges
    adj = intersection_graph(H).adjacency_lists()
    closed = [(1 << i) | sum(1 << j for j in adj[i]) for i in range(m)]
    counter = _Counter("nu", budget)
    best: list[int] = []

    def rec(cand: int, chosen: list[int]) -> None:
        counter.tick(len(best))
        if not cand:
            if len(chosen) > len(best):
                best[:] = chosen
            return
        if len(chosen) + cand.bit_count() <= len(best):
            return
        v = min(_bits(cand), key=lambda i: ((closed[i] & cand).bit_count(), i))
        for u in _bits(closed[v] & cand):
            chosen.append(u)
            rec(cand & ~closed[u], chosen)
            chosen.pop()
            if len(chosen) + cand.bit_count() <= len(best):
                return

    rec((1 << m) - 1, [])
    witness = tuple(sorted(best))
    assert is_matching(H, witness)
    return MatchingResult(len(witness), witness, counter.nodes)


def greedy_hitting_set(H: Hypergraph) -> HittingSetResult:
    """Repeatedly take the vertex in most uncovered edges (lowest index on ties)."""
    uncovered = [set(e) for e in H.edges]
    chosen: list[int] = []
    while uncovered:
        counts: dict[int, int] = {}
        for e in uncovered:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen.append(v)
        uncovered = [e for e in uncovered if v not in e]
    witness = tuple(sorted(chosen))
    return HittingSetResult(len(witness), witness, optimal=False)


def _packing_bound(masks: list[int]) -> int:
    used = 0
    count = 0
    for e in sorted(masks, key=int.bit_count):
        if not e & used:
            used |= e
            count += 1
    return count


def tau_exact(H: Hypergraph, budget: Optional[int] = None) -> HittingSetResult:
    """Minimum hitting set by branch and bound.

    Branch on the vertices of a smallest uncovered edge, highest degree first;
    vertices already branched on are excluded from later siblings. Prune with
    a greedy disjoint-edge packing lower bound.
    """
    if not H.edges:
        return HittingSetResult(0, ())
    greedy = greedy_hitting_set(H)
    best = list(greedy.witness)
    counter = _Counter("tau", budget)
    masks = [sum(1 << v for v in e) for e in H.edges]

    def rec(edges: list[int], chosen: list[int]) -> None:
        counter.tick(len(best))
        if not edges:
            if len(chosen) < len(best):
                best[:] = chosen
            return
        if len(chosen) + _packing_bound(edges) >= len(best):
            return
        pick = min(range(len(edges)), key=lambda k: (edges[k].bit_count(), k))
        deg: dict[int, int] = {}
        for e in edges:
            for v in _bits(e):
                deg[v] = deg.get(v, 0) + 1
        order = sorted(_bits(edges[pick]), key=lambda v: (-deg[v], v))
        banned = 0
        for v in order:
            bit = 1 << v
            rest = []
            dead = False
            for e in edges:
                if e & bit:
                    continue
                e &= ~banned
                if not e:
                    dead = True
                    break
                rest.append(e)
            if not dead:
                chosen.append(v)
                rec(rest, chosen)
                chosen.pop()
            banned |= bit

    rec(masks, [])
    witness = tuple(sorted(best))
    assert is_hitting_set(H, witness)
    return HittingSetResult(len(witness), witness, True, counter.nodes)


def nu_star(H: Hypergraph) -> FractionalSolution:
    """Maximum fractional matching: weights on edges, load at most 1 per vertex."""
    m = H.num_edges
    if m == 0:
        return FractionalSolution(Fraction(0), ())
    covered = sorted({v for e in H.edges for v in e})
    A = [[1 if v in e else 0 for e in H.edges] for v in covered]
    res = linprog_exact([1] * m, A_ub=A, b_ub=[1] * len(covered), maximize=True)
    if res.status != OPTIMAL:
        raise ArithmeticError(f"fractional matching LP returned {res.status}")
    return FractionalSolution(res.objective, res.x)


def tau_star(H: Hypergraph) -> FractionalSolution:
    """Minimum fractional hitting set: weights on vertices, each edge gets at least 1."""
    n = H.num_vertices
    if H.num_edges == 0:
        return FractionalSolution(Fraction(0), tuple(Fraction(0) for _ in range(n)))
    A = [[-1 if v in e else 0 for v in range(n)] for e in H.edges]
    res = linprog_exact([1] * n, A_ub=A, b_ub=[-1] * H.num_edges)
    if res.status != OPTIMAL:
        raise ArithmeticError(f"fractional hitting set LP returned {res.status}")
    return FractionalSolution(res.objective, res.x)


def check_fractional_matching(H: Hypergraph, sol: FractionalSolution) -> bool:
    """Exact feasibility of edge weights and agreement with the stated objective."""
    if len(sol.weights) != H.num_edges or any(w < 0 for w in sol.weights):
        return False
    load = [Fraction(0)] * H.num_vertices
    for w, e in zip(sol.weights, H.edges):
        for v in e:
            load[v] += w
    return all(x <= 1 for x in load) and sum(sol.weights, Fraction(0)) == sol.objective


def check_fractional_hitting(H: Hypergraph, sol: FractionalSolution) -> bool:
    if len(sol.weights) != H.num_vertices or any(w < 0 for w in sol.weights):
        return False
    return (
        all(sum((sol.weights[v] for v in e), Fraction(0)) >= 1 for e in H.edges)
        and sum(sol.weights, Fraction(0)) == sol.objective
    )
