"""Small-edge selection, the greedy matching decomposition, and epsilon-nets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from geohit.hypergraph import Hypergraph, edges_intersecting, is_hitting_set
from geohit.solvers import (
    BudgetExhausted,
    HittingSetResult,
    greedy_hitting_set,
    nu_exact,
    tau_exact,
)

# Constant from the small-edge theorems for half-planes, discs and R^3 half-spaces.
SMALL_EDGE_BOUND = 156


@dataclass
class StructureConfig:
    """Knobs for the greedy pipeline."""

    exact_local_limit: int = 64  # above this many edges, find_small_edge is heuristic
    local_budget: Optional[int] = 200_000
    exact_class_limit: int = 25  # classes up to this size get an exact hitting set
    class_budget: Optional[int] = 200_000


DEFAULT_CONFIG = StructureConfig()


@dataclass(frozen=True)
class SmallEdgeReport:
    edge_index: int
    local_matching_value: Optional[int]
    heuristic: bool = False
    neighbourhood_size: int = 0


def _local_matching(H: Hypergraph, e: int, budget: Optional[int]) -> int:
    return nu_exact(H.subhypergraph(sorted(edges_intersecting(H, e))), budget).value


def find_small_edge(H: Hypergraph, config: StructureConfig = DEFAULT_CONFIG) -> SmallEdgeReport:
    """Edge minimizing the matching number of the edges it meets (lowest index on ties).

    Above ``config.exact_local_limit`` edges the neighbourhood size is
    minimized instead and the exact local value of the chosen edge is
    reported only if it can be computed within budget.
    """
    if not H.edges:
        raise ValueError("find_small_edge needs at least one edge")
    sizes = [len(edges_intersecting(H, e)) for e in range(H.num_edges)]
    if H.num_edges > config.exact_local_limit:
        e = min(range(H.num_edges), key=lambda k: (sizes[k], k))
        try:
            value = _local_matching(H, e, config.local_budget)
        except BudgetExhausted:
            value = None
        return SmallEdgeReport(e, value, heuristic=True, neighbourhood_size=sizes[e])
    best: Optional[tuple[int, int]] = None
    for e in range(H.num_edges):
        value = _local_matching(H, e, config.local_budget)
        if best is None or value < best[0]:
            best = (value, e)
            if value == 1:  # every local value is at least 1
                break
    value, e = best
    return SmallEdgeReport(e, value, neighbourhood_size=sizes[e])


@dataclass(frozen=True)
class Step:
    chosen: int
    local_matching_value: Optional[int]
    heuristic: bool
    members: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """Greedy matching ``chosen`` and the classes removed with each chosen edge.

    Indices refer to the input hypergraph.
    """

    chosen: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    steps: tuple[Step, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.chosen)


def greedy_matching(H: Hypergraph, config: StructureConfig = DEFAULT_CONFIG) -> Decomposition:
    """Pick a small edge, delete it with everything it meets, repeat until empty."""
    alive = list(range(H.num_edges))
    chosen: list[int] = []
    classes: list[tuple[int, ...]] = []
    steps: list[Step] = []
    while alive:
        sub = H.subhypergraph(alive)
        rep = find_small_edge(sub, config)
        members = tuple(sorted(alive[k] for k in edges_intersecting(sub, rep.edge_index)))
        e = alive[rep.edge_index]
        chosen.append(e)
        classes.append(members)
        steps.append(Step(e, rep.local_matching_value, rep.heuristic, members))
        gone = set(members)
        alive = [k for k in alive if k not in gone]
    return Decomposition(tuple(chosen), tuple(classes), tuple(steps))


def check_decomposition(H: Hypergraph, D: Decomposition) -> list[str]:
    """Partition, disjointness and class-membership audit; empty list means valid."""
    problems = []
    flat = [k for c in D.classes for k in c]
    if sorted(flat) != list(range(H.num_edges)):
        problems.append("classes do not partition the edges")
    if len(D.chosen) != len(D.classes):
        problems.append("one class per chosen edge expected")
    used: set[int] = set()
    for e in D.chosen:
        if used.intersection(H.edges[e]):
            problems.append(f"chosen edge {e} meets an earlier chosen edge")
        used.update(H.edges[e])
    remaining = set(range(H.num_edges))
    for e, cls in zip(D.chosen, D.classes):
        meets = {k for k in remaining if set(H.edges[k]) & set(H.edges[e])}
        if set(cls) != meets:
            problems.append(f"class of edge {e} is not its intersecting set at that step")
        remaining -= set(cls)
    return problems


def hitting_from_decomposition(
    H: Hypergraph, D: Decomposition, config: StructureConfig = DEFAULT_CONFIG
) -> tuple[HittingSetResult, list[HittingSetResult]]:
    """Hit each class separately (exact when small enough) and take the union.

    Returns the combined result and the per-class results.
    """
    per_class = []
    union: set[int] = set()
    for cls in D.classes:
        sub = H.subhypergraph(cls)
        res = None
        if len(cls) <= config.exact_class_limit:
            try:
                res = tau_exact(sub, config.class_budget)
            except BudgetExhausted:
                res = None
        if res is None:
            res = greedy_hitting_set(sub)
        per_class.append(res)
        union.update(res.witness)
    witness = tuple(sorted(union))
    if not is_hitting_set(H, witness):
        raise AssertionError("class hitting sets do not cover the hypergraph")
    return HittingSetResult(len(witness), witness, optimal=False), per_class


def heavy_edges(H: Hypergraph, total_points: int, eps: Fraction) -> list[int]:
    threshold = eps * total_points
    return [k for k, e in enumerate(H.edges) if len(e) >= threshold]


@dataclass(frozen=True)
class NetResult:
    net: tuple[int, ...]
    heavy: tuple[int, ...]
    decomposition: Decomposition


def epsilon_net(
    H: Hypergraph, total_points: int, eps, config: StructureConfig = DEFAULT_CONFIG
) -> NetResult:
    """Vertex set hitting every edge with at least ``eps * total_points`` vertices."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if total_points < H.num_vertices:
        raise ValueError("total_points is smaller than the vertex count")
    heavy = heavy_edges(H, total_points, eps)
    sub = H.subhypergraph(heavy)
    D = greedy_matching(sub, config)
    hit, _ = hitting_from_decomposition(sub, D, config)
    # report the decomposition in the original edge numbering
    D_orig = Decomposition(
        tuple(heavy[k] for k in D.chosen),
        tuple(tuple(heavy[k] for k in c) for c in D.classes),
        tuple(
            Step(heavy[s.chosen], s.local_matching_value, s.heuristic, tuple(heavy[k] for k in s.members))
            for s in D.steps
        ),
    )
    return NetResult(hit.witness, tuple(heavy), D_orig)
