"""Trace hypergraphs H(P, F) and abstract hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from geohit.geom import GeometricInstance, contains

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..num_vertices-1`` and distinct, nonempty, sorted edges.

    ``provenance[k]`` lists the indices of the ranges whose trace is edge ``k``;
    it is ``None`` for hypergraphs that did not come from geometry.
    """

    num_vertices: int
    edges: tuple[Edge, ...]
    provenance: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        seen = set()
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not sorted and duplicate-free")
            if e[0] < 0 or e[-1] >= self.num_vertices:
                raise ValueError(f"edge {e} has a vertex outside 0..{self.num_vertices - 1}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if self.provenance is not None and len(self.provenance) != len(self.edges):
            raise ValueError("provenance length differs from edge count")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(e) for e in self.edges]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        counts = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                counts[v] += 1
        return max(counts, default=0)

    def subhypergraph(self, indices: Iterable[int]) -> Hypergraph:
        """Keep only the listed edges, in the given order, on the same vertex set."""
        idx = list(indices)
        prov = None if self.provenance is None else tuple(self.provenance[i] for i in idx)
        return Hypergraph(self.num_vertices, tuple(self.edges[i] for i in idx), prov)


@dataclass(frozen=True)
class BuildReport:
    num_ranges: int
    num_edges: int
    empty_traces: int
    duplicate_traces: int


def build_with_report(instance: GeometricInstance) -> tuple[Hypergraph, BuildReport]:
    first_seen: dict[Edge, int] = {}
    edges: list[Edge] = []
    prov: list[list[int]] = []
    empty = 0
    for r_idx, rng in enumerate(instance.ranges):
        trace = tuple(i for i, p in enumerate(instance.points) if contains(rng, p))
        if not trace:
            empty += 1
            continue
        k = first_seen.get(trace)
        if k is None:
            first_seen[trace] = len(edges)
            edges.append(trace)
            prov.append([r_idx])
        else:
            prov[k].append(r_idx)
    H = Hypergraph(len(instance.points), tuple(edges), tuple(tuple(p) for p in prov))
    report = BuildReport(
        num_ranges=len(instance.ranges),
        num_edges=len(edges),
        empty_traces=empty,
        duplicate_traces=len(instance.ranges) - empty - len(edges),
    )
    return H, report


def build(instance: GeometricInstance) -> Hypergraph:
    """The hypergraph whose edges are the distinct nonempty traces P ∩ F."""
    return build_with_report(instance)[0]


def from_abstract(num_vertices: int, edge_list: Iterable[Iterable[int]]) -> Hypergraph:
    """Canonicalize and deduplicate an explicit edge list (first occurrence wins)."""
    if num_vertices < 0:
        raise ValueError("num_vertices must be nonnegative")
    out: list[Edge] = []
    seen: set[Edge] = set()
    for raw in edge_list:
        e = tuple(sorted(set(int(v) for v in raw)))
        if not e:
            raise ValueError("empty edge")
        if e[0] < 0 or e[-1] >= num_vertices:
            raise ValueError(f"edge {list(raw)} has a vertex outside 0..{num_vertices - 1}")
        if e not in seen:
            seen.add(e)
            out.append(e)
    return Hypergraph(num_vertices, tuple(out))


@dataclass(frozen=True)
class IntersectionGraph:
    num_nodes: int
    adjacency: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.adjacency if i in (a, b)}

    def adjacency_lists(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.num_nodes)]
        for a, b in self.adjacency:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def intersection_graph(H: Hypergraph) -> IntersectionGraph:
    sets = H.edge_sets()
    pairs = frozenset(
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    )
    return IntersectionGraph(len(sets), pairs)


def _check_index(H: Hypergraph, e: int) -> None:
    if not 0 <= e < H.num_edges:
        raise IndexError(f"edge index {e} out of range for {H.num_edges} edges")


def edges_intersecting(H: Hypergraph, e: int) -> set[int]:
    """Indices of all edges meeting edge ``e``, ``e`` itself included."""
    _check_index(H, e)
    target = set(H.edges[e])
    return {k for k, f in enumerate(H.edges) if target.intersection(f)}


def delete_edges(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    drop = set(S)
    for e in drop:
        _check_index(H, e)
    return H.subhypergraph(k for k in range(H.num_edges) if k not in drop)


def fano_plane() -> Hypergraph:
    """Points and lines of the projective plane of order 2."""
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return from_abstract(7, lines)


def is_matching(H: Hypergraph, indices: Sequence[int]) -> bool:
    """Whether the listed edges are distinct and pairwise disjoint."""
    if len(set(indices)) != len(indices):
        return False
    used: set[int] = set()
    for k in indices:
        e = H.edges[k]
        if used.intersection(e):
            return False
        used.update(e)
    return True


def is_hitting_set(H: Hypergraph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return all(s.intersection(e) for e in H.edges)
