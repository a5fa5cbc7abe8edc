"""Seeded random instances. All coordinates are integers in [-1000, 1000]."""

from __future__ import annotations

import random
from typing import Optional

from geohit.geom import Disc, GeometricInstance, HalfSpace, Point, general_position_3d, squared_distance
from geohit.hypergraph import Hypergraph, from_abstract

COORD = 1000
FAMILIES = {"halfplane": 2, "disc": 2, "halfspace": 3}


def _distinct_points(rng: random.Random, count: int, dim: int) -> list[Point]:
    seen: set = set()
    out: list[Point] = []
    while len(out) < count:
        c = tuple(rng.randint(-COORD, COORD) for _ in range(dim))
        if c not in seen:
            seen.add(c)
            out.append(Point(c))
    return out


def random_instance(
    dim: int,
    family: str,
    num_points: int,
    num_ranges: int,
    seed: int,
    max_size: Optional[int] = None,
) -> GeometricInstance:
    """Random points and ranges of one family.

    A half-space gets a random integer normal and an offset equal to the
    projection of a randomly chosen point, so it contains the ``k`` points
    with largest projection for a random ``k``; a disc is centred at a random
    lattice point and passes through its ``k``-th nearest point. ``k`` is
    uniform on ``1..max_size`` (default: all points).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if FAMILIES[family] != dim:
        raise ValueError(f"family {family} requires dim {FAMILIES[family]}, got {dim}")
    if num_points < 1 or num_ranges < 0:
        raise ValueError("need at least one point and a nonnegative number of ranges")
    top = num_points if max_size is None else max(1, min(max_size, num_points))
    rng = random.Random(seed)
    points = _distinct_points(rng, num_points, dim)
    ranges = []
    for _ in range(num_ranges):
        k = rng.randint(1, top)
        if family == "disc":
            center = Point([rng.randint(-COORD, COORD) for _ in range(2)])
            dists = sorted(squared_distance(center, p) for p in points)
            ranges.append(Disc(center, dists[k - 1]))
        else:
            normal = [0] * dim
            while not any(normal):
                normal = [rng.randint(-COORD, COORD) for _ in range(dim)]
            probe = HalfSpace(normal, 0)
            proj = sorted((probe.value(p) for p in points), reverse=True)
            ranges.append(HalfSpace(normal, proj[k - 1]))
    return GeometricInstance(dim, points, ranges)


def random_abstract(num_vertices: int, num_edges: int, seed: int, max_edge: Optional[int] = None) -> Hypergraph:
    """Random nonempty edges over ``num_vertices`` vertices, deduplicated."""
    rng = random.Random(seed)
    top = num_vertices if max_edge is None else min(max_edge, num_vertices)
    edges = []
    for _ in range(num_edges):
        size = rng.randint(1, top)
        edges.append(rng.sample(range(num_vertices), size))
    return from_abstract(num_vertices, edges)


def random_general_position_6(rng: random.Random) -> list[Point]:
    while True:
        pts = _distinct_points(rng, 6, 3)
        if general_position_3d(pts):
            return pts
