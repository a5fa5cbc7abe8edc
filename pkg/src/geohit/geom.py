"""Exact rational geometric primitives and closed range membership.

All coordinates are :class:`fractions.Fraction`; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, str]


class DimensionError(ValueError):
    """Raised when objects of different ambient dimension are combined."""


def to_rational(value: Number) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected on purpose: they would smuggle rounding in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"``, or a bare integer when den == 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coords(values: Iterable[Number]) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Number]):
        c = _coords(coords)
        if not c:
            raise ValueError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class HalfSpace:
    """Closed half-space ``{x : <normal, x> >= offset}``."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __init__(self, normal: Iterable[Number], offset: Number):
        n = _coords(normal)
        if not n:
            raise ValueError("empty normal")
        if all(a == 0 for a in n):
            raise ValueError("normal must not be the zero vector")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", to_rational(offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, point: Point) -> Fraction:
        """Return ``<normal, point>``."""
        if point.dim != self.dim:
            raise DimensionError(f"half-space in R^{self.dim}, point in R^{point.dim}")
        return dot(self.normal, point.coords)

    def scaled(self, factor: Number) -> HalfSpace:
        f = to_rational(factor)
        if f <= 0:
            raise ValueError("scaling factor must be positive")
        return HalfSpace([a * f for a in self.normal], self.offset * f)


@dataclass(frozen=True)
class Disc:
    """Closed disc in the plane: squared distance to ``center`` at most ``radius_sq``."""

    center: Point
    radius_sq: Fraction = field()

    def __init__(self, center: Point | Iterable[Number], radius_sq: Number):
        c = center if isinstance(center, Point) else Point(center)
        if c.dim != 2:
            raise DimensionError("discs live in R^2")
        r = to_rational(radius_sq)
        if r < 0:
            raise ValueError("radius_sq must be nonnegative")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius_sq", r)

    @property
    def dim(self) -> int:
        return 2


Range = Union[HalfSpace, Disc]


def squared_distance(a: Point, b: Point) -> Fraction:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return sum(((x - y) ** 2 for x, y in zip(a.coords, b.coords)), Fraction(0))


def contains(rng: Range, point: Point) -> bool:
    """Exact closed membership test of ``point`` in ``rng``."""
    if rng.dim != point.dim:
        raise DimensionError(f"range in R^{rng.dim}, point in R^{point.dim}")
    if isinstance(rng, HalfSpace):
        return rng.value(point) >= rng.offset
    if isinstance(rng, Disc):
        return squared_distance(rng.center, point) <= rng.radius_sq
    raise TypeError(f"unknown range type {type(rng).__name__}")


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def coplanar(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether four points in R^3 lie on a common plane (4x4 determinant test)."""
    rows = []
    for p in (a, b, c, d):
        if p.dim != 3:
            raise DimensionError("coplanarity is tested in R^3")
        rows.append([*p.coords, Fraction(1)])
    return det(rows) == 0


def general_position_3d(points: Sequence[Point]) -> bool:
    """True iff no four of the six given points in R^3 are coplanar."""
    if len(points) != 6:
        raise ValueError(f"expected six points, got {len(points)}")
    if any(p.dim != 3 for p in points):
        raise DimensionError("expected points in R^3")
    return not any(coplanar(*quad) for quad in combinations(points, 4))


@dataclass(frozen=True)
class GeometricInstance:
    """The input universe: points P and ranges F in a common R^dim."""

    dim: int
    points: tuple[Point, ...]
    ranges: tuple[Range, ...]

    def __init__(self, dim: int, points: Iterable[Point], ranges: Iterable[Range]):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError("dim must be a positive integer")
        pts = tuple(points)
        rgs = tuple(ranges)
        for p in pts:
            if p.dim != dim:
                raise DimensionError(f"point of dimension {p.dim} in an R^{dim} instance")
        for r in rgs:
            if isinstance(r, Disc) and dim != 2:
                raise DimensionError("discs are only allowed in R^2 instances")
            if r.dim != dim:
                raise DimensionError(f"range of dimension {r.dim} in an R^{dim} instance")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "ranges", rgs)
