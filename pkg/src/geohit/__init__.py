"""Hypergraphs of points and geometric ranges: matchings, hitting sets, nets."""

from geohit.geom import Disc, GeometricInstance, HalfSpace, Point
from geohit.hypergraph import Hypergraph, build, from_abstract

__all__ = [
    "Disc",
    "GeometricInstance",
    "HalfSpace",
    "Hypergraph",
    "Point",
    "build",
    "from_abstract",
]

__version__ = "0.1.0"
