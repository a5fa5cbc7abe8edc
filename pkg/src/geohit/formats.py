"""JSON instance documents (format version "1") and report encoding."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from geohit.geom import Disc, GeometricInstance, HalfSpace, Point, format_rational, to_rational
from geohit.hardness import Embedding
from geohit.hypergraph import Hypergraph, from_abstract

VERSION = "1"


class DocumentError(ValueError):
    """Malformed instance document; ``location`` is a JSON path or line:col."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass
class InstanceDocument:
    kind: str  # "geometric" | "abstract"
    instance: Union[GeometricInstance, Hypergraph]
    meta: dict = field(default_factory=dict)


def _rat(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(where, f"expected a rational string or integer, got {value!r}")
    try:
        return to_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(where, f"bad rational {value!r}") from exc


def _vector(value: Any, where: str) -> list[Fraction]:
    if not isinstance(value, list):
        raise DocumentError(where, "expected an array")
    return [_rat(v, f"{where}[{k}]") for k, v in enumerate(value)]


def _need(doc: dict, key: str, where: str) -> Any:
    if key not in doc:
        raise DocumentError(where, f"missing key {key!r}")
    return doc[key]


def document_from_obj(doc: Any) -> InstanceDocument:
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be a JSON object")
    version = str(_need(doc, "version", "$"))
    if version != VERSION:
        raise DocumentError("$.version", f"unsupported version {version!r}")
    kind = _need(doc, "kind", "$")
    meta = doc.get("meta", {})
    if kind == "abstract":
        n = _need(doc, "numVertices", "$")
        edges = _need(doc, "edges", "$")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise DocumentError("$.numVertices", "expected a nonnegative integer")
        if not isinstance(edges, list):
            raise DocumentError("$.edges", "expected an array")
        for k, e in enumerate(edges):
            if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
                raise DocumentError(f"$.edges[{k}]", "expected an array of integers")
        try:
            H = from_abstract(n, edges)
        except ValueError as exc:
            raise DocumentError("$.edges", str(exc)) from exc
        return InstanceDocument("abstract", H, meta)
    if kind != "geometric":
        raise DocumentError("$.kind", f"expected 'geometric' or 'abstract', got {kind!r}")
    dim = _need(doc, "dim", "$")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("$.dim", "expected a positive integer")
    raw_points = _need(doc, "points", "$")
    raw_ranges = _need(doc, "ranges", "$")
    if not isinstance(raw_points, list) or not isinstance(raw_ranges, list):
        raise DocumentError("$", "points and ranges must be arrays")
    try:
        points = [Point(_vector(p, f"$.points[{k}]")) for k, p in enumerate(raw_points)]
        ranges = []
        for k, r in enumerate(raw_ranges):
            where = f"$.ranges[{k}]"
            if not isinstance(r, dict) or len(r) != 1:
                raise DocumentError(where, "expected {'halfspace': ...} or {'disc': ...}")
            (tag, body), = r.items()
            if tag == "halfspace":
                ranges.append(
                    HalfSpace(_vector(_need(body, "normal", where), f"{where}.normal"),
                              _rat(_need(body, "offset", where), f"{where}.offset"))
                )
            elif tag == "disc":
                ranges.append(
                    Disc(Point(_vector(_need(body, "center", where), f"{where}.center")),
                         _rat(_need(body, "radiusSq", where), f"{where}.radiusSq"))
                )
            else:
                raise DocumentError(where, f"unknown range type {tag!r}")
        inst = GeometricInstance(dim, points, ranges)
    except DocumentError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocumentError("$", str(exc)) from exc
    return InstanceDocument("geometric", inst, meta)


def parse_document(text: str) -> InstanceDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}:{exc.colno}", exc.msg) from exc
    return document_from_obj(obj)


def instance_to_obj(instance: Union[GeometricInstance, Hypergraph], meta: Optional[dict] = None) -> dict:
    if isinstance(instance, Hypergraph):
        doc = {
            "version": VERSION,
            "kind": "abstract",
            "numVertices": instance.num_vertices,
            "edges": [list(e) for e in instance.edges],
        }
    else:
        ranges = []
        for r in instance.ranges:
            if isinstance(r, HalfSpace):
                ranges.append({"halfspace": {"normal": [format_rational(a) for a in r.normal],
                                             "offset": format_rational(r.offset)}})
            else:
                ranges.append({"disc": {"center": [format_rational(a) for a in r.center.coords],
                                        "radiusSq": format_rational(r.radius_sq)}})
        doc = {
            "version": VERSION,
            "kind": "geometric",
            "dim": instance.dim,
            "points": [[format_rational(c) for c in p.coords] for p in instance.points],
            "ranges": ranges,
        }
    if meta:
        doc["meta"] = meta
    return doc


def dumps(obj: Any) -> str:
    return json.dumps(encode(obj), indent=2) + "\n"


def serialize_document(doc: InstanceDocument) -> str:
    return dumps(instance_to_obj(doc.instance, doc.meta))


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def encode(obj: Any) -> Any:
    """Make a report JSON-safe; Fractions become ``"num/den"`` strings."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [encode(v) for v in items]
    return obj


def embedding_sidecar(emb: Embedding, edges) -> dict:
    """Coefficients, certificates and the realized edge list, for re-verification."""
    return {
        "version": VERSION,
        "kind": "embedding",
        "dim": emb.dim,
        "edges": [list(e) for e in edges],
        "coefficients": [list(c) for c in emb.coefficients],
        "certificates": [list(c) for c in emb.certificates],
    }


def embedding_from_sidecar(obj: dict, instance: GeometricInstance) -> tuple[Embedding, list[tuple[int, ...]]]:
    if obj.get("kind") != "embedding":
        raise DocumentError("$.kind", "expected an embedding sidecar")
    coeffs = tuple(tuple(_vector(c, f"$.coefficients[{k}]")) for k, c in enumerate(_need(obj, "coefficients", "$")))
    certs = tuple(tuple(_vector(c, f"$.certificates[{k}]")) for k, c in enumerate(_need(obj, "certificates", "$")))
    edges = [tuple(e) for e in _need(obj, "edges", "$")]
    if len(coeffs) != len(instance.points) or len(edges) != len(instance.ranges):
        raise DocumentError("$", "sidecar does not match the instance sizes")
    emb = Embedding(instance.dim, instance.points, instance.ranges, coeffs, certs)
    return emb, edges
