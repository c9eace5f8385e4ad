"""Decorated graphs encoding Hamiltonian circle actions on 4-manifolds.

A graph records the fixed-point data of the action: isolated fixed points
carry a momentum level and the two signed isotropy weights; fixed surfaces
(fat vertices) carry momentum, symplectic area, genus and optionally a
normal-bundle self-intersection number; edges record isotropy spheres
joining isolated fixed points.  Validation checks the combinatorial
compatibility conditions such a graph must satisfy, and the two extremal
self-intersection numbers are determined by the rest of the data through
exact rational formulas implemented in :func:`extremal_self_intersections`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateInputError, InputError, ParseError, SchemaError

GRAPH_KEYS = {"kind", "isolated", "surfaces", "edges", "h1_identification"}
ISOLATED_KEYS = {"id", "y", "weights"}
SURFACE_KEYS = {"id", "y", "area", "genus", "self_intersection"}
EDGE_KEYS = {"from", "to", "ell", "area"}


def parse_rational(value, where: str) -> Fraction:
    """Exact rational from a JSON value: an integer or a "p/q" string."""
    if isinstance(value, bool):
        raise SchemaError("expected a rational number", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"cannot parse rational {value!r}", where) from None
    if isinstance(value, float):
        raise SchemaError('floats are rejected; use an integer or a "p/q" string', where)
    raise SchemaError("expected a rational number", where)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class IsolatedVertex:
    id: str
    y: Fraction
    weights: tuple[int, int]


@dataclass(frozen=True)
class FatVertex:
    id: str
    y: Fraction
    area: Fraction
    genus: int
    self_intersection: Fraction | None = None


@dataclass(frozen=True)
class GraphEdge:
    start: str  # serialized as "from"
    end: str  # serialized as "to"
    ell: int
    area: Fraction | None = None


@dataclass(frozen=True)
class DecoratedGraph:
    isolated: tuple[IsolatedVertex, ...]
    surfaces: tuple[FatVertex, ...]
    edges: tuple[GraphEdge, ...]
    h1_identification: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "isolated", tuple(sorted(self.isolated, key=lambda v: v.id))
        )
        object.__setattr__(
            self, "surfaces", tuple(sorted(self.surfaces, key=lambda v: v.id))
        )
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda e: (e.start, e.end, e.ell)))
        )
        if self.h1_identification is not None:
            object.__setattr__(
                self,
                "h1_identification",
                tuple(tuple(int(x) for x in row) for row in self.h1_identification),
            )

    def component_ids(self) -> list[str]:
        return sorted([v.id for v in self.isolated] + [v.id for v in self.surfaces])

    def find(self, component_id: str) -> IsolatedVertex | FatVertex:
        for v in self.isolated:
            if v.id == component_id:
                return v
        for v in self.surfaces:
            if v.id == component_id:
                return v
        raise InputError(f"no component named {component_id!r}")

    def momentum_span(self) -> tuple[Fraction, Fraction]:
        ys = [v.y for v in self.isolated] + [v.y for v in self.surfaces]
        return min(ys), max(ys)

    def identification_matrix(self) -> tuple[tuple[int, ...], ...]:
        """The H^1 pairing between the two fat vertices; defaults to identity."""
        if len(self.surfaces) != 2:
            raise InputError("an H^1 identification needs exactly two fat vertices")
        g = self.surfaces[0].genus
        if self.h1_identification is not None:
            return self.h1_identification
        return tuple(
            tuple(1 if i == j else 0 for j in range(2 * g)) for i in range(2 * g)
        )


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    components: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "message": self.message,
            "component-ids": list(self.components),
        }


def _sorted_report(violations: list[Violation]) -> list[Violation]:
    return sorted(violations, key=lambda v: (v.code, v.components, v.message))


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise SchemaError(f"missing required field {key!r}", where)
    return obj[key]


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise SchemaError(f"unknown field(s) {sorted(extra)}", where)


def _parse_id(value, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError("id must be a nonempty string", where)
    return value


def _load_document(text) -> dict:
    if isinstance(text, dict):
        return text
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SchemaError("top-level value must be an object")
    return doc


def parse_graph(text) -> DecoratedGraph:
    """Strictly parse a graph document (JSON text or an already-loaded dict)."""
    doc = _load_document(text)
    _check_keys(doc, GRAPH_KEYS, "graph")
    if _require(doc, "kind", "graph") != "graph":
        raise SchemaError('field "kind" must be "graph"', "graph")
    raw_isolated = _require(doc, "isolated", "graph")
    raw_surfaces = _require(doc, "surfaces", "graph")
    raw_edges = _require(doc, "edges", "graph")
    if not isinstance(raw_isolated, list) or not isinstance(raw_surfaces, list) \
            or not isinstance(raw_edges, list):
        raise SchemaError('"isolated", "surfaces" and "edges" must be arrays', "graph")

    seen: set[str] = set()
    isolated = []
    for i, item in enumerate(raw_isolated):
        where = f"isolated[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("expected an object", where)
        _check_keys(item, ISOLATED_KEYS, where)
        vid = _parse_id(_require(item, "id", where), where)
        if vid in seen:
            raise SchemaError(f"duplicate id {vid!r}", where)
        seen.add(vid)
        y = parse_rational(_require(item, "y", where), where)
        weights = _require(item, "weights", where)
        if (
            not isinstance(weights, list)
            or len(weights) != 2
            or not all(isinstance(w, int) and not isinstance(w, bool) for w in weights)
        ):
            raise SchemaError('"weights" must be a pair of integers', where)
        if 0 in weights:
            raise SchemaError("weights must be nonzero", where)
        isolated.append(IsolatedVertex(vid, y, (weights[0], weights[1])))

    surfaces = []
    for i, item in enumerate(raw_surfaces):
        where = f"surfaces[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("expected an object", where)
        _check_keys(item, SURFACE_KEYS, where)
        vid = _parse_id(_require(item, "id", where), where)
        if vid in seen:
            raise SchemaError(f"duplicate id {vid!r}", where)
        seen.add(vid)
        y = parse_rational(_require(item, "y", where), where)
        area = parse_rational(_require(item, "area", where), where)
        if area <= 0:
            raise SchemaError("area must be positive", where)
        genus = _require(item, "genus", where)
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            raise SchemaError('"genus" must be a nonnegative integer', where)
        e = item.get("self_intersection")
        if e is not None:
            e = parse_rational(e, where)
        surfaces.append(FatVertex(vid, y, area, genus, e))

    if not seen:
        raise SchemaError("a graph needs at least one fixed component", "graph")

    edges = []
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("expected an object", where)
        _check_keys(item, EDGE_KEYS, where)
        start = _parse_id(_require(item, "from", where), where)
        end = _parse_id(_require(item, "to", where), where)
        for endpoint in (start, end):
            if endpoint not in seen:
                raise SchemaError(f"edge references an unknown id {endpoint!r}", where)
            if not any(v.id == endpoint for v in isolated):
                raise SchemaError(f"edge endpoint {endpoint!r} is not an isolated vertex", where)
        if start == end:
            raise SchemaError("edge endpoints must differ", where)
        ell = _require(item, "ell", where)
        if not isinstance(ell, int) or isinstance(ell, bool) or ell < 1:
            raise SchemaError('"ell" must be a positive integer', where)
        area = item.get("area")
        if area is not None:
            area = parse_rational(area, where)
            if area <= 0:
                raise SchemaError("area must be positive", where)
        edges.append(GraphEdge(start, end, ell, area))

    identification = doc.get("h1_identification")
    if identification is not None:
        where = "h1_identification"
        if len(surfaces) != 2:
            raise SchemaError("an identification needs exactly two fat vertices", where)
        g = surfaces[0].genus
        if (
            not isinstance(identification, list)
            or len(identification) != 2 * g
            or any(
                not isinstance(row, list)
                or len(row) != 2 * g
                or any(x not in (-1, 0, 1) or isinstance(x, bool) for x in row)
                for row in identification
            )
        ):
            raise SchemaError(f"expected a {2 * g}x{2 * g} matrix over {{-1, 0, 1}}", where)
        for i in range(2 * g):
            if sum(1 for x in identification[i] if x) != 1:
                raise SchemaError("each row must have exactly one nonzero entry", where)
            if sum(1 for row in identification if row[i]) != 1:
                raise SchemaError("each column must have exactly one nonzero entry", where)
        identification = tuple(tuple(row) for row in identification)

    return DecoratedGraph(tuple(isolated), tuple(surfaces), tuple(edges), identification)


def graph_to_dict(graph: DecoratedGraph) -> dict:
    doc: dict = {
        "kind": "graph",
        "isolated": [
            {"id": v.id, "y": format_rational(v.y), "weights": list(v.weights)}
            for v in graph.isolated
        ],
        "surfaces": [],
        "edges": [],
    }
    for v in graph.surfaces:
        item = {
            "id": v.id,
            "y": format_rational(v.y),
            "area": format_rational(v.area),
            "genus": v.genus,
        }
        if v.self_intersection is not None:
            item["self_intersection"] = format_rational(v.self_intersection)
        doc["surfaces"].append(item)
    for e in graph.edges:
        item = {"from": e.start, "to": e.end, "ell": e.ell}
        if e.area is not None:
            item["area"] = format_rational(e.area)
        doc["edges"].append(item)
    if graph.h1_identification is not None:
        doc["h1_identification"] = [list(row) for row in graph.h1_identification]
    return doc


def serialize_graph(graph: DecoratedGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"


def extremal_self_intersections(graph: DecoratedGraph) -> tuple[Fraction, Fraction]:
    """Self-intersection numbers forced on the extrema by the interior data.

    Interior isolated points enter through 1/(m n) with m, n the weight
    magnitudes; extremal area labels enter directly (0 for isolated
    extrema).  Raises DegenerateInputError when the momentum span collapses.
    """
    y_min, y_max = graph.momentum_span()
    if y_min == y_max:
        raise DegenerateInputError("momentum map is constant; extrema are not separated")
    sum_e = Fraction(0)
    sum_ye = Fraction(0)
    for v in graph.isolated:
        if y_min < v.y < y_max:
            m, n = abs(v.weights[0]), abs(v.weights[1])
            if m == 0 or n == 0:
                raise InputError(f"zero weight at {v.id!r}")
            e_p = Fraction(1, m * n)
            sum_e += e_p
            sum_ye += v.y * e_p
    s_min = Fraction(0)
    s_max = Fraction(0)
    for v in graph.surfaces:
        if v.y == y_min:
            s_min = v.area
        elif v.y == y_max:
            s_max = v.area
    span = y_max - y_min
    e_min = (sum_ye + s_min - sum_e * y_max - s_max) / span
    e_max = (sum_e * y_min + s_max - sum_ye - s_min) / span
    return e_min, e_max


def resolve_self_intersections(graph: DecoratedGraph) -> DecoratedGraph:
    """Fill missing self_intersection labels on extremal surfaces from the equations."""
    todo = [
        v for v in graph.surfaces if v.self_intersection is None
    ]
    if not todo:
        return graph
    y_min, y_max = graph.momentum_span()
    e_min, e_max = extremal_self_intersections(graph)
    surfaces = []
    for v in graph.surfaces:
        if v.self_intersection is None and v.y == y_min:
            v = FatVertex(v.id, v.y, v.area, v.genus, e_min)
        elif v.self_intersection is None and v.y == y_max:
            v = FatVertex(v.id, v.y, v.area, v.genus, e_max)
        surfaces.append(v)
    return DecoratedGraph(graph.isolated, tuple(surfaces), graph.edges, graph.h1_identification)


def weight_product(vertex: IsolatedVertex) -> int:
    """Signed product of the two isotropy weights; the equivariant Euler number."""
    w = vertex.weights[0] * vertex.weights[1]
    if w == 0:
        raise InputError(f"zero weight at {vertex.id!r}")
    return w


def abbv_zero_check(graph: DecoratedGraph) -> bool:
    """Degree-zero localization identity: sum of inverse Euler numbers vanishes.

    Requires every fat vertex to carry a resolved self_intersection.
    """
    total = Fraction(0)
    for v in graph.isolated:
        total += Fraction(1, weight_product(v))
    for v in graph.surfaces:
        if v.self_intersection is None:
            raise InputError(f"unresolved self_intersection at {v.id!r}")
        total -= v.self_intersection
    return total == 0


def validate_graph(graph: DecoratedGraph) -> list[Violation]:
    """All compatibility violations, canonically sorted; empty iff valid."""
    violations: list[Violation] = []
    y_min, y_max = graph.momentum_span()
    if y_min == y_max:
        return [
            Violation(
                "degenerate-momentum",
                "all components sit at one momentum level",
                tuple(graph.component_ids()),
            )
        ]

    at_min = [v.id for v in graph.isolated if v.y == y_min] + [
        v.id for v in graph.surfaces if v.y == y_min
    ]
    at_max = [v.id for v in graph.isolated if v.y == y_max] + [
        v.id for v in graph.surfaces if v.y == y_max
    ]
    for level, ids in (("minimum", at_min), ("maximum", at_max)):
        if len(ids) > 1:
            violations.append(
                Violation(
                    "extremum-not-unique",
                    f"{len(ids)} components attain the {level}",
                    tuple(sorted(ids)),
                )
            )

    weights_ok = True
    for v in graph.isolated:
        b1, b2 = v.weights
        if b1 == 0 or b2 == 0:
            violations.append(
                Violation("weight-signs", "weights must be nonzero", (v.id,))
            )
            weights_ok = False
        elif v.y == y_min and not (b1 > 0 and b2 > 0):
            violations.append(
                Violation(
                    "weight-signs",
                    f"minimum point must have two positive weights, got {v.weights}",
                    (v.id,),
                )
            )
        elif v.y == y_max and not (b1 < 0 and b2 < 0):
            violations.append(
                Violation(
                    "weight-signs",
                    f"maximum point must have two negative weights, got {v.weights}",
                    (v.id,),
                )
            )
        elif y_min < v.y < y_max and not b1 * b2 < 0:
            violations.append(
                Violation(
                    "weight-signs",
                    f"interior point must have weights of opposite sign, got {v.weights}",
                    (v.id,),
                )
            )

    vertex_by_id = {v.id: v for v in graph.isolated}
    for e in graph.edges:
        a, b = vertex_by_id[e.start], vertex_by_id[e.end]
        pair = tuple(sorted((e.start, e.end)))
        if a.y == b.y:
            violations.append(
                Violation("edge-weights", "edge endpoints sit at equal momentum", pair)
            )
            continue
        lower, upper = (a, b) if a.y < b.y else (b, a)
        if e.ell not in lower.weights or -e.ell not in upper.weights:
            violations.append(
                Violation(
                    "edge-weights",
                    f"edge of speed {e.ell} needs weight +{e.ell} below and -{e.ell} above",
                    pair,
                )
            )
        if e.area is not None and abs(b.y - a.y) != e.ell * e.area:
            violations.append(
                Violation(
                    "edge-area",
                    f"momentum gap {abs(b.y - a.y)} != ell * area = {e.ell * e.area}",
                    pair,
                )
            )

    for v in graph.surfaces:
        if v.y not in (y_min, y_max):
            violations.append(
                Violation("fat-not-extremal", "fixed surfaces occur only at the extrema", (v.id,))
            )

    genera = sorted({v.genus for v in graph.surfaces})
    if len(graph.surfaces) == 2 and len(genera) > 1:
        violations.append(
            Violation(
                "genus-mismatch",
                f"the two fixed surfaces have different genera {genera}",
                tuple(v.id for v in graph.surfaces),
            )
        )
    if any(v.genus > 0 for v in graph.surfaces) and len(graph.surfaces) != 2:
        violations.append(
            Violation(
                "genus-mismatch",
                "positive genus forces exactly two fixed surfaces",
                tuple(v.id for v in graph.surfaces),
            )
        )

    if not graph.surfaces and weights_ok:
        g = 0
        for v in graph.isolated:
            g = gcd(g, abs(v.weights[0]))
            g = gcd(g, abs(v.weights[1]))
        if g != 1:
            violations.append(
                Violation(
                    "not-effective",
                    f"all weights share the common factor {g}",
                    tuple(v.id for v in graph.isolated),
                )
            )

    if weights_ok:
        try:
            e_min, e_max = extremal_self_intersections(graph)
            for v in graph.surfaces:
                if v.self_intersection is None:
                    continue
                expected = e_min if v.y == y_min else e_max if v.y == y_max else None
                if expected is not None and v.self_intersection != expected:
                    violations.append(
                        Violation(
                            "self-intersection",
                            f"label {v.self_intersection} but the extremal equations give {expected}",
                            (v.id,),
                        )
                    )
            resolved = resolve_self_intersections(graph)
            if not abbv_zero_check(resolved):
                violations.append(
                    Violation(
                        "euler-sum",
                        "inverse Euler numbers of the fixed components do not sum to zero",
                        tuple(graph.component_ids()),
                    )
                )
        except InputError:
            pass

    return _sorted_report(violations)


def report_to_json(violations: list[Violation]) -> list[dict]:
    return [v.to_dict() for v in violations]
