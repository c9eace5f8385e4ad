"""Build decorated graphs from JSON documents and validate them.

A decorated graph records the fixed-point data of a Hamiltonian circle
action on a compact symplectic four-manifold: isolated fixed points with
a pair of nonzero isotropy weights, fixed surfaces with momentum, area,
and genus labels, and edges for the spheres the circle rotates with
integer speed.  Every rule the data must satisfy is checked exactly over
the rationals, and violations are reported rather than repaired.
"""

from equicoh import (
    abbv_zero_check,
    extremal_self_intersections,
    parse_graph,
    resolve_self_intersections,
    serialize_graph,
    validate_graph,
)

THREE_POINTS = {
    "kind": "graph",
    "isolated": [
        {"id": "A", "y": 0, "weights": [1, 2]},
        {"id": "B", "y": 1, "weights": [-1, 1]},
        {"id": "C", "y": 2, "weights": [-2, -1]},
    ],
    "surfaces": [],
    "edges": [
        {"from": "A", "to": "B", "ell": 1},
        {"from": "B", "to": "C", "ell": 1},
    ],
}

graph = parse_graph(THREE_POINTS)
print("components:", [v.id for v in graph.isolated])
print("violations:", validate_graph(graph))
print("localization zero-sum holds:", abbv_zero_check(graph))
print()

# Two fixed surfaces with unequal areas.  The self-intersection labels are
# omitted from the document; the extremal equations determine them, and the
# resolved values must sum to zero against the interior contributions.
SURFACE_PAIR = {
    "kind": "graph",
    "isolated": [],
    "surfaces": [
        {"id": "Smin", "y": 0, "area": 2, "genus": 1},
        {"id": "Smax", "y": 1, "area": 4, "genus": 1},
    ],
    "edges": [],
}

pair = parse_graph(SURFACE_PAIR)
e_min, e_max = extremal_self_intersections(pair)
print("forced self-intersections:", (e_min, e_max))
resolved = resolve_self_intersections(pair)
print("resolved labels:", {v.id: v.self_intersection for v in resolved.surfaces})
print("zero-sum after resolution:", abbv_zero_check(resolved))
print()

# Broken data: a sign pattern no interior fixed point can have, and an edge
# whose speed does not match the weights at its endpoints.
BROKEN = {
    "kind": "graph",
    "isolated": [
        {"id": "A", "y": 0, "weights": [1, 2]},
        {"id": "B", "y": 1, "weights": [1, 1]},
        {"id": "C", "y": 2, "weights": [-2, -1]},
    ],
    "surfaces": [],
    "edges": [{"from": "A", "to": "B", "ell": 3}],
}

print("violation report:")
for violation in validate_graph(parse_graph(BROKEN)):
    print(f"  {violation.code} {list(violation.components)}: {violation.message}")
print()

print("canonical serialization of the three-point graph:")
print(serialize_graph(graph))
