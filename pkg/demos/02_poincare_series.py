"""Betti numbers and Poincare series read off the fixed-point data.

The momentum map is a perfect invariant function: each fixed component
contributes a fixed row of Betti numbers depending only on its kind, its
position (minimum, interior, maximum), and its genus.  Summing rows gives
the ordinary Poincare polynomial of the manifold; dividing by (1 - t^2)
gives the equivariant series, and the fixed-set series exceeds it by one
relation in degree 0 per extra component, 2g in degree 1, and one in
degree 2.
"""

from equicoh import (
    betti_contribution,
    equivariant_series,
    parse_graph,
    poincare_fixed_set,
    poincare_manifold,
    relation_counts,
)

print("per-component Betti rows (degrees 0..4):")
for kind, position, genus in [
    ("point", "min", 0),
    ("point", "interior", 0),
    ("point", "max", 0),
    ("surface", "min", 2),
    ("surface", "max", 2),
]:
    row = betti_contribution(kind, position, genus)
    print(f"  {kind:8s} {position:9s} genus {genus}: {row}")
print()

FIXTURES = {
    "three points": {
        "kind": "graph",
        "isolated": [
            {"id": "A", "y": 0, "weights": [1, 2]},
            {"id": "B", "y": 1, "weights": [-1, 1]},
            {"id": "C", "y": 2, "weights": [-2, -1]},
        ],
        "surfaces": [],
        "edges": [],
    },
    "two genus-2 surfaces": {
        "kind": "graph",
        "isolated": [],
        "surfaces": [
            {"id": "Smin", "y": 0, "area": 1, "genus": 2},
            {"id": "Smax", "y": 1, "area": 1, "genus": 2},
        ],
        "edges": [],
    },
    "point under a sphere": {
        "kind": "graph",
        "isolated": [{"id": "p", "y": 0, "weights": [1, 1]}],
        "surfaces": [
            {"id": "S", "y": 1, "area": 1, "genus": 0, "self_intersection": 1}
        ],
        "edges": [],
    },
}

for name, doc in FIXTURES.items():
    graph = parse_graph(doc)
    ordinary = poincare_manifold(graph)
    fixed = poincare_fixed_set(graph)
    print(f"{name}:")
    print("  ordinary manifold coefficients:", [ordinary.coefficient(k) for k in range(5)])
    print("  ordinary fixed-set coefficients:", [fixed.coefficient(k) for k in range(5)])
    for which in ("manifold", "fixed"):
        series = equivariant_series(graph, which)
        coeffs = [series.coefficient(k) for k in range(7)]
        print(f"  equivariant {which:8s} coefficients: {coeffs}")
    print("  relations in degrees 0, 1, 2:", relation_counts(graph))
    print()
