"""Equivariant Euler classes, the localization sum, and membership tests.

A class on the fixed set extends to a global equivariant class exactly
when it passes four exact checks: equal values in degree 0, matched
surface classes in degree 1, a vanishing residue in degree 2, and a
pole-free localization sum in all degrees.  The localization sum pairs
each restriction with the inverse Euler class of its normal bundle, so we
start by inspecting those.
"""

from fractions import Fraction

from equicoh import (
    abbv_degree2_functional,
    check_membership,
    class_from_vector,
    degree_slots,
    euler_class,
    inverse_euler,
    laurent_mul,
    localize,
    parse_graph,
    unit_class,
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


def laurent_text(lau):
    terms = [f"{lau.coefficient(p)} u^{p}" for p in sorted(lau.terms)]
    return " + ".join(terms) if terms else "0"


print("Euler classes and their inverses:")
for v in graph.isolated:
    e = euler_class(graph, v.id)
    inv = inverse_euler(graph, v.id)
    unit = laurent_mul(e.laurent, inv)
    print(f"  {v.id}: e = {laurent_text(e.laurent)},  1/e = {laurent_text(inv)},"
          f"  product = {laurent_text(unit)}")
print()

# Localizing the degree-2 indicator of one fixed point picks out 1/(b1 b2).
print("localization of each degree-2 unit class:")
for slot in degree_slots(graph, 2):
    total = localize(graph, unit_class(graph, 2, slot))
    print(f"  {slot.label}: {laurent_text(total)}")
print("degree-2 residue functional:", dict(abbv_degree2_functional(graph)))
print()

# The residue functional annihilates exactly the degree-2 restriction
# tuples that extend; (2, 1, 0) has residue 2*(1/2) + 1*(-1) = 0.
member = class_from_vector(graph, 2, [Fraction(2), Fraction(1), Fraction(0)])
decision = check_membership(graph, member)
print("(2, 1, 0) in degree 2:", "member" if decision.member else "not a member")

bump = class_from_vector(graph, 2, [Fraction(1), Fraction(0), Fraction(0)])
decision = check_membership(graph, bump)
print("(1, 0, 0) in degree 2:", "member" if decision.member else "not a member")
for violation in decision.violations:
    print(f"  {violation.kind}: {violation.detail}")
print("its localization:", laurent_text(localize(graph, bump)))
