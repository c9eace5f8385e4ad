"""Exact multivariate polynomial ring and the character-adapted basis."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicoh import InputError, MPoly
from equicoh.mpoly import (
    is_primitive,
    monomials_of_degree,
    poly_from_pairs,
    poly_to_pairs,
    unimodular_completion,
)

fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def polys(nvars: int, max_exp: int = 3):
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(exps, fractions, max_size=4).map(
        lambda terms: MPoly(nvars, terms)
    )


def test_monomials_of_degree_order_and_count():
    assert monomials_of_degree(2, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert monomials_of_degree(3, 0) == [(0, 0, 0)]
    assert monomials_of_degree(1, 5) == [(5,)]
    assert len(monomials_of_degree(3, 4)) == 15
    assert monomials_of_degree(2, -1) == []


def test_constructor_rejects_bad_exponents():
    with pytest.raises(InputError):
        MPoly(2, {(1,): Fraction(1)})
    with pytest.raises(InputError):
        MPoly(2, {(-1, 0): Fraction(1)})


def test_zero_terms_are_dropped():
    p = MPoly(2, {(1, 0): Fraction(1), (0, 1): Fraction(0)})
    assert list(p.terms) == [(1, 0)]
    assert not (p - p)


@given(polys(2), polys(2), polys(2))
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * MPoly.constant(2, 1) == p
    assert p + MPoly.zero(2) == p


@given(polys(2))
def test_scalar_coercion(p):
    assert p + 0 == p
    assert 1 * p == p
    assert 2 * p == p + p
    assert p - p == MPoly.zero(2)


def test_mixed_variable_counts_rejected():
    with pytest.raises(InputError):
        MPoly.variable(2, 0) + MPoly.variable(3, 0)


@given(polys(2), st.permutations(range(2)))
def test_substitute_linear_permutation(p, perm):
    matrix = [[1 if j == perm[i] else 0 for j in range(2)] for i in range(2)]
    q = p.substitute_linear(matrix)
    # every transposition of two variables is an involution
    assert q.substitute_linear(matrix) == p
    point = (Fraction(2), Fraction(-3))
    assert q.evaluate(point) == p.evaluate(tuple(point[perm[i]] for i in range(2)))


small_matrix = st.lists(
    st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2
)


@given(polys(2), small_matrix, small_matrix)
def test_substitute_linear_composes(p, m, n):
    composed = [
        [sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert p.substitute_linear(m).substitute_linear(n) == p.substitute_linear(composed)


@given(polys(3))
def test_split_leading_reconstructs(p):
    parts = p.split_leading()
    point = (Fraction(2), Fraction(3), Fraction(-1, 2))
    total = sum(
        (point[0] ** d * q.evaluate(point[1:]) for d, q in parts.items()),
        start=Fraction(0),
    )
    assert total == p.evaluate(point)


def test_is_primitive():
    assert is_primitive((1,))
    assert is_primitive((2, 3))
    assert is_primitive((0, -1, 5))
    assert not is_primitive((2, 4))
    assert not is_primitive((0, 0))


def _det(matrix) -> Fraction:
    mat = [[Fraction(x) for x in row] for row in matrix]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                factor = mat[i][c] * inv
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[c])]
    return det


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(
        lambda v: is_primitive(v)
    )
)
def test_unimodular_completion(lam):
    V = unimodular_completion(lam)
    r = len(lam)
    image = [sum(lam[i] * V[i][j] for i in range(r)) for j in range(r)]
    assert image == [1] + [0] * (r - 1)
    assert abs(_det(V)) == 1


def test_unimodular_completion_rejects_imprimitive():
    with pytest.raises(InputError):
        unimodular_completion((2, 4))
    with pytest.raises(InputError):
        unimodular_completion(())


@given(polys(2))
def test_pairs_round_trip(p):
    pairs = poly_to_pairs(p)
    assert poly_from_pairs(pairs, 2, Fraction) == p


def test_pairs_reject_bad_shapes():
    with pytest.raises(InputError):
        poly_from_pairs([[[0, 0]]], 2, Fraction)
    with pytest.raises(InputError):
        poly_from_pairs([[[0], "1"]], 2, Fraction)
