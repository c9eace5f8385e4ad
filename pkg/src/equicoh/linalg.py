"""Exact Gaussian elimination over the rationals.

Small dense systems only; rows are lists of Fraction.  The nullspace basis
is returned in reduced row echelon form, which makes it the unique
canonical basis of the solution subspace for a fixed column order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Canonical (reduced echelon) basis of {v : rows . v = 0} in Q^ncols."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(v)
    canonical, _ = rref(basis)
    return canonical


def coordinates_in_span(
    basis: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]
) -> list[Fraction] | None:
    """Coordinates of ``vector`` in a reduced-echelon ``basis``, or None."""
    residual = [Fraction(x) for x in vector]
    coords = []
    for row in basis:
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is None:
            coords.append(Fraction(0))
            continue
        factor = residual[lead] / row[lead]
        coords.append(factor)
        if factor:
            residual = [x - factor * y for x, y in zip(residual, row)]
    if any(residual):
        return None
    return coords
