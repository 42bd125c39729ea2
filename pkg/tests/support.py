"""Shared helpers for the test suite: brute-force oracles and dense checks.

The oracles here deliberately avoid the engine's own code paths: lattice
membership is decided by bounded search, linear algebra by dense Fraction
elimination, so the sparse kernel is checked against something independent.
"""

import itertools
from fractions import Fraction


def brute_lattice_member(x, generators, bound=12):
    """Bounded search for integer coefficients writing x over the generators."""
    x = Fraction(x)
    gens = [Fraction(g) for g in generators]
    for combo in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
        if sum((c * g for c, g in zip(combo, gens)), Fraction(0)) == x:
            return True
    return False


def dense_rank(rows, ncols):
    """Rank by dense Fraction Gaussian elimination."""
    mat = [[Fraction(*row.get(j, (0, 1))) for j in range(ncols)] for row in rows]
    rank = 0
    row_i = 0
    for col in range(ncols):
        piv = None
        for i in range(row_i, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[row_i], mat[piv] = mat[piv], mat[row_i]
        pv = mat[row_i][col]
        mat[row_i] = [v / pv for v in mat[row_i]]
        for i in range(len(mat)):
            if i != row_i and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[row_i])]
        row_i += 1
        rank += 1
    return rank


def row_dot(row, vec):
    """Exact dot product of a sparse row with a sparse vector, as a Fraction."""
    acc = Fraction(0)
    for col, coeff in row.items():
        if col in vec:
            acc += Fraction(*coeff) * Fraction(*vec[col])
    return acc
