"""Kernel-level tests: scalar pairs, rref against a dense oracle, backend parity."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvlab import kernel
from hvlab.kernel import available_backends
from support import dense_rank, row_dot

scalars = st.tuples(st.integers(-30, 30), st.integers(1, 12)).map(lambda t: kernel.rq(*t))


@given(scalars, scalars)
def test_scalar_ops_match_fraction(a, b):
    fa, fb = Fraction(*a), Fraction(*b)
    assert Fraction(*kernel.rq_add(a, b)) == fa + fb
    assert Fraction(*kernel.rq_sub(a, b)) == fa - fb
    assert Fraction(*kernel.rq_mul(a, b)) == fa * fb
    if fb != 0:
        assert Fraction(*kernel.rq_div(a, b)) == fa / fb


@given(scalars)
def test_scalars_are_canonical(a):
    n, d = a
    assert d > 0
    from math import gcd

    assert n == 0 and d == 1 or gcd(abs(n), d) == 1


def test_rq_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        kernel.rq(1, 0)
    with pytest.raises(ZeroDivisionError):
        kernel.rq_div((1, 1), (0, 1))


def _random_rows(rng, ncols, nrows):
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < 0.45:
                n = rng.randint(-5, 5)
                if n:
                    row[j] = kernel.rq(n, rng.randint(1, 4))
        rows.append(row)
    return rows


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_rref_properties_against_dense_oracle(seed):
    rng = random.Random(seed)
    ncols = rng.randint(1, 9)
    rows = _random_rows(rng, ncols, rng.randint(1, 12))
    pivots, piv = kernel.rref(rows)
    # rank agrees with dense elimination
    assert len(pivots) == dense_rank(rows, ncols)
    # reduced rows: unit pivot, echelon (no entries before own pivot),
    # and no other pivot columns present
    pivset = set(pivots)
    for pc in pivots:
        row = piv[pc]
        assert row[pc] == kernel.ONE
        assert min(row) == pc
        assert all(k == pc or k not in pivset for k in row)
    # row space is preserved: every input row reduces to zero
    from hvlab import linalg

    for row in rows:
        assert not linalg.reduce_against(row, pivots, piv)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_nullspace_vectors_annihilate_rows(seed):
    from hvlab import linalg

    rng = random.Random(seed)
    ncols = rng.randint(1, 9)
    rows = _random_rows(rng, ncols, rng.randint(1, 12))
    basis = linalg.nullspace(rows, ncols)
    assert len(basis) == ncols - dense_rank(rows, ncols)
    for vec in basis:
        for row in rows:
            assert row_dot(row, vec) == 0


def test_bracket_basis_structure_constants():
    L, I = kernel.KIND_L, kernel.KIND_I
    out = dict(kernel.bracket_basis((L, -1, 1), (L, 1, 1), 0, 0))
    assert out == {(L, 0, 1): (2, 1)}
    out = dict(kernel.bracket_basis((L, -2, 1), (L, 2, 1), 0, 0))
    assert out == {(L, 0, 1): (4, 1), kernel.SYM_CL: (-1, 2)}
    out = dict(kernel.bracket_basis((I, 2, 1), (I, -2, 1), 0, 0))
    assert out == {kernel.SYM_CI: (-2, 1)}
    # centerless drops central outputs and I(0)
    out = dict(kernel.bracket_basis((L, -2, 1), (L, 2, 1), 0, 1))
    assert out == {(L, 0, 1): (4, 1)}
    out = dict(kernel.bracket_basis((L, 1, 1), (I, -1, 1), 0, 1))
    assert out == {}


def test_backend_parity_when_extension_present():
    backends = available_backends()
    if "c" not in backends:
        pytest.skip("compiled kernel not built")
    py, cx = backends["python"], backends["c"]
    rng = random.Random(20240809)
    L, I = kernel.KIND_L, kernel.KIND_I
    syms = [(k, n, d) for k in (L, I) for n in range(-3, 4) for d in (1, 2)] + [
        kernel.SYM_CL,
        kernel.SYM_CI,
        kernel.SYM_CLI,
    ]
    for _ in range(300):
        a = rng.choice(syms)
        b = rng.choice(syms)
        for cocycle in (0, 1, 2):
            for centerless in (0, 1):
                assert py.bracket_basis(a, b, cocycle, centerless) == cx.bracket_basis(
                    a, b, cocycle, centerless
                )
    for _ in range(50):
        ncols = rng.randint(1, 8)
        rows = _random_rows(rng, ncols, rng.randint(1, 10))
        assert py.rref(rows) == cx.rref(rows)
    for _ in range(100):
        ta = {rng.choice(syms): kernel.rq(rng.randint(-4, 4) or 1, rng.randint(1, 3))}
        tb = {rng.choice(syms): kernel.rq(rng.randint(-4, 4) or 1, rng.randint(1, 3))}
        assert py.bracket_terms(ta, tb, 0, 0) == cx.bracket_terms(ta, tb, 0, 0)
        key = (rng.choice(syms), rng.choice(syms))
        t2 = {key: kernel.ONE}
        assert py.diag_act(ta, t2, 0, 0) == cx.diag_act(ta, t2, 0, 0)
