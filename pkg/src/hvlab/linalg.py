"""Exact sparse linear algebra over the rationals.

Thin layer over the kernel's reduced row echelon form.  Vectors and rows
are sparse dicts mapping column index to a normalized ``(num, den)`` scalar.

Affine systems are encoded homogeneously: an equation ``sum a_i x_i = b``
becomes a row with entries ``{i: a_i}`` plus ``{const_col: -b}`` where
``const_col`` is one past the last unknown.  A pivot at the constant column
after reduction is an inconsistency certificate.  Optional marker columns
beyond the constant column tag each input equation so the certificate can
name the combination of equations that contradicts itself.

Deterministic conventions, so identical inputs give bit-identical output:
unknown columns are scanned in ascending order, the first nonzero pivot is
taken, and free variables are set to zero.
"""

from dataclasses import dataclass

from . import kernel

ZERO = kernel.ZERO
ONE = kernel.ONE


def rref(rows):
    return kernel.rref(rows)


def rank(rows):
    pivots, _ = kernel.rref(rows)
    return len(pivots)


def nullspace(rows, ncols):
    """Deterministic basis of the kernel of the rows, one vector per free column."""
    pivots, piv = kernel.rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: ONE}
        for pc in pivots:
            v = piv[pc].get(free)
            if v is not None:
                vec[pc] = kernel.rq_neg(v)
        basis.append(vec)
    return basis


@dataclass
class AffineSolution:
    """Particular solution (free variables zero) or an inconsistency row."""

    solution: dict | None
    certificate_row: dict | None
    const_col: int

    @property
    def feasible(self):
        return self.solution is not None

    def certificate(self, marker_labels=None):
        """Render the inconsistent reduced row: constant plus equation markers."""
        if self.certificate_row is None:
            return None
        row = self.certificate_row
        markers = []
        if marker_labels is not None:
            for col, coeff in sorted(row.items()):
                if col > self.const_col:
                    markers.append(
                        {
                            "equation": marker_labels[col - self.const_col - 1],
                            "coefficient": _fmt(coeff),
                        }
                    )
        return {
            "contradiction": f"0 = {_fmt(row[self.const_col])}",
            "combines": markers,
        }


def _fmt(c):
    n, d = c
    return str(n) if d == 1 else f"{n}/{d}"


def solve_affine(eq_rows, ncols, track=False):
    """Solve a sparse affine system exactly.

    ``eq_rows`` is a list of ``(coeffs, rhs)`` pairs where ``coeffs`` maps
    unknown column -> scalar and ``rhs`` is a scalar.  With ``track=True``
    every equation gets a marker column so an infeasibility certificate can
    cite the equations involved.
    """
    const_col = ncols
    rows = []
    for i, (coeffs, rhs) in enumerate(eq_rows):
        row = dict(coeffs)
        if rhs != ZERO:
            row[const_col] = kernel.rq_neg(rhs)
        if track:
            row[const_col + 1 + i] = ONE
        if row:
            rows.append(row)
    pivots, piv = kernel.rref(rows)
    if const_col in piv:
        return AffineSolution(None, piv[const_col], const_col)
    sol = {}
    for pc in pivots:
        if pc >= const_col:
            continue
        d = piv[pc].get(const_col)
        if d is not None:
            sol[pc] = kernel.rq_neg(d)
    return AffineSolution(sol, None, const_col)


def span_basis(vectors):
    """Echelonized basis of the span; returns (pivots, pivot_rows)."""
    return kernel.rref(vectors)


def reduce_against(vec, pivots, piv):
    """Residue of a vector modulo an echelonized span (exact)."""
    r = dict(vec)
    for pc in pivots:
        f = r.get(pc)
        if f is None:
            continue
        for k, v in piv[pc].items():
            nv = kernel.rq_sub(r.get(k, ZERO), kernel.rq_mul(f, v))
            if nv == ZERO:
                r.pop(k, None)
            else:
                r[k] = nv
    return r


def in_span(vec, pivots, piv):
    return not reduce_against(vec, pivots, piv)
