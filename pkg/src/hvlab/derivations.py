"""Derivations into the tensor square, at window scale.

A derivation table assigns a rank-2 tensor to every basis symbol in a
window; the derivation identity D([x,y]) = x . D(y) - y . D(x) is checked
on pairs whose bracket stays inside the tabled region, so window boundaries
never manufacture spurious constraints.  In the full variant all residuals
and solver unknowns live modulo center-tensor-center, the ambient quotient
in which the central outer family is actually a derivation.

The lab provides:

* ``inner_derivation(u, radius)`` -- the table x -> x . u;
* ``homogeneous_split`` -- the grade decomposition of a table;
* ``homogeneous_inner_representative`` -- for a homogeneous table of
  nonzero degree a, the constructive inner representative u = a^{-1} D(L_0),
  verified against the whole table via the degree-shift identity;
* ``solve_inner`` -- an exact solve for a preimage under u -> u_inn within
  a stated support window, with an infeasibility certificate otherwise
  (a window-relative statement: global outerness is not a finite solver's
  to prove);
* ``lambda_outer_derivation`` -- the central outer family and its mirror;
* ``common_kernel`` -- exact basis of the simultaneous kernel of window
  probes on a span of tensors;
* ``h1_probe`` -- exact dimensions of the space of degree-homogeneous
  derivation tables and of its inner subspace on a window, with coset
  representatives.  The reported numbers are window statistics.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernel, linalg
from .algebra import (
    is_central_sym,
    require_same_config,
    sym_grade,
    sym_label,
    sym_sort_key,
    window_symbols,
)
from .errors import (
    CoverageError,
    PreconditionError,
    UsageError,
    VariantError,
    VerificationError,
)
from .rationals import as_rational
from .reports import CheckReport, H1Report, KernelCertificate, SolveReport
from .tensors import Tensor2, diag_act2, element_of, strip_fully_central

# ---------------------------------------------------------------------------
# tables


class DerivationTable:
    """Finite assignment of rank-2 tensors to basis symbols.

    ``degree`` is set when the table is homogeneous: every value then has
    grade degree + grade(symbol).  The invariant is validated on
    construction.
    """

    def __init__(self, config, assignments, degree=None, window_radius=None):
        self.config = config
        self.assignments = dict(assignments)
        self.degree = None if degree is None else as_rational(degree)
        self.window_radius = window_radius
        if self.degree is not None:
            for sym, value in self.assignments.items():
                g = value.grade()
                if value and g != self.degree + sym_grade(sym):
                    raise UsageError(
                        f"table is not homogeneous of degree {self.degree} at {sym_label(sym)}"
                    )

    def value(self, sym):
        if sym not in self.assignments:
            raise CoverageError(sym_label(sym), "derivation table")
        return self.assignments[sym]

    def value_of(self, element):
        out = Tensor2.zero(self.config)
        for sym, coeff in element.items():
            out = out + self.value(sym) * coeff
        return out

    def symbols(self):
        return sorted(self.assignments, key=sym_sort_key)

    def is_zero(self):
        return all(not v for v in self.assignments.values())

    def __add__(self, other):
        if not isinstance(other, DerivationTable):
            return NotImplemented
        if self.config != other.config:
            raise UsageError("cannot add tables over different configurations")
        syms = set(self.assignments) & set(other.assignments)
        merged = {s: self.assignments[s] + other.assignments[s] for s in syms}
        degree = self.degree if self.degree == other.degree else None
        radii = [w for w in (self.window_radius, other.window_radius) if w is not None]
        return DerivationTable(self.config, merged, degree, min(radii) if radii else None)

    def __mul__(self, scalar):
        return DerivationTable(
            self.config,
            {s: v * scalar for s, v in self.assignments.items()},
            self.degree,
            self.window_radius,
        )

    __rmul__ = __mul__

    def perturbed(self, sym, delta):
        """Copy with ``delta`` added at one symbol (degree no longer claimed)."""
        out = dict(self.assignments)
        out[sym] = out.get(sym, Tensor2.zero(self.config)) + delta
        return DerivationTable(self.config, out, None, self.window_radius)

    def to_json(self):
        from .parser import format_value  # noqa: PLC0415
        from .rationals import format_rational  # noqa: PLC0415

        return {
            "degree": None if self.degree is None else format_rational(self.degree),
            "window": self.window_radius,
            "assignments": {
                sym_label(s): format_value(self.assignments[s]) for s in self.symbols()
            },
        }

    @classmethod
    def from_json(cls, data, config):
        from .parser import parse_symbol_label, parse_tensor  # noqa: PLC0415

        assignments = {}
        for label, expr in data["assignments"].items():
            sym = parse_symbol_label(label, config)
            assignments[sym] = parse_tensor(expr, config, 2)
        degree = data.get("degree")
        return cls(config, assignments, degree, data.get("window"))


def inner_derivation(u, window_radius):
    """The inner table x -> x . u on a window; degree = grade(u) if homogeneous."""
    cfg = u.config
    assignments = {
        s: diag_act2(element_of(cfg, s), u)
        for s in window_symbols(cfg, window_radius, order="canonical")
    }
    return DerivationTable(cfg, assignments, u.grade(), window_radius)


def lambda_outer_derivation(lam, C, window_radius, mirrored=False):
    """The central outer family: L_x -> lam I_x (x) C for x != 0 (or its mirror).

    Zero on L_0, on every I_x and on the center; degree 0.  Requires a
    central C and the full variant.
    """
    cfg = C.config
    if cfg.centerless:
        raise VariantError("the outer family needs the center")
    if not C.is_central():
        raise PreconditionError("the outer family needs a central element")
    lam = as_rational(lam)
    from .tensors import tensor_product  # noqa: PLC0415

    assignments = {}
    for s in window_symbols(cfg, window_radius, order="canonical"):
        if s[0] == kernel.KIND_L and s[1] != 0:
            ix = element_of(cfg, (kernel.KIND_I, s[1], s[2]))
            value = tensor_product(C, ix) if mirrored else tensor_product(ix, C)
            assignments[s] = value * lam
        else:
            assignments[s] = Tensor2.zero(cfg)
    return DerivationTable(cfg, assignments, Fraction(0), window_radius)


# ---------------------------------------------------------------------------
# checks


def derivation_check(D, radius):
    """Verify the derivation identity on window pairs with tabled brackets."""
    from .parser import format_value  # noqa: PLC0415

    cfg = D.config
    syms = window_symbols(cfg, radius, order="outward")
    for s in syms:
        if s not in D.assignments:
            raise CoverageError(sym_label(s), f"derivation check at radius {radius}")
    pairs_checked = 0
    pairs_skipped = 0
    for i, x in enumerate(syms):
        ex = element_of(cfg, x)
        for y in syms[i + 1 :]:
            ey = element_of(cfg, y)
            bxy = kernel.bracket_basis(x, y, cfg.cocycle_code, cfg.centerless)
            if any(t not in D.assignments for t, _ in bxy):
                pairs_skipped += 1
                continue
            pairs_checked += 1
            lhs = Tensor2.zero(cfg)
            for t, c in bxy:
                lhs = lhs + D.value(t) * Fraction(c[0], c[1])
            rhs = diag_act2(ex, D.value(y)) - diag_act2(ey, D.value(x))
            residual = lhs - rhs
            if not cfg.centerless:
                residual = strip_fully_central(residual)
            if residual:
                return CheckReport(
                    check="derivation",
                    variant=cfg.variant,
                    window=radius,
                    status="fail",
                    witness={"pair": [sym_label(x), sym_label(y)]},
                    lhs=format_value(lhs),
                    rhs=format_value(rhs),
                    extra={"pairs_checked": pairs_checked, "pairs_skipped": pairs_skipped},
                )
    return CheckReport(
        check="derivation",
        variant=cfg.variant,
        window=radius,
        status="pass",
        extra={"pairs_checked": pairs_checked, "pairs_skipped": pairs_skipped},
    )


def homogeneous_split(D):
    """Split a table by degree: value grade minus source grade; parts re-sum to D."""
    parts = {}
    for sym, value in D.assignments.items():
        base = sym_grade(sym)
        for key, coeff in value._terms.items():
            deg = sum((sym_grade(t) for t in key), Fraction(0)) - base
            bucket = parts.setdefault(deg, {})
            tensor_terms = bucket.setdefault(sym, {})
            tensor_terms[key] = coeff
    out = {}
    for deg, by_sym in sorted(parts.items()):
        assignments = {
            sym: Tensor2(D.config, by_sym.get(sym, {})) for sym in D.assignments
        }
        out[deg] = DerivationTable(D.config, assignments, deg, D.window_radius)
    return out


def homogeneous_inner_representative(D, degree):
    """Constructive inner preimage of a homogeneous table of nonzero degree.

    Applying the table to [L_0, w] = grade(w) w shows that
    degree * D(w) = w . D(L_0) for every w, so u = degree^{-1} D(L_0)
    satisfies D = (x -> x . u); the identity is re-verified on every tabled
    symbol and a violation (a non-derivation input) is reported with its
    witness.
    """
    from .parser import format_value  # noqa: PLC0415

    degree = as_rational(degree)
    if degree == 0:
        raise PreconditionError("the constructive representative needs a nonzero degree")
    if D.degree is not None and D.degree != degree:
        raise PreconditionError(f"table is homogeneous of degree {D.degree}, not {degree}")
    cfg = D.config
    l0 = (kernel.KIND_L, 0, 1)
    u = D.value(l0) * (1 / degree)
    for sym in D.symbols():
        expected = diag_act2(element_of(cfg, sym), u)
        if D.value(sym) != expected:
            raise VerificationError(
                "table is not the inner derivation of its candidate representative",
                witness=sym_label(sym),
                lhs=format_value(D.value(sym)),
                rhs=format_value(expected),
            )
    return u


# ---------------------------------------------------------------------------
# solvers

def _pair_cols(config, radius):
    """Ordered value-pair coordinates: window pairs, fully central ones dropped."""
    syms = window_symbols(config, radius, order="canonical")
    cols = []
    for p in syms:
        for q in syms:
            if not config.centerless and is_central_sym(p) and is_central_sym(q):
                continue
            cols.append((p, q))
    return cols


def solve_inner(D, support_radius, probe_radius=None):
    """Exact solve for u with x . u = D(x) on the probes, u window-supported.

    Antisymmetry is not imposed on u.  Unknowns are the window pair
    coordinates modulo fully central pairs; equations are imposed
    componentwise on every pair the actions reach, including pairs outside
    the support window (there the unknowns must conspire to cancel, since
    the table value has nothing there).  Infeasibility certifies that the
    table is not inner within this support window against these probes.
    """
    cfg = D.config
    if probe_radius is not None:
        probes = window_symbols(cfg, probe_radius, order="canonical")
        for s in probes:
            if s not in D.assignments:
                raise CoverageError(sym_label(s), f"solve_inner probes at radius {probe_radius}")
    else:
        probes = D.symbols()

    cols = _pair_cols(cfg, support_radius)
    col_index = {pair: i for i, pair in enumerate(cols)}
    ncols = len(cols)

    eq_rows = []
    labels = []
    for s in probes:
        es = element_of(cfg, s)
        target = D.value(s)
        if not cfg.centerless:
            target = strip_fully_central(target)
        component_rows = {}
        for pair, col in col_index.items():
            action = kernel.diag_act(
                es._terms, {pair: kernel.ONE}, cfg.cocycle_code, cfg.centerless
            )
            for key, coeff in action.items():
                if not cfg.centerless and all(is_central_sym(t) for t in key):
                    continue
                component_rows.setdefault(key, {})[col] = coeff
        keys = set(component_rows) | set(target._terms)
        for key in sorted(keys, key=lambda k: tuple(sym_sort_key(t) for t in k)):
            eq_rows.append((component_rows.get(key, {}), target._terms.get(key, kernel.ZERO)))
            labels.append(f"{sym_label(s)} @ ({'@'.join(sym_label(t) for t in key)})")

    sol = linalg.solve_affine(eq_rows, ncols, track=True)
    if not sol.feasible:
        return InnerSolveResult(
            None, sol.certificate(labels), cfg.variant, support_radius,
            probe_radius if probe_radius is not None else D.window_radius,
        )
    terms = {}
    for col, coeff in sol.solution.items():
        if coeff != kernel.ZERO:
            terms[cols[col]] = coeff
    return InnerSolveResult(
        Tensor2(cfg, terms), None, cfg.variant, support_radius,
        probe_radius if probe_radius is not None else D.window_radius,
    )


@dataclass
class InnerSolveResult:
    u: Tensor2 | None
    certificate: dict | None
    variant: str
    support_radius: int
    probe_radius: int | None

    @property
    def feasible(self):
        return self.u is not None

    def report(self):
        from .parser import format_value  # noqa: PLC0415

        return SolveReport(
            check="solve-inner",
            variant=self.variant,
            window=self.probe_radius,
            support_radius=self.support_radius,
            status="feasible" if self.feasible else "infeasible",
            solution={"u": format_value(self.u)} if self.feasible else None,
            certificate=self.certificate,
        )


def common_kernel(probe_radius, span):
    """Exact basis of {c in span : x . c = 0 for all window probes x}."""
    from .parser import format_value  # noqa: PLC0415

    if not span:
        raise UsageError("common_kernel needs a nonempty span")
    cfg = span[0].config
    rank = span[0].rank
    for t in span:
        if t.config != cfg or t.rank != rank:
            raise UsageError("span tensors must share configuration and rank")
    vectors = [t for t in span if t]
    probes = window_symbols(cfg, probe_radius, order="canonical")
    if not vectors:
        return KernelCertificate(cfg.variant, probe_radius,
                                 [sym_label(s) for s in probes], [], [])

    rows = []
    for s in probes:
        es = element_of(cfg, s)
        component_rows = {}
        for j, v in enumerate(vectors):
            action = kernel.diag_act(es._terms, v._terms, cfg.cocycle_code, cfg.centerless)
            for key, coeff in action.items():
                component_rows.setdefault(key, {})[j] = coeff
        for key in sorted(component_rows, key=lambda k: tuple(sym_sort_key(t) for t in k)):
            rows.append(component_rows[key])
    basis = []
    for combo in linalg.nullspace(rows, len(vectors)):
        vec = type(vectors[0]).zero(cfg)
        for j, coeff in sorted(combo.items()):
            vec = vec + vectors[j] * Fraction(coeff[0], coeff[1])
        basis.append(vec)
    return KernelCertificate(
        cfg.variant,
        probe_radius,
        [sym_label(s) for s in probes],
        basis,
        [format_value(b) for b in basis],
    )


# ---------------------------------------------------------------------------
# the H^1 window probe


def h1_probe(config, radius, degree):
    """Exact window statistics for degree-homogeneous derivation tables.

    Ambient space: tables on the window symbols whose values are supported
    on window pairs (fully central pairs quotiented away in the full
    variant).  Constraints: the derivation identity on probe pairs one step
    inside the window whose bracket stays tabled, imposed on every
    component the actions reach -- components outside the representable
    pair support must cancel outright, which is exactly what makes the
    exact inner tables (and nothing looser) solutions.

    The inner subspace is the image of u -> (x -> x . u) over the u in the
    same pair support whose actions never escape it; its containment in the
    solution space is asserted, so quotient_dim = dim_derivations -
    dim_inner is an honest exact quantity for this window.
    """
    if radius < 2:
        raise UsageError("h1_probe needs radius >= 2")
    degree = as_rational(degree)
    cfg = config
    syms = window_symbols(cfg, radius, order="canonical")
    pairs = _pair_cols(cfg, radius)
    pair_set = set(pairs)

    pairs_by_grade = {}
    for p, q in pairs:
        pairs_by_grade.setdefault(sym_grade(p) + sym_grade(q), []).append((p, q))

    coords = []
    coord_index = {}
    for s in syms:
        for pair in pairs_by_grade.get(degree + sym_grade(s), []):
            coord_index[(s, pair)] = len(coords)
            coords.append((s, pair))
    ncols = len(coords)

    def action_components(x_sym, pair):
        return kernel.diag_act(
            {x_sym: kernel.ONE}, {pair: kernel.ONE}, cfg.cocycle_code, cfg.centerless
        )

    sym_set = set(syms)
    probes = window_symbols(cfg, radius - 1, order="canonical")
    rows = []
    for i, x in enumerate(probes):
        for y in probes[i + 1 :]:
            bxy = kernel.bracket_basis(x, y, cfg.cocycle_code, cfg.centerless)
            if any(t not in sym_set for t, _ in bxy):
                continue
            component_rows = {}

            def add(key, col, coeff, component_rows=component_rows):
                if not cfg.centerless and all(is_central_sym(t) for t in key):
                    return
                row = component_rows.setdefault(key, {})
                nv = kernel.rq_add(row.get(col, kernel.ZERO), coeff)
                if nv == kernel.ZERO:
                    row.pop(col, None)
                else:
                    row[col] = nv

            for t, c in bxy:
                for pair in pairs_by_grade.get(degree + sym_grade(t), []):
                    add(pair, coord_index[(t, pair)], c)
            for sign, src, act in (((-1, 1), y, x), (kernel.ONE, x, y)):
                for pair in pairs_by_grade.get(degree + sym_grade(src), []):
                    col = coord_index[(src, pair)]
                    for key, coeff in action_components(act, pair).items():
                        add(key, col, kernel.rq_mul(sign, coeff))
            for key in sorted(
                component_rows, key=lambda k: tuple(sym_sort_key(t) for t in k)
            ):
                row = component_rows[key]
                if row:
                    rows.append(row)

    solution_basis = linalg.nullspace(rows, ncols)

    # inner subspace: u in the same pair support, same degree, escape-free
    u_pairs = pairs_by_grade.get(degree, [])
    inner_vecs = []
    if u_pairs:
        escape_rows = {}
        images = []  # per u column: dict table-coord col -> coeff
        for j, pair in enumerate(u_pairs):
            image = {}
            for s in syms:
                for key, coeff in action_components(s, pair).items():
                    if not cfg.centerless and all(is_central_sym(t) for t in key):
                        continue
                    if key in pair_set:
                        image[coord_index[(s, key)]] = kernel.rq_add(
                            image.get(coord_index[(s, key)], kernel.ZERO), coeff
                        )
                        if image[coord_index[(s, key)]] == kernel.ZERO:
                            del image[coord_index[(s, key)]]
                    else:
                        row = escape_rows.setdefault((s, key), {})
                        nv = kernel.rq_add(row.get(j, kernel.ZERO), coeff)
                        if nv == kernel.ZERO:
                            row.pop(j, None)
                        else:
                            row[j] = nv
            images.append(image)
        admissible = linalg.nullspace(list(escape_rows.values()), len(u_pairs))
        for combo in admissible:
            vec = {}
            for j, c in combo.items():
                for col, coeff in images[j].items():
                    nv = kernel.rq_add(vec.get(col, kernel.ZERO), kernel.rq_mul(c, coeff))
                    if nv == kernel.ZERO:
                        vec.pop(col, None)
                    else:
                        vec[col] = nv
            if vec:
                inner_vecs.append(vec)

    inner_pivots, inner_piv = linalg.span_basis(inner_vecs)
    dim_inner = len(inner_pivots)
    dim_derivations = len(solution_basis)

    join_pivots, _ = linalg.span_basis(solution_basis + inner_vecs)
    if len(join_pivots) != dim_derivations:
        raise VerificationError(
            "inner tables escaped the solution space; window bookkeeping is broken"
        )

    residues = []
    for vec in solution_basis:
        res = linalg.reduce_against(vec, inner_pivots, inner_piv)
        if res:
            residues.append(res)
    rep_pivots, rep_rows = linalg.span_basis(residues)
    representatives = []
    for pc in rep_pivots:
        by_sym = {}
        for col, coeff in rep_rows[pc].items():
            s, pair = coords[col]
            by_sym.setdefault(s, {})[pair] = coeff
        table = DerivationTable(
            cfg,
            {s: Tensor2(cfg, by_sym.get(s, {})) for s in syms},
            degree,
            radius,
        )
        representatives.append(table)

    from .parser import format_value  # noqa: PLC0415
    from .rationals import format_rational  # noqa: PLC0415

    reps_json = [
        {
            sym_label(s): format_value(t.assignments[s])
            for s in t.symbols()
            if t.assignments[s]
        }
        for t in representatives
    ]
    report = H1Report(
        variant=cfg.variant,
        degree=format_rational(degree),
        radius=radius,
        inner_support_radius=radius,
        dim_derivations=dim_derivations,
        dim_inner=dim_inner,
        quotient_dim=dim_derivations - dim_inner,
        representatives=reps_json,
    )
    report.representative_tables = representatives
    return report
