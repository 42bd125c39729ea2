"""Coboundary cobrackets, the Yang-Baxter defect, and the bialgebra axiom suite.

A cobracket table assigns a rank-2 tensor to every basis symbol.  Three
provenances are supported and compose under addition:

* ``from_r(r)``          -- the coboundary cobracket x -> x . r;
* ``from_sigma(l, C, e)``-- the central outer family
  L_x -> l I_x (x) C - e C (x) I_x for x != 0 (zero elsewhere), C central;
* ``explicit``           -- a finite table read from JSON.

The Yang-Baxter defect of r = sum a_i (x) b_i is computed entirely inside
the rank-3 tensor space via the closed commutator expansions

    c(r) = sum [a_i,a_j](x)b_i(x)b_j + a_i(x)[b_i,a_j](x)b_j
                + a_i(x)a_j(x)[b_i,b_j],

each bracket landing back in the algebra in exactly one slot, so no
enveloping algebra is ever materialized.  c(r) = 0 is the classical
Yang-Baxter equation; the modified equation asks only that every basis
symbol act as zero on c(r).

In the full variant the compatibility axiom and the decomposition solver
work modulo center-tensor-center: the central outer family satisfies its
defining identities only up to such terms, and every residual is
canonicalized by dropping fully central components before comparison.
The centerless variant has nothing to drop, so there the checks are
literally exact.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import kernel, linalg
from .algebra import (
    AlgebraElement,
    bracket,
    is_central_sym,
    require_same_config,
    sym_label,
    sym_sort_key,
    window_symbols,
)
from .errors import CoverageError, PreconditionError, UsageError, VariantError, VerificationError
from .rationals import as_rational, format_rational
from .reports import BialgebraReport, CheckReport, SolveReport
from .tensors import (
    Tensor2,
    Tensor3,
    cyclic_sum,
    diag_act2,
    diag_act3,
    element_of,
    is_antisymmetric,
    strip_fully_central,
    tensor_product,
    twist,
    wedge,
)


def delta_r(r, x):
    """The coboundary cobracket of r evaluated at x: simply x . r."""
    return diag_act2(x, r)


def cybe_defect(r):
    """Exact Yang-Baxter defect of a rank-2 tensor (r need not be antisymmetric)."""
    if r.rank != 2:
        raise UsageError("the Yang-Baxter defect takes a rank-2 tensor")
    cfg = r.config
    cocycle = cfg.cocycle_code
    centerless = cfg.centerless
    terms = list(r._terms.items())
    out = {}

    def put(key, c):
        nv = kernel.rq_add(out.get(key, kernel.ZERO), c)
        if nv == kernel.ZERO:
            out.pop(key, None)
        else:
            out[key] = nv

    for (a1, b1), c1 in terms:
        for (a2, b2), c2 in terms:
            f = kernel.rq_mul(c1, c2)
            for s, k in kernel.bracket_basis(a1, a2, cocycle, centerless):
                put((s, b1, b2), kernel.rq_mul(f, k))
            for s, k in kernel.bracket_basis(b1, a2, cocycle, centerless):
                put((a1, s, b2), kernel.rq_mul(f, k))
            for s, k in kernel.bracket_basis(b1, b2, cocycle, centerless):
                put((a1, a2, s), kernel.rq_mul(f, k))
    return Tensor3(cfg, out)


def mybe_check(r, probe_radius):
    """Scan window probes for a basis symbol acting nonzero on c(r).

    Passing means r satisfies the modified Yang-Baxter equation as far as
    the probe window can see.  r must be antisymmetric.
    """
    from .parser import format_value  # noqa: PLC0415

    if not is_antisymmetric(r):
        raise PreconditionError("mybe_check requires an antisymmetric tensor")
    cfg = r.config
    defect = cybe_defect(r)
    probes = window_symbols(cfg, probe_radius, order="outward")
    for sym in probes:
        action = diag_act3(element_of(cfg, sym), defect)
        if action:
            return CheckReport(
                check="mybe",
                variant=cfg.variant,
                window=probe_radius,
                status="fail",
                witness={"symbol": sym_label(sym)},
                lhs=format_value(action),
                rhs="0",
                extra={"probes": len(probes)},
            )
    return CheckReport(
        check="mybe",
        variant=cfg.variant,
        window=probe_radius,
        status="pass",
        extra={"probes": len(probes)},
    )


def drinfeld_sides(r, x):
    """Both sides of the coboundary co-Jacobi identity: cyclic sum vs x . c(r)."""
    if not is_antisymmetric(r):
        raise PreconditionError("the identity requires an antisymmetric tensor")
    require_same_config(r, x)
    cfg = r.config
    dx = delta_r(r, x)
    inner = {}
    for (sa, sb), c in dx._terms.items():
        db = delta_r(r, element_of(cfg, sb))
        for (p, q), d in db._terms.items():
            key = (sa, p, q)
            nv = kernel.rq_add(inner.get(key, kernel.ZERO), kernel.rq_mul(c, d))
            if nv == kernel.ZERO:
                inner.pop(key, None)
            else:
                inner[key] = nv
    lhs = cyclic_sum(Tensor3(cfg, inner))
    rhs = diag_act3(x, cybe_defect(r))
    return lhs, rhs


def drinfeld_identity_check(r, x):
    """Exact equality of the two sides of the coboundary co-Jacobi identity."""
    lhs, rhs = drinfeld_sides(r, x)
    return lhs == rhs


def triangular_pair(a, b):
    """Antisymmetric solution of the classical Yang-Baxter equation from [a,b] = b."""
    from .parser import format_value  # noqa: PLC0415

    require_same_config(a, b)
    br = bracket(a, b)
    if br != b:
        raise PreconditionError(
            f"triangular pair needs [a,b] = b; got [a,b] = {format_value(br)}"
        )
    r = wedge(a, b)
    defect = cybe_defect(r)
    if defect:
        raise VerificationError(
            "classical Yang-Baxter defect unexpectedly nonzero",
            lhs=format_value(defect),
            rhs="0",
        )
    return r


# ---------------------------------------------------------------------------
# cobracket tables


class CobracketTable:
    """Assignment of a rank-2 tensor to every basis symbol.

    Coboundary and central-outer tables evaluate lazily at any symbol;
    explicit tables fail loudly outside their window.  ``window_radius``
    records the window a table is meant to cover (used for serialization
    and as the default probe window of the decomposition solver).
    """

    def __init__(self, config, window_radius, provenance):
        self.config = config
        self.window_radius = window_radius
        self.provenance = provenance

    @classmethod
    def from_r(cls, r, window_radius=None):
        if not is_antisymmetric(r):
            raise PreconditionError("coboundary tables require an antisymmetric tensor")
        return cls(r.config, window_radius, ("r", r))

    @classmethod
    def from_sigma(cls, lam, C, eta=None, window_radius=None):
        cfg = C.config
        if cfg.centerless:
            raise VariantError("the central outer family vanishes in the centerless variant")
        if not C.is_central():
            raise PreconditionError("the outer family needs a central element")
        lam = as_rational(lam)
        eta = lam if eta is None else as_rational(eta)
        return cls(cfg, window_radius, ("sigma", lam, C, eta))

    @classmethod
    def explicit(cls, config, assignments, window_radius):
        return cls(config, window_radius, ("explicit", dict(assignments)))

    def __add__(self, other):
        if not isinstance(other, CobracketTable):
            return NotImplemented
        if self.config != other.config:
            raise UsageError("cannot add tables over different configurations")
        radii = [w for w in (self.window_radius, other.window_radius) if w is not None]
        return CobracketTable(self.config, min(radii) if radii else None, ("sum", self, other))

    def value(self, sym):
        """The assigned tensor at a raw basis-symbol tuple."""
        tag = self.provenance[0]
        if tag == "r":
            return delta_r(self.provenance[1], element_of(self.config, sym))
        if tag == "sigma":
            _, lam, C, eta = self.provenance
            return _sigma_value(self.config, lam, C, eta, sym)
        if tag == "explicit":
            table = self.provenance[1]
            if sym not in table:
                raise CoverageError(sym_label(sym), "explicit cobracket table")
            return table[sym]
        a, b = self.provenance[1], self.provenance[2]
        return a.value(sym) + b.value(sym)

    def value_of(self, element):
        """Linear extension of the table to an arbitrary element."""
        out = Tensor2.zero(self.config)
        for sym, coeff in element.items():
            out = out + self.value(sym) * coeff
        return out

    def symbols(self, radius=None):
        radius = self.window_radius if radius is None else radius
        if radius is None:
            raise UsageError("table has no window radius; pass one explicitly")
        return window_symbols(self.config, radius, order="canonical")

    def to_json(self, radius=None):
        from .parser import format_value  # noqa: PLC0415
        from .runconfig import algebra_config_to_dict  # noqa: PLC0415

        syms = self.symbols(radius)
        radius = self.window_radius if radius is None else radius
        return {
            "config": algebra_config_to_dict(self.config),
            "window": radius,
            "assignments": {sym_label(s): format_value(self.value(s)) for s in syms},
        }

    @classmethod
    def from_json(cls, data):
        from .parser import parse_symbol_label, parse_tensor  # noqa: PLC0415
        from .runconfig import algebra_config_from_dict  # noqa: PLC0415

        config = algebra_config_from_dict(data["config"])
        assignments = {}
        for label, expr in data["assignments"].items():
            sym = parse_symbol_label(label, config)
            assignments[sym] = parse_tensor(expr, config, 2)
        return cls.explicit(config, assignments, data.get("window"))


def _sigma_value(config, lam, C, eta, sym):
    if sym[0] != kernel.KIND_L or (sym[1] == 0):
        return Tensor2.zero(config)
    ix = element_of(config, (kernel.KIND_I, sym[1], sym[2]))
    left = tensor_product(ix, C) * lam
    right = tensor_product(C, ix) * eta
    return left - right


def sigma_cobracket(lam, C, eta=None, window_radius=None):
    """The central outer cobracket: L_x -> lam I_x (x) C - eta C (x) I_x.

    ``eta`` defaults to ``lam``, the antisymmetric combination; that is the
    only choice that makes the table a genuine cobracket (antisymmetry of
    values forces lam = eta).
    """
    return CobracketTable.from_sigma(lam, C, eta, window_radius)


def sigma_nilpotence_defect(table, sym):
    """(1 + cyclic + cyclic^2)(1 (x) table) table at a basis symbol; exact."""
    cfg = table.config
    ds = table.value(sym)
    inner = {}
    for (sa, sb), c in ds._terms.items():
        db = table.value(sb)
        for (p, q), d in db._terms.items():
            key = (sa, p, q)
            nv = kernel.rq_add(inner.get(key, kernel.ZERO), kernel.rq_mul(c, d))
            if nv == kernel.ZERO:
                inner.pop(key, None)
            else:
                inner[key] = nv
    return cyclic_sum(Tensor3(cfg, inner))


def bialgebra_axiom_check(table, radius):
    """The three cobracket axioms over a window, with first witnesses.

    (a) every value is antisymmetric; (b) the cyclic co-Jacobi sum vanishes,
    the inner cobracket extended by the table; (c) compatibility
    table([x,y]) = x . table(y) - y . table(x), compared modulo fully
    central terms in the full variant.  Explicit tables must cover one step
    beyond the window because compatibility consumes brackets.
    """
    from .parser import format_value  # noqa: PLC0415

    cfg = table.config
    syms = window_symbols(cfg, radius, order="outward")

    anti = CheckReport("antisymmetry", cfg.variant, radius, "pass")
    for s in syms:
        t = table.value(s)
        defect = twist(t) + t
        if defect:
            anti = CheckReport(
                "antisymmetry", cfg.variant, radius, "fail",
                witness={"symbol": sym_label(s)},
                lhs=format_value(defect), rhs="0",
            )
            break

    cojac = CheckReport("co-jacobi", cfg.variant, radius, "pass")
    for s in syms:
        defect = sigma_nilpotence_defect(table, s)
        if defect:
            cojac = CheckReport(
                "co-jacobi", cfg.variant, radius, "fail",
                witness={"symbol": sym_label(s)},
                lhs=format_value(defect), rhs="0",
            )
            break

    compat = CheckReport("compatibility", cfg.variant, radius, "pass")
    done = False
    for i, x in enumerate(syms):
        if done:
            break
        ex = element_of(cfg, x)
        for y in syms[i + 1 :]:
            ey = element_of(cfg, y)
            lhs = table.value_of(bracket(ex, ey))
            rhs = diag_act2(ex, table.value(y)) - diag_act2(ey, table.value(x))
            residual = lhs - rhs
            if not cfg.centerless:
                residual = strip_fully_central(residual)
            if residual:
                compat = CheckReport(
                    "compatibility", cfg.variant, radius, "fail",
                    witness={"pair": [sym_label(x), sym_label(y)]},
                    lhs=format_value(lhs), rhs=format_value(rhs),
                )
                done = True
                break

    return BialgebraReport(cfg.variant, radius, anti, cojac, compat)


# ---------------------------------------------------------------------------
# decomposition


_SIGMA_SIDES = ("lambda", "eta")


def _central_basis(config):
    return [
        (kernel.KIND_I, 0, 1),
        kernel.SYM_CL,
        kernel.SYM_CI,
        kernel.SYM_CLI,
    ] if not config.centerless else []


@dataclass
class DecomposeResult:
    """Outcome of splitting a cobracket table into x.r plus the outer family."""

    feasible: bool
    r: Tensor2 | None
    sigma: dict | None  # {"lambda": {label: Fraction}, "eta": {label: Fraction}}
    certificate: dict | None
    support_radius: int
    probe_radius: int
    variant: str

    def sigma_coefficient(self, side, label):
        return self.sigma[side].get(label, Fraction(0)) if self.sigma else Fraction(0)

    def report(self):
        from .parser import format_value  # noqa: PLC0415

        solution = None
        if self.feasible:
            solution = {
                "r": format_value(self.r),
                "sigma": {
                    side: {k: format_rational(v) for k, v in vals.items()}
                    for side, vals in self.sigma.items()
                },
            }
        return SolveReport(
            check="decompose",
            variant=self.variant,
            window=self.probe_radius,
            support_radius=self.support_radius,
            status="feasible" if self.feasible else "infeasible",
            solution=solution,
            certificate=self.certificate,
        )


def cobracket_decompose(table, support_radius, probe_radius=None):
    """Solve table(x) = x . r + sigma(x) for antisymmetric r and outer scalars.

    r is supported on window pairs of the given radius, modulo fully central
    pairs; sigma ranges over the full central outer family (a lambda and an
    eta coefficient per central basis element; none in the centerless
    variant).  The solve is exact; unknowns are ordered deterministically
    and free variables are set to zero.  Infeasibility yields a certificate
    naming the combination of equations that contradicts itself.

    The caller is expected to hand in a table that passes the bialgebra
    axioms on its window; handing in anything else simply makes
    infeasibility more likely, which is exactly what the certificate is for.
    """
    cfg = table.config
    if probe_radius is None:
        probe_radius = table.window_radius
    if probe_radius is None:
        raise UsageError("decompose needs a probe radius (table has no window)")

    syms = window_symbols(cfg, support_radius, order="canonical")
    pair_cols = []
    for i, p in enumerate(syms):
        for q in syms[i + 1 :]:
            if not cfg.centerless and is_central_sym(p) and is_central_sym(q):
                continue
            pair_cols.append((p, q))
    sigma_cols = [
        (side, c) for side in _SIGMA_SIDES for c in _central_basis(cfg)
    ]
    ncols = len(pair_cols) + len(sigma_cols)

    probes = window_symbols(cfg, probe_radius, order="canonical")
    eq_rows = []
    labels = []
    for s in probes:
        es = element_of(cfg, s)
        # target value at this probe, canonicalized
        target = table.value(s)
        if not cfg.centerless:
            target = strip_fully_central(target)
        component_rows = {}
        for col, (p, q) in enumerate(pair_cols):
            action = kernel.diag_act(
                es._terms, {(p, q): kernel.ONE, (q, p): (-1, 1)}, cfg.cocycle_code, cfg.centerless
            )
            for key, coeff in action.items():
                if not cfg.centerless and all(is_central_sym(t) for t in key):
                    continue
                component_rows.setdefault(key, {})[col] = coeff
        for j, (side, c) in enumerate(sigma_cols):
            col = len(pair_cols) + j
            if s[0] != kernel.KIND_L or s[1] == 0:
                continue
            ix = (kernel.KIND_I, s[1], s[2])
            key = (ix, c) if side == "lambda" else (c, ix)
            if all(is_central_sym(t) for t in key):
                continue
            sign = kernel.ONE if side == "lambda" else (-1, 1)
            component_rows.setdefault(key, {})[col] = sign
        keys = set(component_rows) | set(target._terms)
        for key in sorted(keys, key=lambda k: tuple(sym_sort_key(t) for t in k)):
            coeffs = component_rows.get(key, {})
            rhs = target._terms.get(key, kernel.ZERO)
            eq_rows.append((coeffs, rhs))
            labels.append(f"{sym_label(s)} @ ({'@'.join(sym_label(t) for t in key)})")

    sol = linalg.solve_affine(eq_rows, ncols, track=True)
    if not sol.feasible:
        return DecomposeResult(
            False, None, None, sol.certificate(labels), support_radius, probe_radius, cfg.variant
        )

    r_terms = {}
    for col, (p, q) in enumerate(pair_cols):
        coeff = sol.solution.get(col)
        if coeff:
            r_terms[(p, q)] = coeff
            r_terms[(q, p)] = kernel.rq_neg(coeff)
    sigma = {side: {} for side in _SIGMA_SIDES}
    for j, (side, c) in enumerate(sigma_cols):
        coeff = sol.solution.get(len(pair_cols) + j)
        if coeff:
            sigma[side][sym_label(c)] = Fraction(coeff[0], coeff[1])
    return DecomposeResult(
        True, Tensor2(cfg, r_terms), sigma, None, support_radius, probe_radius, cfg.variant
    )
