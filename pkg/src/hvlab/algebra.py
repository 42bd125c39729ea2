"""The generalized Heisenberg-Virasoro algebra as a structure-constant engine.

Basis symbols are L(x) and I(x) for x in the index group, plus the central
symbols C_L, C_I, C_LI.  The defining relations are

    [L_x, L_y] = (y - x) L_{x+y} + d_{x+y,0} (1/12)(x^3 - x) C_L
    [I_x, I_y] = y d_{x+y,0} C_I
    [L_x, I_y] = y I_{x+y} + d_{x+y,0} m(x) C
    [anything, C_L] = [anything, C_I] = [anything, C_LI] = 0

where the mixed central term m(x) C is configurable: the default convention
attaches (x^2 - x) to C_L (config value ``paper``); the common literature
normalization attaches (x^2 + x) to C_LI (config value ``standard``).
A third value ``cubic`` attaches (x^3 - x) to C_L, which violates the
cocycle condition on purpose so the axiom verifier's failure path can be
exercised; it is not accepted in run configuration files.

The algebra is graded by the index group; L(x), I(x) sit in grade x and the
central symbols in grade 0.  The center is spanned by I(0), C_L, C_I, C_LI,
and the ``centerless`` variant is the quotient by it: there C_L, C_I, C_LI
and I(0) are not constructible and every central output of a bracket is
dropped.

Elements are unbounded finite-support rational combinations; windows bound
only the quantifier ranges of verifiers, never arithmetic, since brackets of
window elements legitimately leave the window.
"""

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from . import gamma, kernel
from .errors import ConfigMismatchError, UsageError, VariantError
from .gamma import GroupSpec
from .rationals import as_rational, format_rational
from .reports import AxiomReport

KIND_L = kernel.KIND_L
KIND_I = kernel.KIND_I
KIND_CL = kernel.KIND_CL
KIND_CI = kernel.KIND_CI
KIND_CLI = kernel.KIND_CLI

_CENTRAL_LABELS = {KIND_CL: "C_L", KIND_CI: "C_I", KIND_CLI: "C_LI"}
_COCYCLE_CODES = {
    "paper": kernel.MIXED_QUADRATIC_CL,
    "standard": kernel.MIXED_QUADRATIC_CLI,
    "cubic": kernel.MIXED_CUBIC_CL,
}


def sym_index(sym):
    """Index of a basis symbol as a Fraction (0 for central symbols)."""
    return Fraction(sym[1], sym[2])


def sym_grade(sym):
    """Grade of a basis symbol as a Fraction."""
    if sym[0] <= KIND_I:
        return Fraction(sym[1], sym[2])
    return Fraction(0)


def sym_label(sym):
    """Printable form of a basis symbol, e.g. ``L(1)``, ``I(-1/2)``, ``C_L``."""
    kind = sym[0]
    if kind <= KIND_I:
        letter = "L" if kind == KIND_L else "I"
        return f"{letter}({format_rational(Fraction(sym[1], sym[2]))})"
    return _CENTRAL_LABELS[kind]


def sym_sort_key(sym):
    """Canonical total order on symbols: grade value, then kind L<I<C_L<C_I<C_LI."""
    return (sym_grade(sym), sym[0])


def sym_outward_key(sym):
    """Probe order: distance from grade zero first, so witnesses radiate outward."""
    g = sym_grade(sym)
    return (abs(g), g, sym[0])


def is_central_sym(sym):
    """True for the spanning symbols of the center: I(0), C_L, C_I, C_LI."""
    return sym[0] > KIND_I or (sym[0] == KIND_I and sym[1] == 0)


@dataclass(frozen=True)
class AlgebraConfig:
    """Which algebra we are in: index group, variant, mixed-cocycle convention."""

    group: GroupSpec
    variant: str = "full"
    mixed_cocycle: str = "paper"

    def __post_init__(self):
        if self.variant not in ("full", "centerless"):
            raise UsageError(f"unknown variant {self.variant!r}")
        if self.mixed_cocycle not in _COCYCLE_CODES:
            raise UsageError(f"unknown mixed_cocycle {self.mixed_cocycle!r}")

    @property
    def centerless(self):
        return self.variant == "centerless"

    @property
    def cocycle_code(self):
        return _COCYCLE_CODES[self.mixed_cocycle]

    def centerless_version(self):
        return dataclasses.replace(self, variant="centerless")

    def full_version(self):
        return dataclasses.replace(self, variant="full")

    def zero(self):
        return AlgebraElement(self, {})

    def _indexed(self, kind, index):
        q = as_rational(index)
        if not gamma.member(q, self.group):
            from .errors import IndexNotInGroupError  # noqa: PLC0415

            raise IndexNotInGroupError(format_rational(q), str(self.group))
        if self.centerless and kind == KIND_I and q == 0:
            raise VariantError("I(0) is central and not constructible in the centerless variant")
        return AlgebraElement(self, {(kind, q.numerator, q.denominator): kernel.ONE})

    def L(self, index):
        return self._indexed(KIND_L, index)

    def I(self, index):  # noqa: E743 - I is the standard generator name
        return self._indexed(KIND_I, index)

    def _central(self, sym):
        if self.centerless:
            raise VariantError(
                f"{_CENTRAL_LABELS[sym[0]]} is not constructible in the centerless variant"
            )
        return AlgebraElement(self, {sym: kernel.ONE})

    def C_L(self):
        return self._central(kernel.SYM_CL)

    def C_I(self):
        return self._central(kernel.SYM_CI)

    def C_LI(self):
        return self._central(kernel.SYM_CLI)

    def basis_element(self, sym):
        """Element wrapping a raw symbol tuple (validated against the variant)."""
        if sym[0] <= KIND_I:
            return self._indexed(sym[0], Fraction(sym[1], sym[2]))
        return self._central(sym)


def require_same_config(a, b):
    if a.config != b.config:
        raise ConfigMismatchError("values belong to differently configured algebras")


class AlgebraElement:
    """Finite-support rational combination of basis symbols."""

    __slots__ = ("config", "_terms")

    def __init__(self, config, terms):
        self.config = config
        self._terms = terms

    # -- inspection ----------------------------------------------------

    def items(self):
        """Terms as (symbol, Fraction) pairs in canonical order."""
        return [
            (sym, Fraction(c[0], c[1]))
            for sym, c in sorted(self._terms.items(), key=lambda kv: sym_sort_key(kv[0]))
        ]

    def coefficient(self, sym):
        c = self._terms.get(sym, kernel.ZERO)
        return Fraction(c[0], c[1])

    def support(self):
        return sorted(self._terms, key=sym_sort_key)

    def is_zero(self):
        return not self._terms

    def grade(self):
        """The common grade of all terms, or None if mixed (0 for the zero element)."""
        grades = {sym_grade(s) for s in self._terms}
        if not grades:
            return Fraction(0)
        if len(grades) == 1:
            return grades.pop()
        return None

    def is_central(self):
        return all(is_central_sym(s) for s in self._terms)

    # -- arithmetic ----------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.config == other.config and self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        require_same_config(self, other)
        return AlgebraElement(self.config, kernel.add_terms(self._terms, other._terms))

    def __sub__(self, other):
        require_same_config(self, other)
        out = dict(self._terms)
        kernel.add_scaled_into(out, other._terms, (-1, 1))
        return AlgebraElement(self.config, out)

    def __neg__(self):
        return AlgebraElement(self.config, {s: kernel.rq_neg(c) for s, c in self._terms.items()})

    def _scaled(self, scalar):
        q = as_rational(scalar)
        return AlgebraElement(
            self.config, kernel.scale_terms(self._terms, (q.numerator, q.denominator))
        )

    def __mul__(self, scalar):
        return self._scaled(scalar)

    __rmul__ = __mul__

    def __matmul__(self, other):
        from .tensors import tensor_product  # noqa: PLC0415

        return tensor_product(self, other)

    def bracket(self, other):
        return bracket(self, other)

    def __repr__(self):
        from .parser import format_value  # noqa: PLC0415

        return f"<AlgebraElement {format_value(self)}>"


def bracket(a, b):
    """The Lie bracket, extended bilinearly from the structure constants."""
    require_same_config(a, b)
    cfg = a.config
    return AlgebraElement(
        cfg, kernel.bracket_terms(a._terms, b._terms, cfg.cocycle_code, cfg.centerless)
    )


def grade_decompose(a):
    """Partition an element by grade; parts concatenate back to the element."""
    parts = {}
    for sym, c in a._terms.items():
        parts.setdefault(sym_grade(sym), {})[sym] = c
    return [
        (g, AlgebraElement(a.config, terms)) for g, terms in sorted(parts.items())
    ]


def quotient_centerless(a):
    """Image under the quotient by the center: drops C_L, C_I, C_LI and I(0)."""
    if a.config.centerless:
        raise VariantError("element already belongs to the centerless variant")
    kept = {s: c for s, c in a._terms.items() if not is_central_sym(s)}
    return AlgebraElement(a.config.centerless_version(), kept)


def window_symbols(config, radius, order="canonical"):
    """Basis symbols with index in the window, in a deterministic order.

    ``canonical`` sorts by (grade, kind); ``outward`` radiates from grade 0,
    which is the order verifiers scan so first witnesses sit near the center.
    """
    syms = []
    for idx in gamma.window(config.group, radius):
        syms.append((KIND_L, idx.numerator, idx.denominator))
        if not (config.centerless and idx == 0):
            syms.append((KIND_I, idx.numerator, idx.denominator))
    if not config.centerless:
        syms.extend([kernel.SYM_CL, kernel.SYM_CI, kernel.SYM_CLI])
    key = sym_sort_key if order == "canonical" else sym_outward_key
    return sorted(syms, key=key)


def verify_algebra_axioms(config, radius):
    """Exhaustive skew-symmetry and Jacobi check over a window.

    Scans every ordered pair for [x,y] + [y,x] = 0 and every ordered triple
    for [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0, in outward order.  Violations
    are report content, not errors; the first one is returned with both
    sides formatted.
    """
    if radius < 0:
        raise UsageError("radius must be nonnegative")
    from .parser import format_value  # noqa: PLC0415

    cocycle = config.cocycle_code
    centerless = config.centerless
    syms = window_symbols(config, radius, order="outward")
    one = kernel.ONE

    pair_brackets = {}
    for a in syms:
        for b in syms:
            pair_brackets[(a, b)] = dict(kernel.bracket_basis(a, b, cocycle, centerless))

    pairs_checked = 0
    for i, a in enumerate(syms):
        for b in syms[i:]:
            pairs_checked += 1
            total = kernel.add_terms(pair_brackets[(a, b)], pair_brackets[(b, a)])
            if total:
                return AxiomReport(
                    variant=config.variant,
                    window=radius,
                    status="fail",
                    failed_axiom="skew-symmetry",
                    witness={"pair": [sym_label(a), sym_label(b)]},
                    lhs=format_value(AlgebraElement(config, total)),
                    rhs="0",
                    pairs_checked=pairs_checked,
                    triples_checked=0,
                    mixed_cocycle=config.mixed_cocycle,
                )

    triples_checked = 0
    for a in syms:
        ea = {a: one}
        for b in syms:
            eb = {b: one}
            for c in syms:
                triples_checked += 1
                acc = kernel.bracket_terms(ea, pair_brackets[(b, c)], cocycle, centerless)
                kernel.add_scaled_into(
                    acc, kernel.bracket_terms(eb, pair_brackets[(c, a)], cocycle, centerless), one
                )
                kernel.add_scaled_into(
                    acc,
                    kernel.bracket_terms({c: one}, pair_brackets[(a, b)], cocycle, centerless),
                    one,
                )
                if acc:
                    return AxiomReport(
                        variant=config.variant,
                        window=radius,
                        status="fail",
                        failed_axiom="jacobi",
                        witness={"triple": [sym_label(a), sym_label(b), sym_label(c)]},
                        lhs=format_value(AlgebraElement(config, acc)),
                        rhs="0",
                        pairs_checked=pairs_checked,
                        triples_checked=triples_checked,
                        mixed_cocycle=config.mixed_cocycle,
                    )
    return AxiomReport(
        variant=config.variant,
        window=radius,
        status="pass",
        failed_axiom=None,
        witness=None,
        lhs=None,
        rhs=None,
        pairs_checked=pairs_checked,
        triples_checked=triples_checked,
        mixed_cocycle=config.mixed_cocycle,
    )
