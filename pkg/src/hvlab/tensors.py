"""Tensor squares and cubes of the algebra under the diagonal adjoint action.

Rank-2 and rank-3 tensors are finite-support rational combinations of
ordered pairs/triples of basis symbols.  The structure maps are the twist
t: a(x)b -> b(x)a, the cyclic map on triples, and the diagonal action
x . (a(x)b) = [x,a](x)b + a(x)[x,b] (slot-wise on triples).

Membership in the image of (1 - twist) is decided by the antisymmetry test
twist(t) == -t: over the rationals the two are equivalent because t/2 is a
preimage, so the test is exact and constant time per term.
"""

from fractions import Fraction

from . import kernel
from .algebra import (
    AlgebraElement,
    is_central_sym,
    require_same_config,
    sym_grade,
    sym_sort_key,
)
from .errors import UsageError
from .rationals import as_rational


class _Tensor:
    __slots__ = ("config", "_terms")
    rank = 0

    def __init__(self, config, terms):
        self.config = config
        self._terms = terms

    @classmethod
    def zero(cls, config):
        return cls(config, {})

    def items(self):
        """Terms as (symbol-tuple, Fraction) pairs in canonical order."""
        return [
            (key, Fraction(c[0], c[1]))
            for key, c in sorted(
                self._terms.items(), key=lambda kv: tuple(sym_sort_key(s) for s in kv[0])
            )
        ]

    def coefficient(self, key):
        c = self._terms.get(key, kernel.ZERO)
        return Fraction(c[0], c[1])

    def is_zero(self):
        return not self._terms

    def grades(self):
        """Set of term grades (sum of slot grades)."""
        return {sum((sym_grade(s) for s in key), Fraction(0)) for key in self._terms}

    def grade(self):
        """The common grade of all terms, or None if mixed (0 if empty)."""
        gs = self.grades()
        if not gs:
            return Fraction(0)
        if len(gs) == 1:
            return gs.pop()
        return None

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, _Tensor):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.config == other.config
            and self._terms == other._terms
        )

    __hash__ = None

    def __add__(self, other):
        self._require_like(other)
        return type(self)(self.config, kernel.add_terms(self._terms, other._terms))

    def __sub__(self, other):
        self._require_like(other)
        out = dict(self._terms)
        kernel.add_scaled_into(out, other._terms, (-1, 1))
        return type(self)(self.config, out)

    def __neg__(self):
        return type(self)(
            self.config, {k: kernel.rq_neg(c) for k, c in self._terms.items()}
        )

    def __mul__(self, scalar):
        q = as_rational(scalar)
        return type(self)(
            self.config, kernel.scale_terms(self._terms, (q.numerator, q.denominator))
        )

    __rmul__ = __mul__

    def _require_like(self, other):
        if not isinstance(other, _Tensor) or other.rank != self.rank:
            raise UsageError("tensor ranks do not match")
        require_same_config(self, other)

    def __matmul__(self, other):
        return tensor_product(self, other)

    def __repr__(self):
        from .parser import format_value  # noqa: PLC0415

        return f"<Tensor{self.rank} {format_value(self)}>"


class Tensor2(_Tensor):
    rank = 2


class Tensor3(_Tensor):
    rank = 3


def tensor_product(a, b):
    """Bilinear tensor product; total rank at most 3."""
    require_same_config(a, b)
    ra = getattr(a, "rank", 1)
    rb = getattr(b, "rank", 1)
    if ra + rb not in (2, 3):
        raise UsageError("tensor rank exceeds 3")
    out = {}
    for ka, ca in a._terms.items():
        ta = ka if isinstance(ka, tuple) and isinstance(ka[0], tuple) else (ka,)
        for kb, cb in b._terms.items():
            tb = kb if isinstance(kb, tuple) and isinstance(kb[0], tuple) else (kb,)
            c = kernel.rq_mul(ca, cb)
            key = ta + tb
            nv = kernel.rq_add(out.get(key, kernel.ZERO), c)
            if nv == kernel.ZERO:
                out.pop(key, None)
            else:
                out[key] = nv
    return (Tensor2 if ra + rb == 2 else Tensor3)(a.config, out)


def wedge(a, b):
    """a(x)b - b(x)a; always antisymmetric."""
    return tensor_product(a, b) - tensor_product(b, a)


def twist(t):
    """The twist a(x)b -> b(x)a extended linearly; an involution."""
    if t.rank != 2:
        raise UsageError("twist acts on rank-2 tensors")
    return Tensor2(t.config, {(b, a): c for (a, b), c in t._terms.items()})


def cyclic(t):
    """The cyclic map a(x)b(x)c -> b(x)c(x)a; cube is the identity."""
    if t.rank != 3:
        raise UsageError("cyclic acts on rank-3 tensors")
    return Tensor3(t.config, {(b, c, a): v for (a, b, c), v in t._terms.items()})


def cyclic_sum(t):
    """(1 + cyclic + cyclic^2) applied to a rank-3 tensor."""
    t1 = cyclic(t)
    return t + t1 + cyclic(t1)


def is_antisymmetric(t):
    """Exact test twist(t) == -t, i.e. membership in Im(1 - twist)."""
    return twist(t) == -t


def diag_act2(x, t):
    """Diagonal adjoint action of an element on a rank-2 tensor."""
    return _diag_act(x, t, Tensor2)


def diag_act3(x, t):
    """Diagonal adjoint action of an element on a rank-3 tensor."""
    return _diag_act(x, t, Tensor3)


def _diag_act(x, t, cls):
    if t.rank != cls.rank:
        raise UsageError(f"expected a rank-{cls.rank} tensor")
    require_same_config(x, t)
    cfg = x.config
    return cls(
        cfg, kernel.diag_act(x._terms, t._terms, cfg.cocycle_code, cfg.centerless)
    )


def is_fully_central(t):
    """True when every slot of every term is a central symbol."""
    return all(all(is_central_sym(s) for s in key) for key in t._terms)


def strip_fully_central(t):
    """Drop terms all of whose slots are central.

    For rank 2 this is reduction modulo center-tensor-center, the ambient
    quotient in which the derivation solvers and compatibility checks work
    in the full variant; in the centerless variant it is the identity.
    """
    kept = {
        key: c
        for key, c in t._terms.items()
        if not all(is_central_sym(s) for s in key)
    }
    return type(t)(t.config, kept)


def element_of(config, sym):
    """Basis element for a raw symbol tuple (no variant re-validation)."""
    return AlgebraElement(config, {sym: kernel.ONE})
