"""Index groups: finitely generated subgroups of the rationals.

The grading group is realized inside the rationals, so an index *is* its
pairing value and expressions like ``x**2 - x`` in the structure constants
are literal rational arithmetic.  Distinct indices have distinct values,
which makes the pairing nondegenerate by construction.

A *window* is the finite set of indices whose generator coefficients are
bounded by a radius.  Windows bound quantifier ranges in verifiers and
solvers; they never truncate arithmetic.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import UsageError
from .rationals import as_rational, format_rational


@dataclass(frozen=True)
class GroupSpec:
    """A subgroup of the rationals given by finitely many generators."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(as_rational(g) for g in self.generators)
        if not gens:
            raise UsageError("group needs at least one generator")
        if any(g == 0 for g in gens):
            raise UsageError("group generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    def __str__(self):
        return "<" + ", ".join(format_rational(g) for g in self.generators) + ">"


def member(x, group):
    """Decide exactly whether x is an integer combination of the generators.

    Over a common denominator D the generators become integers a_i and the
    question reduces to divisibility: the integer span of the a_i is
    gcd(a_i) * Z.
    """
    x = as_rational(x)
    if x == 0:
        return True
    d = lcm(x.denominator, *(g.denominator for g in group.generators))
    g = gcd(*(int(gen * d) for gen in group.generators))
    return int(x * d) % g == 0


def window(group, radius):
    """All indices with generator coefficients bounded by radius, sorted.

    Always contains 0; deduplicated; ascending.  window(g, r) is contained
    in window(g, r+1) by construction.
    """
    if radius < 0:
        raise UsageError("window radius must be nonnegative")
    coeffs = range(-radius, radius + 1)
    seen = set()
    for combo in itertools.product(coeffs, repeat=len(group.generators)):
        value = sum((c * g for c, g in zip(combo, group.generators)), Fraction(0))
        seen.add(value)
    return sorted(seen)
