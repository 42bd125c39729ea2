"""Exact rational scalars.

The scalar field is the rationals, represented by ``fractions.Fraction``:
arbitrary precision, always in canonical form (positive denominator, reduced
to lowest terms), structural equality.  There is no floating point anywhere
in the engine and no tolerance parameter; identities are decided by exact
comparison of canonical forms.

The literal syntax accepted here is shared with the expression language:
an optional sign, an integer, and an optional ``/`` followed by a positive
integer, e.g. ``7``, ``-3/2``.
"""

import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text, offset=0):
    """Parse a rational literal; raise ParseError with its byte offset."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"invalid rational literal {text!r}", offset)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", offset)
    return Fraction(num, den)


def format_rational(q):
    """Canonical text form: ``n`` for integers, ``n/d`` otherwise."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value):
    """Coerce ints, strings and Fractions to Fraction; reject floats.

    Floats are rejected rather than converted: a binary float is almost never
    the rational the caller meant, and exactness is the whole point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")
