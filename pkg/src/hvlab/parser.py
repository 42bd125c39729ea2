"""Expression language for elements and tensors, with a canonical printer.

Grammar (whitespace insensitive):

    expr     := ["-"] term (("+" | "-") term)*
    term     := [rational "*"] chain | rational
    chain    := atom ("@" atom)*
    atom     := "L(" rational ")" | "I(" rational ")" | "C_L" | "C_I"
              | "C_LI" | "wedge(" expr "," expr ")" | "(" expr ")"
    rational := ["-"] digits ["/" digits]

"@" is the tensor product (total rank at most 3) and ``wedge(a, b)`` is
sugar for ``a@b - b@a``.  A bare rational term is only legal when it is 0,
so the canonical form of the zero value round-trips.

Printing is canonical: terms are ordered by (grade, kind L<I<C_L<C_I<C_LI),
slot-wise for tensors, and ``parse(format(v)) == v`` for every engine value.
All indices are validated against the configured group; central symbols and
I(0) are rejected in the centerless variant.
"""

import re
from fractions import Fraction

from .algebra import AlgebraElement, sym_label, sym_sort_key
from .errors import ParseError, UsageError
from .rationals import format_rational
from .tensors import Tensor2, Tensor3, tensor_product, wedge

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<number>\d+)
  | (?P<op>[@*+\-/(),])
    """,
    re.VERBOSE,
)


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, config):
        self.tokens = _tokenize(src)
        self.config = config
        self.i = 0

    # -- token plumbing --------------------------------------------------

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        kind, value, pos = self.peek()
        if value != text or kind == "end":
            raise ParseError(f"expected {text!r}", pos)
        return self.next()

    def at(self, text):
        kind, value, _ = self.peek()
        return kind != "end" and value == text

    # -- grammar ----------------------------------------------------------

    def parse_rational(self):
        sign = 1
        if self.at("-"):
            self.next()
            sign = -1
        kind, value, pos = self.peek()
        if kind != "number":
            raise ParseError("expected a rational literal", pos)
        self.next()
        num = sign * int(value)
        if self.at("/"):
            self.next()
            kind, value, pos = self.peek()
            if kind != "number":
                raise ParseError("expected a denominator", pos)
            self.next()
            den = int(value)
            if den == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def parse_expr(self):
        acc = None
        sign = Fraction(1)
        if self.at("-"):
            self.next()
            sign = Fraction(-1)
        while True:
            value = self.parse_term()
            value = _scale(value, sign, self.config)
            acc = value if acc is None else _add(acc, value, self.peek()[2])
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                sign = Fraction(1) if text == "+" else Fraction(-1)
                continue
            return acc

    def parse_term(self):
        kind, text, pos = self.peek()
        if kind == "number" or text == "-":
            coeff = self.parse_rational()
            if self.at("*"):
                self.next()
                return _scale(self.parse_chain(), coeff, self.config)
            if coeff == 0:
                return _Zero(self.config)
            raise ParseError("a bare rational term must be 0", pos)
        return self.parse_chain()

    def parse_chain(self):
        value = self.parse_atom()
        while self.at("@"):
            _, _, pos = self.next()
            rhs = self.parse_atom()
            try:
                value = _tensor(value, rhs, self.config)
            except UsageError as exc:
                raise ParseError(str(exc), pos) from exc
        return value

    def parse_atom(self):
        kind, text, pos = self.next()
        if kind == "name":
            if text in ("L", "I"):
                self.expect("(")
                index = self.parse_rational()
                self.expect(")")
                return self.config.L(index) if text == "L" else self.config.I(index)
            if text == "C_L":
                return self.config.C_L()
            if text == "C_I":
                return self.config.C_I()
            if text == "C_LI":
                return self.config.C_LI()
            if text == "wedge":
                self.expect("(")
                a = self.parse_expr()
                self.expect(",")
                b = self.parse_expr()
                self.expect(")")
                if not isinstance(a, AlgebraElement) or not isinstance(b, AlgebraElement):
                    a = _coerce_rank(a, 1, self.config, pos)
                    b = _coerce_rank(b, 1, self.config, pos)
                return wedge(a, b)
            raise ParseError(f"unknown generator {text!r}", pos)
        if text == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        raise ParseError("expected a generator, wedge(...) or '('", pos)


class _Zero:
    """Rank-polymorphic zero produced by a bare '0' literal."""

    def __init__(self, config):
        self.config = config


def _scale(value, coeff, config):
    if isinstance(value, _Zero):
        return value
    return value * coeff


def _rank(value):
    if isinstance(value, _Zero):
        return None
    if isinstance(value, AlgebraElement):
        return 1
    return value.rank


def _coerce_rank(value, rank, config, pos):
    if isinstance(value, _Zero):
        if rank == 1:
            return config.zero()
        return (Tensor2 if rank == 2 else Tensor3).zero(config)
    if _rank(value) != rank:
        raise ParseError(f"expected a rank-{rank} value", pos)
    return value


def _add(a, b, pos):
    if isinstance(a, _Zero):
        return b
    if isinstance(b, _Zero):
        return a
    if _rank(a) != _rank(b):
        raise ParseError("cannot mix ranks in a sum", pos)
    return a + b


def _tensor(a, b, config):
    a = _coerce_rank(a, _rank(a) or 1, config, 0)
    b = _coerce_rank(b, _rank(b) or 1, config, 0)
    return tensor_product(a, b)


def parse_value(src, config):
    """Parse an expression; returns an AlgebraElement, Tensor2, Tensor3 or zero."""
    p = _Parser(src, config)
    value = p.parse_expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return value


def parse_element(src, config):
    """Parse an expression that must be a rank-1 element (0 allowed)."""
    value = parse_value(src, config)
    if isinstance(value, _Zero):
        return config.zero()
    if not isinstance(value, AlgebraElement):
        raise ParseError("expected an element, got a tensor", 0)
    return value


def parse_tensor(src, config, rank):
    """Parse an expression that must be a tensor of the given rank (0 allowed)."""
    value = parse_value(src, config)
    if isinstance(value, _Zero):
        return (Tensor2 if rank == 2 else Tensor3).zero(config)
    if _rank(value) != rank:
        raise ParseError(f"expected a rank-{rank} tensor", 0)
    return value


def parse_symbol_label(label, config):
    """Parse a single basis-symbol label like ``L(1)`` into a raw symbol tuple."""
    value = parse_value(label, config)
    if isinstance(value, AlgebraElement):
        items = value.items()
        if len(items) == 1 and items[0][1] == 1:
            return items[0][0]
    raise ParseError(f"expected a single basis symbol, got {label!r}", 0)


def _format_terms(pairs):
    """pairs: [(body, Fraction coefficient)] already in canonical order."""
    if not pairs:
        return "0"
    parts = []
    for n, (body, coeff) in enumerate(pairs):
        mag = abs(coeff)
        body_txt = body if mag == 1 else f"{format_rational(mag)}*{body}"
        if n == 0:
            parts.append(body_txt if coeff > 0 else f"-{body_txt}")
        else:
            parts.append((" + " if coeff > 0 else " - ") + body_txt)
    return "".join(parts)


def format_value(value):
    """Canonical, re-parseable text form of an engine value."""
    if isinstance(value, _Zero):
        return "0"
    if isinstance(value, AlgebraElement):
        return _format_terms([(sym_label(s), c) for s, c in value.items()])
    if isinstance(value, (Tensor2, Tensor3)):
        return _format_terms(
            [("@".join(sym_label(s) for s in key), c) for key, c in value.items()]
        )
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    raise TypeError(f"cannot format {type(value).__name__}")
