"""Exception hierarchy shared by the engine and the command line tool.

``UsageError`` subclasses signal malformed input (bad syntax, wrong variant,
mismatched configurations); the CLI maps them to exit code 2.  Everything
else derived from ``HvlabError`` is a mathematical condition (a violated
precondition or a failed verification) and maps to exit code 1.
"""


class HvlabError(Exception):
    """Base class for all engine errors."""


class UsageError(HvlabError):
    """Malformed input or invalid request; CLI exit code 2."""


class ParseError(UsageError):
    """Syntax error in an expression, with the byte offset of the failure."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class IndexNotInGroupError(UsageError):
    """An index literal does not belong to the configured group."""

    def __init__(self, index, group):
        super().__init__(f"index {index} is not in the group generated by {group}")
        self.index = index


class VariantError(UsageError):
    """Operation or symbol not available in the requested algebra variant."""


class ConfigMismatchError(UsageError):
    """Two values from differently configured algebras were combined."""


class CoverageError(UsageError):
    """A table does not cover a symbol required by the requested check."""

    def __init__(self, symbol_label, context=""):
        msg = f"table does not cover symbol {symbol_label}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.symbol_label = symbol_label


class PreconditionError(HvlabError):
    """A mathematical precondition failed; carries the offending value."""


class VerificationError(HvlabError):
    """An asserted identity failed; carries the witness and both sides."""

    def __init__(self, message, witness=None, lhs=None, rhs=None):
        super().__init__(message)
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs
