"""Typed errors raised by the library.

Every domain error derives from :class:`RankOneError`; the CLI maps these to
exit code 1 and prints the class name. Parse errors are separate (exit code 2).
"""

from __future__ import annotations


class RankOneError(Exception):
    """Base class for domain errors."""


class DimensionMismatch(RankOneError, ValueError):
    pass


class ZeroInput(RankOneError, ValueError):
    """An operation that needs a nonzero argument got only zeros."""


class NotDivisible(RankOneError, ArithmeticError):
    pass


class NotRankOne(RankOneError):
    """Some element of a family is not a polynomial multiple of the common direction."""


class NotClosed(RankOneError):
    """A span is not closed under the bracket.

    ``pair`` holds the basis indices whose bracket escapes, ``escape`` the
    escaping derivation itself.
    """

    def __init__(self, pair, escape):
        self.pair = pair
        self.escape = escape
        super().__init__(f"bracket of basis elements {pair} leaves the span")


class InvalidStructure(RankOneError, ValueError):
    """A structure tensor failed antisymmetry or Jacobi validation."""


class PreconditionError(RankOneError, ValueError):
    pass
