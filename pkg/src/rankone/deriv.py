"""Derivations of the polynomial ring, viewed as polynomial vector fields.

A :class:`Derivation` stores the coefficients ``P_i`` of ``sum P_i d/dx_i``.
Besides evaluation and the commutator bracket this module extracts the
reduced direction of a rank-one family: every nonzero ``D`` factors as
``content * D0`` with ``D0`` having coprime coefficients, and elements of a
rank-one submodule are all polynomial multiples of one such ``D0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotDivisible, NotRankOne, ZeroInput
from .poly import Poly, content as poly_content, divide_exact, gradlex_key, partial


class Derivation:
    """Immutable vector field ``sum coeffs[i] * d/dx_i``."""

    __slots__ = ("coeffs", "n", "_hash")

    def __init__(self, coeffs: Sequence[Poly]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a derivation needs at least one coefficient")
        n = len(coeffs)
        for c in coeffs:
            if not isinstance(c, Poly):
                raise TypeError("coefficients must be Poly")
            if c.n != n:
                raise DimensionMismatch(f"coefficient in {c.n} variables for a derivation with n={n}")
        self.coeffs = coeffs
        self.n = n
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> Derivation:
        return cls([Poly.zero(n)] * n)

    @classmethod
    def d(cls, i: int, n: int, coeff: Poly | None = None) -> Derivation:
        """``coeff * d/dx_i`` (``coeff`` defaults to 1)."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        c = Poly.one(n) if coeff is None else coeff
        return cls([c if j == i else Poly.zero(n) for j in range(n)])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: Derivation) -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"derivations in {self.n} and {other.n} variables")

    def __add__(self, other: Derivation) -> Derivation:
        if not isinstance(other, Derivation):
            return NotImplemented
        self._check(other)
        return Derivation([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: Derivation) -> Derivation:
        if not isinstance(other, Derivation):
            return NotImplemented
        self._check(other)
        return Derivation([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> Derivation:
        return Derivation([-c for c in self.coeffs])

    def __rmul__(self, other) -> Derivation:
        # polynomial or scalar multiple: f * D
        if isinstance(other, Poly):
            if other.n != self.n:
                raise DimensionMismatch("multiplier lives in a different ring")
            return Derivation([other * c for c in self.coeffs])
        if isinstance(other, (int, Rational)):
            return Derivation([c.scale(other) for c in self.coeffs])
        return NotImplemented

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        from .textio import print_derivation

        return f"Derivation({print_derivation(self)!r}, n={self.n})"

    def __str__(self) -> str:
        from .textio import print_derivation

        return print_derivation(self)

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)

    def leading_key(self):
        """Largest ``(gradlex key, -i)`` over the nonzero coefficients; used for tie-free normalization."""
        return max(
            (gradlex_key(c.leading_term()[0]), -i)
            for i, c in enumerate(self.coeffs)
            if c
        )

    def leading_coefficient(self):
        _, neg_i = self.leading_key()
        return self.coeffs[-neg_i].leading_coefficient()

    def vector(self) -> dict:
        """Sparse coordinates keyed by ``(variable index, monomial)``."""
        return {(i, m): c for i, p in enumerate(self.coeffs) for m, c in p.items()}


def apply(D: Derivation, f: Poly) -> Poly:
    if D.n != f.n:
        raise DimensionMismatch(f"derivation in {D.n} variables applied to polynomial in {f.n}")
    out = Poly.zero(f.n)
    for i, c in enumerate(D.coeffs):
        if c:
            df = partial(f, i)
            if df:
                out = out + c * df
    return out


def bracket(D: Derivation, E: Derivation) -> Derivation:
    """Commutator ``[D, E] = D E - E D``."""
    D._check(E)
    return Derivation([apply(D, e) - apply(E, d) for d, e in zip(D.coeffs, E.coeffs)])


@dataclass(frozen=True)
class RankOneReduction:
    content: Poly
    direction: Derivation


def reduce(D: Derivation) -> RankOneReduction:
    """Split ``D`` as ``content * direction`` with coprime direction coefficients.

    The content is monic; any leftover scalar stays in the direction.
    """
    if D.is_zero():
        raise ZeroInput("cannot reduce the zero derivation")
    c = poly_content(D.coeffs)
    if c == 1:
        return RankOneReduction(c, D)
    return RankOneReduction(c, Derivation([divide_exact(p, c) for p in D.coeffs]))


def is_reduced(D: Derivation) -> bool:
    if D.is_zero():
        raise ZeroInput("the zero derivation is not reduced or unreduced")
    return poly_content(D.coeffs).is_constant()


def multiplier(E: Derivation, D0: Derivation) -> Poly | None:
    """The polynomial ``f`` with ``E == f * D0``, or None if none exists."""
    D0._check(E)
    i = next(i for i, c in enumerate(D0.coeffs) if c)
    try:
        f = divide_exact(E.coeffs[i], D0.coeffs[i])
    except NotDivisible:
        return None
    if f * D0 != E:
        return None
    return f


def common_direction(Ds: Iterable[Derivation]) -> Derivation:
    """Reduced direction shared by every entry, normalized as in :func:`reduce`.

    Raises :class:`NotRankOne` when some entry is not a polynomial multiple
    of the direction extracted from the first nonzero entry.
    """
    Ds = list(Ds)
    nonzero = [D for D in Ds if D]
    if not nonzero:
        raise ZeroInput("common_direction needs a nonzero derivation")
    D0 = reduce(nonzero[0]).direction
    for k, E in enumerate(nonzero[1:], start=1):
        if multiplier(E, D0) is None:
            raise NotRankOne(f"entry {k} is not a polynomial multiple of {D0}")
    return D0
