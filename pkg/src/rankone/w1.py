"""Finite-dimensional subalgebras of ``q(x) K[x] d/dx`` in one variable.

Every such subalgebra is one-dimensional, a two-dimensional
``F_{k,beta} = <(x+beta) d/dx, (x+beta)^k d/dx>`` (``k = 0, 2, 3, ...``), or
the three-dimensional ``F(beta) = <d/dx, (x+beta) d/dx, (x+beta)^2 d/dx>``.
A pair ``<f d/dx, g d/dx>`` with ``f g' - f' g = g`` spans a two-dimensional
subalgebra.

Two parametrizations are redundant as subspaces: ``F_{0,beta}`` equals
``<d/dx, x d/dx>`` and ``F(beta)`` equals ``<1, x, x^2> d/dx`` for every
``beta``. The classifier reports the beta read off the normalized generator
(the linear part of ``b`` for ``k = 0``, the Cartan element ``h`` of the
sl2-triple for ``F(beta)``), which depends on the input basis.

Only rational forms are recognized: an input equivalent to ``F_{k,beta}``
only over an extension field is reported as :class:`NotSubalgebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import classify as cl
from .deriv import Derivation, multiplier
from .errors import DimensionMismatch, PreconditionError
from .poly import Poly, partial


@dataclass(frozen=True)
class OneDim:
    generator: Derivation
    variant = "OneDim"


@dataclass(frozen=True)
class Fk:
    """``<q d/dx, q^k d/dx>`` inside ``q K[x] d/dx`` with ``deg q == 1``.

    ``q`` is stored monic; ``scale`` is the leading coefficient of the q that was supplied.
    """

    k: int
    q: Poly
    scale: Fraction = Fraction(1)
    variant = "Fk"


@dataclass(frozen=True)
class FkBeta:
    k: int
    beta: Fraction
    variant = "FkBeta"


@dataclass(frozen=True)
class FBeta:
    beta: Fraction
    variant = "FBeta"


@dataclass(frozen=True)
class NotSubalgebra:
    reason: str
    witness: Derivation | None = None
    variant = "NotSubalgebra"


W1Outcome = OneDim | Fk | FkBeta | FBeta | NotSubalgebra


@dataclass(frozen=True)
class AffineTransform:
    """Substitution ``x = alpha * y + beta``; see :func:`affine_change`."""

    alpha: Fraction
    beta: Fraction


def _check_univariate(*ps) -> None:
    for p in ps:
        if p.n != 1:
            raise DimensionMismatch("only univariate input is accepted here")


def star_condition(f: Poly, g: Poly) -> bool:
    """Exact test of ``f g' - f' g == g``."""
    _check_univariate(f, g)
    return f * partial(g, 0) - partial(f, 0) * g == g


def _x() -> Poly:
    return Poly.var(0, 1)


def _match_pair(out: cl.AlmostAbelian) -> W1Outcome:
    (a,) = out.ideal
    g = a.coeffs[0]
    f = out.b.coeffs[0]
    k = g.degree()
    if k >= 2:
        while f.degree() == k:
            f = f - g.scale(f.leading_coefficient() / g.leading_coefficient())
    if f.degree() != 1:
        return NotSubalgebra("no linear generator in the span", out.b)
    beta = f.coefficients_in(0).get(0, Poly.zero(1))
    beta = (beta.constant_value() if beta else Fraction(0)) / f.leading_coefficient()
    base = _x() + beta
    if g != base**k * g.leading_coefficient():
        return NotSubalgebra("ideal generator is not a power of the linear generator", a)
    if not star_condition(f, g):
        raise AssertionError("normalized pair fails f g' - f' g = g")
    return FkBeta(k, beta)


def _match_sl2(out: cl.Sl2) -> W1Outcome:
    if any(D.coeffs[0].degree() > 2 for D in out.basis):
        return NotSubalgebra("sl2 span is not <1, x, x^2> d/dx")
    if out.triple is None:
        return NotSubalgebra("no rational sl2-triple found")
    h = out.triple[1].coeffs[0]
    if h.degree() != 1:
        return FBeta(Fraction(0))
    c0 = h.coefficients_in(0).get(0)
    return FBeta((c0.constant_value() if c0 else Fraction(0)) / h.leading_coefficient())


def classify_w1(basis: Sequence[Derivation], q: Poly | None = None) -> W1Outcome:
    """Identify a finite span of univariate derivations with one of the standard families.

    When ``q`` is given the span must lie in ``q K[x] d/dx``; with ``deg q == 1``
    two-dimensional answers are reported as :class:`Fk`.
    """
    basis = list(basis)
    for D in basis:
        if D.n != 1:
            raise DimensionMismatch("classify_w1 needs univariate derivations")
    if q is not None:
        _check_univariate(q)
        if q.is_zero():
            raise PreconditionError("q must be nonzero")
        qd = q * Derivation.d(0, 1)
        for D in basis:
            if D and multiplier(D, qd) is None:
                return NotSubalgebra(f"{D} is not in q K[x] d/dx", D)
    out = cl.classify_rank_one(basis)
    if isinstance(out, cl.Abelian):
        if out.dim == 1:
            return OneDim(out.basis[0])
        return NotSubalgebra(f"abelian of dimension {out.dim}")
    if isinstance(out, cl.NotClosedOutcome):
        return NotSubalgebra("span is not closed under the bracket", out.escape)
    if isinstance(out, cl.HypothesisViolated):
        return NotSubalgebra(f"{out.reason} {out.detail}".strip())
    if isinstance(out, cl.AlmostAbelian):
        if out.dim != 2:
            return NotSubalgebra(f"solvable of dimension {out.dim}")
        res = _match_pair(out)
        if isinstance(res, FkBeta) and q is not None and q.degree() == 1 and res.k >= 2:
            return Fk(res.k, q.monic(), q.leading_coefficient())
        return res
    return _match_sl2(out)


def affine_change(D: Derivation, alpha, beta) -> Derivation:
    """Rewrite ``f(x) d/dx`` in the coordinate ``y`` with ``x = alpha*y + beta``.

    The result is ``(1/alpha) f(alpha*y + beta) d/dy``; this is a Lie algebra
    automorphism of univariate derivations.
    """
    if D.n != 1:
        raise DimensionMismatch("affine_change needs a univariate derivation")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0:
        raise PreconditionError("alpha must be nonzero")
    sub = _x().scale(alpha) + beta
    return Derivation([D.coeffs[0].compose([sub]).scale(1 / alpha)])


def normalize_w1(outcome: W1Outcome) -> tuple[W1Outcome, AffineTransform]:
    """Move ``beta`` (or the root of ``q``) to 0 by a translation.

    Returns the normal form and the substitution that maps the original
    family onto it under :func:`affine_change`.
    """
    if isinstance(outcome, FkBeta):
        return FkBeta(outcome.k, Fraction(0)), AffineTransform(Fraction(1), -Fraction(outcome.beta))
    if isinstance(outcome, FBeta):
        return FBeta(Fraction(0)), AffineTransform(Fraction(1), -Fraction(outcome.beta))
    if isinstance(outcome, Fk):
        q = outcome.q.monic()
        shift = q.coefficients_in(0).get(0)
        shift = shift.constant_value() if shift else Fraction(0)
        return Fk(outcome.k, _x(), outcome.scale), AffineTransform(Fraction(1), -shift)
    raise PreconditionError(f"cannot normalize a {outcome.variant} outcome")


def canonical_pair(k: int, beta=0) -> tuple[Poly, Poly]:
    """Coefficients ``(f, g)`` of the normalized basis of ``F_{k,beta}`` satisfying the star condition."""
    if k == 1 or k < 0:
        raise PreconditionError("k must be 0 or at least 2")
    base = _x() + Fraction(beta)
    return base.scale(Fraction(1, k - 1)), base**k

