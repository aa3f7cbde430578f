"""Explicit subalgebras of rank-one polynomial Lie algebras.

Given a derivation ``D0`` and polynomials ``p``, ``q`` with ``D0(p) = 0`` and
``D0(q) = 1``:

* ``<D0, p D0, ..., p^(m-1) D0>`` is abelian of dimension m,
* adding ``b = -q D0`` gives ``[b, f(p) D0] = f(p) D0``,
* ``q^2 D0, 2 q D0, -D0`` is an sl2-triple.

With ``n >= 2`` the defaults are ``D0 = d/dx2``, ``p = x1``, ``q = x2``; for
the sl2 construction with ``n == 1`` they are ``D0 = d/dx``, ``q = x``.
The univariate families ``F_{k,beta}`` and ``F(beta)`` live here too, along
with a seeded generator of random rank-one spans.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .deriv import Derivation, apply, is_reduced
from .errors import PreconditionError
from .poly import Poly
from .span import SpannedAlgebra, close_and_structure


def _setup(n: int, D0: Derivation | None, p: Poly | None, q: Poly | None, need_p: bool):
    if D0 is None:
        if n >= 2:
            D0 = Derivation.d(1, n)
            p = Poly.var(0, n) if p is None else p
            q = Poly.var(1, n) if q is None else q
        elif need_p:
            raise PreconditionError(
                "for n = 1 every abelian subalgebra of K[x] d/dx is one-dimensional; "
                "no polynomial p with D0(p) = 0 is available"
            )
        else:
            D0 = Derivation.d(0, 1)
            q = Poly.var(0, 1) if q is None else q
    if D0.n != n:
        raise PreconditionError("D0 lives in the wrong ring")
    if need_p:
        if p is None or p.is_constant():
            raise PreconditionError("need a non-constant p")
        if apply(D0, p) != 0:
            raise PreconditionError("D0(p) must be 0")
    if q is not None and apply(D0, q) != 1:
        raise PreconditionError("D0(q) must be 1")
    return D0, p, q


def _chain(D0: Derivation, p: Poly, m: int) -> list[Derivation]:
    out = []
    power = Poly.one(D0.n)
    for _ in range(m):
        out.append(power * D0)
        power = power * p
    return out


def abelian_example(m: int, n: int, D0: Derivation | None = None, p: Poly | None = None) -> SpannedAlgebra:
    if m < 1:
        raise PreconditionError("m must be positive")
    D0, p, _ = _setup(n, D0, p, None, need_p=True)
    return close_and_structure(_chain(D0, p, m))


def almost_abelian_example(
    m: int, n: int, D0: Derivation | None = None, p: Poly | None = None, q: Poly | None = None
) -> SpannedAlgebra:
    if m < 1:
        raise PreconditionError("m must be positive")
    D0, p, q = _setup(n, D0, p, q, need_p=True)
    if q is None:
        raise PreconditionError("need q with D0(q) = 1")
    return close_and_structure(_chain(D0, p, m) + [-q * D0])


def sl2_example(n: int, D0: Derivation | None = None, q: Poly | None = None) -> SpannedAlgebra:
    """Basis ``(q^2 D0, 2 q D0, -D0)``, which is itself the triple ``(e, h, f)``."""
    if n < 1:
        raise PreconditionError("n must be positive")
    D0, _, q = _setup(n, D0, None, q, need_p=False)
    if q is None:
        raise PreconditionError("need q with D0(q) = 1")
    return close_and_structure([(q * q) * D0, (2 * q) * D0, -D0])


def _shifted_power(beta, k: int) -> Poly:
    return (Poly.var(0, 1) + Fraction(beta)) ** k


def f_k_beta(k: int, beta=0) -> SpannedAlgebra:
    """``<(x + beta) d/dx, (x + beta)^k d/dx>`` for ``k = 0`` or ``k >= 2``."""
    if k == 1 or k < 0:
        raise PreconditionError("k must be 0 or at least 2")
    d = Derivation.d(0, 1)
    return close_and_structure([_shifted_power(beta, 1) * d, _shifted_power(beta, k) * d])


def f_of_beta(beta=0) -> SpannedAlgebra:
    """``<d/dx, (x + beta) d/dx, (x + beta)^2 d/dx>``."""
    d = Derivation.d(0, 1)
    return close_and_structure([_shifted_power(beta, i) * d for i in range(3)])


def random_poly(rng: random.Random, n: int, max_degree: int, max_terms: int = 4, coeff_bound: int = 5) -> Poly:
    """A random polynomial with at most ``max_terms`` terms and small integer coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        budget = rng.randint(0, max_degree)
        mono = [0] * n
        for _ in range(budget):
            mono[rng.randrange(n)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            terms[tuple(mono)] = c
    return Poly(terms, n)


def random_derivation(rng: random.Random, n: int, max_degree: int, max_terms: int = 3) -> Derivation:
    return Derivation([random_poly(rng, n, max_degree, max_terms) for _ in range(n)])


def random_reduced_derivation(rng: random.Random, n: int, max_degree: int) -> Derivation:
    while True:
        D = random_derivation(rng, n, max_degree)
        if D and is_reduced(D):
            return D


def random_rank_one_span(n: int, dim: int, max_degree: int, seed: int) -> list[Derivation]:
    """``[f_1 D0, ..., f_dim D0]`` for a random reduced ``D0`` and random ``f_i``.

    ``D0`` has coefficients of degree at most ``max(1, max_degree // 2)``;
    the ``f_i`` have degree at most ``max_degree``. Deterministic in ``seed``.
    """
    if n < 1 or dim < 1 or max_degree < 0:
        raise PreconditionError("parameters must be positive")
    rng = random.Random(seed)
    D0 = random_reduced_derivation(rng, n, max(1, max_degree // 2))
    out = []
    for _ in range(dim):
        f = Poly.zero(n)
        while f.is_zero():
            f = random_poly(rng, n, max_degree)
        out.append(f * D0)
    return out
