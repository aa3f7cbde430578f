"""Seeded verification suites behind ``rankone verify``.

Each suite returns a small report object; the CLI prints them and the
acceptance tests assert on them.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import classify as cl
from . import construct
from . import w1
from .deriv import Derivation, bracket
from .errors import NotClosed
from .poly import Poly
from .span import close_and_structure, span


@dataclass
class SuiteReport:
    name: str
    total: int = 0
    passed: int = 0
    seed: int | None = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total == self.passed and not self.failures

    def record(self, ok: bool, what: str = "") -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(what)


def centralizer_suite(trials: int, seed: int = 0, per_span: int = 10, max_vars: int = 3, max_dim: int = 5,
                max_degree: int = 4) -> SuiteReport:
    """Random rank-one spans, ``per_span`` random elements each, until ``trials`` centralizers are checked."""
    rng = random.Random(seed)
    report = SuiteReport("centralizers", seed=seed)
    spans = math.ceil(trials / per_span) if trials else 0
    remaining = trials
    for s in range(spans):
        n = rng.randint(1, max_vars)
        dim = rng.randint(1, max_dim)
        deg = rng.randint(1, max_degree)
        span_seed = rng.randrange(2**32)
        A = span(construct.random_rank_one_span(n, dim, deg, span_seed))
        count = min(per_span, remaining)
        remaining -= count
        res = cl.verify_abelian_centralizers(A, count, rng.randrange(2**32))
        report.total += res.trials
        report.passed += res.passed
        for x, C in res.counterexamples:
            report.failures.append(f"span {s}: centralizer of {x} is not abelian")
    return report


def round_trip_cases(max_dim: int = 6, max_vars: int = 3):
    """Yield ``(label, algebra, expected variant)`` for the round-trip check."""
    for n in range(2, max_vars + 1):
        for m in range(1, max_dim + 1):
            yield f"abelian(m={m}, n={n})", construct.abelian_example(m, n), "Abelian"
            yield f"almost-abelian(m={m}, n={n})", construct.almost_abelian_example(m, n), "AlmostAbelian"
    for n in range(1, max_vars + 1):
        yield f"sl2(n={n})", construct.sl2_example(n), "Sl2"


def check_outcome(out, expected: str, dim: int) -> str | None:
    """Return None when ``out`` is a consistent ``expected`` outcome, else a description."""
    if out.variant != expected:
        return f"got {out.variant}"
    if out.dim != dim:
        return f"dimension {out.dim} != {dim}"
    if isinstance(out, cl.AlmostAbelian):
        if len(out.ideal) != dim - 1:
            return "ideal does not have codimension one"
        if any(bracket(out.b, a) != a for a in out.ideal):
            return "[b, a] != a"
        if len(set(out.eigenvalues)) != 1:
            return "ad(b) is not scalar"
        if not all(bracket(x, y).is_zero() for x, y in itertools.combinations(out.ideal, 2)):
            return "ideal is not abelian"
    if isinstance(out, cl.Sl2):
        if out.triple is None or not cl.is_sl2_triple(*out.triple):
            return "no verified triple"
    return None


def round_trip_suite(max_dim: int = 6, max_vars: int = 3) -> SuiteReport:
    report = SuiteReport("round-trip")
    for label, A, expected in round_trip_cases(max_dim, max_vars):
        problem = check_outcome(cl.classify_rank_one(A.basis), expected, A.dim)
        report.record(problem is None, f"{label}: {problem}")
    return report


@dataclass
class LatticeReport:
    q: Poly
    elements: int
    pairs: int
    exact_checks: int
    closed: list

    @property
    def ok(self) -> bool:
        return not self.closed


def _highest_nonzero(a: np.ndarray) -> np.ndarray:
    nz = a != 0
    width = a.shape[1]
    idx = width - 1 - np.argmax(nz[:, ::-1], axis=1)
    return np.where(nz.any(axis=1), idx, -1)


def lattice_two_dim_check(q: Poly, coeff_bound: int = 2, max_degree: int = 7) -> LatticeReport:
    """Search all spans ``<q r1 d/dx, q r2 d/dx>`` for closed two-dimensional subalgebras.

    ``r1`` and ``r2`` run over polynomials with coefficients in
    ``[-coeff_bound, coeff_bound]`` and ``deg(q r) <= max_degree``, up to sign.
    A floating-point pass (exact on these small integers) discards pairs whose
    bracket has degree above both generators, which can never lie in their
    span; the remaining pairs are settled with exact arithmetic.
    """
    dq = q.degree()
    top = max_degree - dq
    qc = np.array([float(q.terms.get((i,), 0)) for i in range(dq + 1)])
    rs = [
        r for r in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=top + 1)
        if any(r) and next(c for c in reversed(r) if c) > 0
    ]
    R = np.array(rs, dtype=float)
    U = np.zeros((len(rs), max_degree + 1))
    for j, c in enumerate(qc):
        if c:
            U[:, j : j + top + 1] += c * R
    dU = U[:, 1:] * np.arange(1, max_degree + 1)
    deg_u = _highest_nonzero(U)
    width = 2 * max_degree

    def toeplitz(vec: np.ndarray, cols: int) -> np.ndarray:
        t = np.zeros((width, cols))
        for j in range(cols):
            t[j : j + len(vec), j] = vec
        return t

    d = Derivation.d(0, 1)

    def as_derivation(row: np.ndarray) -> Derivation:
        return Poly({(i,): int(c) for i, c in enumerate(row) if c}, 1) * d

    exact = 0
    pairs = 0
    closed = []
    for i in range(len(rs) - 1):
        ta = toeplitz(U[i], max_degree)
        tb = toeplitz(dU[i], max_degree + 1)
        br = dU[i + 1 :] @ ta.T - U[i + 1 :] @ tb.T
        pairs += br.shape[0]
        deg_br = _highest_nonzero(br)
        maybe = np.nonzero(deg_br <= np.maximum(deg_u[i], deg_u[i + 1 :]))[0]
        for j in maybe:
            exact += 1
            u, v = as_derivation(U[i]), as_derivation(U[i + 1 + j])
            try:
                A = close_and_structure([u, v])
            except NotClosed:
                continue
            if A.dim == 2:
                closed.append((u, v))
    return LatticeReport(q, len(rs), pairs, exact, closed)


def univariate_suite(lattice: bool = True) -> SuiteReport:
    report = SuiteReport("univariate")
    x = Poly.var(0, 1)
    d = Derivation.d(0, 1)
    for k in (0, 2, 3, 4, 5, 6):
        basis = [x * d, x**k * d]
        out = w1.classify_w1(basis)
        f, g = w1.canonical_pair(k)
        report.record(out == w1.FkBeta(k, Fraction(0)) and w1.star_condition(f, g), f"F_{k}: {out}")
        if k >= 2:
            out = w1.classify_w1(basis, q=x)
            report.record(out == w1.Fk(k, x), f"F_{k} in xK[x]d/dx: {out}")
    for beta in (Fraction(0), Fraction(1), Fraction(-1), Fraction(5, 2), Fraction(-5, 2)):
        A = construct.f_of_beta(beta)
        out = cl.classify_rank_one(A.basis)
        ok = check_outcome(out, "Sl2", 3) is None
        report.record(ok and w1.classify_w1(A.basis) == w1.FBeta(beta), f"F({beta}): {out}")
    if lattice:
        for q in (x**2, x**2 - 1):
            res = lattice_two_dim_check(q)
            report.record(res.ok, f"q={q}: closed pairs {res.closed}")
    return report
