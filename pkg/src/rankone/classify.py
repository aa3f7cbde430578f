"""Classification of finite-dimensional Lie algebras with abelian centralizers.

Two entry points:

* :func:`classify_abstract` works on a structure tensor and decides between
  abelian, ``A x| <b>`` (abelian ideal of codimension one, trivial center) and
  sl2 (three-dimensional and perfect, read over the algebraic closure).
  Anything else cannot have all centralizers abelian and is reported as
  :class:`HypothesisViolated`.
* :func:`classify_rank_one` takes derivations that are polynomial multiples of
  one reduced direction. In the solvable case it also checks that ``ad(b)``
  is a nonzero scalar on the ideal and rescales ``b`` so that ``[b, a] = a``.

The ideal in the solvable case is always the derived algebra: with trivial
center and abelian ``A``, ``ad(b)`` is injective on ``A`` so ``[F, F] = A``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .deriv import Derivation, bracket, common_direction
from .errors import InvalidStructure, NotClosed, NotRankOne, PreconditionError
from .span import SpannedAlgebra, brackets_vanish, centralizer, close_and_structure, independent_basis

Vec = tuple  # dense coordinate vector of Fractions


# outcomes


@dataclass(frozen=True)
class Abelian:
    dim: int
    basis: tuple = ()
    variant = "Abelian"


@dataclass(frozen=True)
class AlmostAbelian:
    """``A x| <b>``; ``ideal`` spans A.

    Coordinates for the abstract classifier, derivations for the rank-one one.
    In the rank-one case ``[b, a] == a`` for every ``a`` in ``ideal`` and
    ``eigenvalues`` records the scalar that ``ad(b)`` had before rescaling,
    one entry per ideal basis element.
    """

    dim: int
    ideal: tuple
    b: object
    eigenvalues: tuple = ()
    basis: tuple = ()
    variant = "AlmostAbelian"


@dataclass(frozen=True)
class Sl2:
    triple: tuple | None = None
    basis: tuple = ()
    dim: int = 3
    variant = "Sl2"


@dataclass(frozen=True)
class HypothesisViolated:
    reason: str
    detail: str = ""
    basis: tuple = ()
    variant = "HypothesisViolated"

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class NotClosedOutcome:
    pair: tuple
    escape: Derivation
    basis: tuple = ()
    variant = "NotClosed"

    @property
    def dim(self) -> int:
        return len(self.basis)


ClassOutcome = Abelian | AlmostAbelian | Sl2 | HypothesisViolated | NotClosedOutcome


# abstract structure tensors


def as_structure(c, dim: int | None = None) -> tuple:
    """Normalize a nested list into a tuple tensor of Fractions, checking its shape."""
    try:
        t = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in c)
    except (TypeError, ValueError) as exc:
        raise InvalidStructure(f"structure constants must be rationals: {exc}") from exc
    d = len(t) if dim is None else dim
    if len(t) != d or any(len(p) != d or any(len(r) != d for r in p) for p in t):
        raise InvalidStructure(f"structure tensor must have shape {d}x{d}x{d}")
    return t


def lie_bracket(c, u: Sequence, v: Sequence) -> list[Fraction]:
    dim = len(c)
    out = [Fraction(0)] * dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            s = ui * vj
            for k, x in enumerate(c[i][j]):
                if x:
                    out[k] += s * x
    return out


def _unit(dim: int, i: int) -> list[Fraction]:
    return [Fraction(int(j == i)) for j in range(dim)]


def validate_structure(c, dim: int | None = None) -> tuple:
    """Check shape, antisymmetry and Jacobi; return the normalized tensor."""
    c = as_structure(c, dim)
    d = len(c)
    for i in range(d):
        if any(c[i][i]):
            raise InvalidStructure(f"[e{i}, e{i}] is not zero")
        for j in range(i + 1, d):
            if any(a + b for a, b in zip(c[i][j], c[j][i])):
                raise InvalidStructure(f"structure constants not antisymmetric at ({i}, {j})")
    for i, j, k in itertools.combinations(range(d), 3):
        ei, ej, ek = _unit(d, i), _unit(d, j), _unit(d, k)
        total = [Fraction(0)] * d
        for x, y, z in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            w = lie_bracket(c, x, lie_bracket(c, y, z))
            total = [a + b for a, b in zip(total, w)]
        if any(total):
            raise InvalidStructure(f"Jacobi identity fails on ({i}, {j}, {k})")
    return c


def derived_subspace(c) -> list[list[Fraction]]:
    """RREF basis of the span of all brackets of basis elements."""
    d = len(c)
    rows = [list(c[i][j]) for i in range(d) for j in range(i + 1, d)]
    return linalg.rref(rows)


def center_subspace(c) -> list[list[Fraction]]:
    d = len(c)
    images = [{(i, k): x for i in range(d) for k, x in enumerate(c[i][j]) if x} for j in range(d)]
    return linalg.kernel(images)


def ad_matrix(c, x: Sequence) -> list[list[Fraction]]:
    """Matrix ``M`` with ``ad(x) e_j = sum_k M[k][j] e_k``."""
    d = len(c)
    m = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        col = lie_bracket(c, x, _unit(d, j))
        for k in range(d):
            m[k][j] = col[k]
    return m


def killing_form(c, x: Sequence, y: Sequence) -> Fraction:
    a, b = ad_matrix(c, x), ad_matrix(c, y)
    d = len(c)
    return sum((a[i][k] * b[k][i] for i in range(d) for k in range(d)), Fraction(0))


def _is_abelian_subspace(c, vecs) -> bool:
    return all(not any(lie_bracket(c, u, v)) for u, v in itertools.combinations(vecs, 2))


def classify_abstract(c, dim: int | None = None) -> ClassOutcome:
    c = validate_structure(c, dim)
    d = len(c)
    if all(x == 0 for plane in c for row in plane for x in row):
        return Abelian(d)
    der = derived_subspace(c)
    if d == 3 and len(der) == 3:
        return Sl2(find_sl2_triple_abstract(c))
    if len(der) != d - 1:
        return HypothesisViolated("derived algebra does not have codimension one")
    if not _is_abelian_subspace(c, der):
        return HypothesisViolated("derived algebra is not abelian")
    if center_subspace(c):
        return HypothesisViolated("non-abelian algebra with nonzero center")
    ech = linalg.Echelon()
    for j, v in enumerate(der):
        ech.add(linalg.dense_to_sparse(v), j)
    b = next(_unit(d, i) for i in range(d) if ech.express({i: Fraction(1)}) is None)
    return AlmostAbelian(d, tuple(tuple(v) for v in der), tuple(b))


# sl2 triples


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q <= 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _eigenline(c, h, lam) -> list[Fraction] | None:
    d = len(c)
    m = ad_matrix(c, h)
    cols = [{k: m[k][j] - (lam if k == j else 0) for k in range(d) if m[k][j] - (lam if k == j else 0)} for j in range(d)]
    ker = linalg.kernel(cols)
    return ker[0] if len(ker) == 1 else None


def _triple_from_h(c, h) -> tuple | None:
    e = _eigenline(c, h, 2)
    f = _eigenline(c, h, -2)
    if e is None or f is None:
        return None
    ef = lie_bracket(c, e, f)
    k = next((i for i, x in enumerate(h) if x), None)
    if k is None or not ef[k]:
        return None
    t = ef[k] / h[k]
    if any(a != t * b for a, b in zip(ef, h)):
        return None
    f = [x / t for x in f]
    return tuple(e), tuple(h), tuple(f)


def _candidates(d: int, bound: int = 4):
    seen = set()
    for i in range(d):
        v = tuple(_unit(d, i))
        seen.add(v)
        yield v
    lattice = sorted(
        (v for v in itertools.product(range(-bound, bound + 1), repeat=d) if any(v)),
        key=lambda v: (max(map(abs, v)), sum(map(abs, v)), v),
    )
    for v in lattice:
        v = tuple(Fraction(x) for x in v)
        if v not in seen:
            yield v


def find_sl2_triple_abstract(c) -> tuple | None:
    """Search for a rational triple ``(e, h, f)`` in coordinates; None if the search fails.

    A semisimple ``x`` has ``ad(x)`` eigenvalues ``0, +-sqrt(kappa(x, x) / 2)``,
    so ``x`` yields ``h = 2 x / s`` whenever ``kappa(x, x) / 2 = s^2`` is a
    rational square. A nonzero ``x`` with ``kappa(x, x) = 0`` is nilpotent and
    ``h`` is then found from ``[h, x] = 2 x``.
    """
    d = len(c)
    if d != 3:
        return None
    nilpotent = []
    for x in _candidates(d):
        q = killing_form(c, x, x) / 2
        if q == 0:
            nilpotent.append(x)
            continue
        s = _rational_sqrt(q)
        if s is None:
            continue
        triple = _triple_from_h(c, [2 * a / s for a in x])
        if triple is not None:
            return triple
    for x in nilpotent:
        images = [linalg.dense_to_sparse(lie_bracket(c, x, _unit(d, j))) for j in range(d)]
        h = linalg.solve(images, linalg.dense_to_sparse([-2 * a for a in x]))
        if h is None:
            continue
        triple = _triple_from_h(c, h)
        if triple is not None:
            return triple
    return None


def is_sl2_triple(e: Derivation, h: Derivation, f: Derivation) -> bool:
    return bracket(e, f) == h and bracket(h, e) == 2 * e and bracket(h, f) == -2 * f


def find_sl2_triple(A: SpannedAlgebra) -> tuple[Derivation, Derivation, Derivation] | None:
    """Rational sl2-triple inside a closed three-dimensional perfect algebra.

    The triple is oriented so that ``e`` has the larger leading term and scaled
    so that the leading coefficient of ``e`` is 1. Returns None if the search
    finds no rational triple.
    """
    c = A.require_closed()
    if A.dim != 3 or len(derived_subspace(c)) != 3:
        raise PreconditionError("find_sl2_triple needs a three-dimensional perfect algebra")
    found = find_sl2_triple_abstract(c)
    if found is None:
        return None
    e, h, f = (A.element(v) for v in found)
    if e.leading_key() < f.leading_key():
        e, h, f = f, -h, e
    t = e.leading_coefficient()
    e, f = (1 / t) * e, t * f
    if not is_sl2_triple(e, h, f):
        raise AssertionError("sl2 triple failed verification")
    return e, h, f


# rank-one realizations


def _eigenvalue(b: Derivation, a: Derivation) -> Fraction | None:
    """``lam`` with ``[b, a] == lam * a``, or None if ``a`` is not an eigenvector."""
    br = bracket(b, a)
    va = a.vector()
    key = min(va)
    lam = br.vector().get(key, Fraction(0)) / va[key]
    return lam if br == lam * a else None


def classify_rank_one(Ds: Sequence[Derivation]) -> ClassOutcome:
    Ds = list(Ds)
    basis = tuple(independent_basis(Ds))
    if not basis:
        return Abelian(0)
    try:
        common_direction(basis)
    except NotRankOne as exc:
        return HypothesisViolated("NotRankOne", str(exc), basis)
    try:
        A = close_and_structure(basis)
    except NotClosed as exc:
        return NotClosedOutcome(exc.pair, exc.escape, basis)
    out = classify_abstract(A.structure)
    if isinstance(out, Abelian):
        return Abelian(out.dim, basis)
    if isinstance(out, Sl2):
        return Sl2(find_sl2_triple(A), basis)
    if isinstance(out, HypothesisViolated):
        return HypothesisViolated(out.reason, out.detail, basis)
    ideal = tuple(A.element(v) for v in out.ideal)
    b = A.element(out.b)
    lams = []
    for a in ideal:
        lam = _eigenvalue(b, a)
        if lam is None:
            return HypothesisViolated("ad(b) is not diagonalizable on the ideal", f"b={b}, a={a}", basis)
        lams.append(lam)
    if len(set(lams)) != 1:
        return HypothesisViolated("ad(b) is not a scalar operator on the ideal", f"eigenvalues {lams}", basis)
    lam = lams[0]
    if lam == 0:
        return HypothesisViolated("ad(b) vanishes on the ideal", f"b={b}", basis)
    b = (1 / lam) * b
    return AlmostAbelian(out.dim, ideal, b, tuple(lams), basis)


# randomized check that centralizers are abelian


@dataclass
class CentralizerReport:
    trials: int
    passed: int
    seed: int
    counterexamples: list = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.trials - self.passed

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


def random_element(A: SpannedAlgebra, rng: random.Random) -> Derivation:
    while True:
        coords = [rng.randint(-9, 9) for _ in range(A.dim)]
        if any(coords):
            return A.element(coords)


def verify_abelian_centralizers(A: SpannedAlgebra, trials: int, seed: int) -> CentralizerReport:
    """Draw ``trials`` random nonzero elements and check each centralizer is abelian.

    ``A`` need not be closed: the centralizer is taken inside its span.
    """
    if not A.dim:
        raise PreconditionError("empty algebra")
    try:
        common_direction(A.basis)
    except NotRankOne as exc:
        raise PreconditionError(f"algebra is not rank one: {exc}") from exc
    rng = random.Random(seed)
    report = CentralizerReport(trials, 0, seed)
    for _ in range(trials):
        x = random_element(A, rng)
        C = centralizer(x, A)
        if brackets_vanish(C):
            report.passed += 1
        else:
            report.counterexamples.append((x, C))
    return report
