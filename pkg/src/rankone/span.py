"""Finite-dimensional spaces of derivations over the rationals.

A :class:`SpannedAlgebra` is a linearly independent list of derivations. When
it comes out of :func:`close_and_structure` it also carries structure
constants ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .deriv import Derivation, bracket
from .errors import DimensionMismatch, NotClosed, PreconditionError
from .poly import gradlex_key

Structure = tuple  # tuple[tuple[tuple[Fraction, ...], ...], ...]


class SpannedAlgebra:
    """A basis of derivations, optionally with its bracket table."""

    def __init__(self, basis: Sequence[Derivation], structure: Structure | None = None, n: int | None = None):
        basis = tuple(basis)
        if n is None:
            if not basis:
                raise ValueError("an empty basis needs an explicit n")
            n = basis[0].n
        if any(D.n != n for D in basis):
            raise DimensionMismatch("basis elements live in different rings")
        self.basis = basis
        self.structure = structure
        self.n = n
        self._echelon = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def closed(self) -> bool:
        return self.structure is not None

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self) -> str:
        tag = "closed" if self.closed else "span"
        return f"SpannedAlgebra({[str(D) for D in self.basis]}, {tag})"

    def _ech(self) -> linalg.Echelon:
        if self._echelon is None:
            ech = linalg.Echelon()
            for j, D in enumerate(self.basis):
                if ech.add(D.vector(), j) is not None:
                    raise ValueError("basis is not linearly independent")
            self._echelon = ech
        return self._echelon

    def coordinates(self, D: Derivation) -> tuple[Fraction, ...] | None:
        if D.n != self.n:
            raise DimensionMismatch("derivation and algebra live in different rings")
        combo = self._ech().express(D.vector())
        if combo is None:
            return None
        return tuple(combo.get(j, Fraction(0)) for j in range(self.dim))

    def element(self, coords: Sequence) -> Derivation:
        out = Derivation.zero(self.n)
        for c, D in zip(coords, self.basis):
            if c:
                out = out + Fraction(c) * D
        return out

    def require_closed(self) -> Structure:
        if self.structure is None:
            raise PreconditionError("operation needs an algebra closed under the bracket")
        return self.structure


def coordinatize(Ds: Sequence[Derivation]) -> tuple[list, list[list[Fraction]]]:
    """Dense coefficient matrix of ``Ds``.

    Columns are ``(variable index, monomial)`` pairs occurring in some entry,
    ordered by variable and then ascending graded lexicographic order.
    """
    vecs = [D.vector() for D in Ds]
    cols = sorted({k for v in vecs for k in v}, key=lambda k: (k[0], gradlex_key(k[1])))
    return cols, [[v.get(c, Fraction(0)) for c in cols] for v in vecs]


def independent_basis(Ds: Iterable[Derivation]) -> list[Derivation]:
    Ds = list(Ds)
    return [Ds[j] for j in linalg.independent_indices([D.vector() for D in Ds])]


def span(Ds: Iterable[Derivation], n: int | None = None) -> SpannedAlgebra:
    """Linear span without closure check (``structure`` stays None)."""
    Ds = list(Ds)
    if n is None:
        if not Ds:
            raise ValueError("an empty family needs an explicit n")
        n = Ds[0].n
    return SpannedAlgebra(independent_basis(Ds), n=n)


def membership(D: Derivation, A: SpannedAlgebra) -> tuple[Fraction, ...] | None:
    """Exact coordinates of ``D`` in the basis of ``A``, or None when ``D`` is not in the span."""
    return A.coordinates(D)


def close_and_structure(Ds: Iterable[Derivation], n: int | None = None) -> SpannedAlgebra:
    """Reduce to a basis and compute the bracket table.

    Raises :class:`NotClosed` with the first escaping pair.
    """
    A = span(Ds, n)
    m = A.dim
    zero = (Fraction(0),) * m
    table = [[zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            br = bracket(A.basis[i], A.basis[j])
            coords = A.coordinates(br)
            if coords is None:
                raise NotClosed((i, j), br)
            table[i][j] = coords
            table[j][i] = tuple(-c for c in coords)
    closed = SpannedAlgebra(A.basis, tuple(tuple(row) for row in table), n=A.n)
    closed._echelon = A._echelon
    return closed


def _in_span(x: Derivation, A: SpannedAlgebra) -> None:
    if A.coordinates(x) is None:
        raise PreconditionError(f"{x} is not in the span")


def centralizer(x: Derivation, A: SpannedAlgebra) -> list[Derivation]:
    """Basis of ``{y in span(A) : [x, y] = 0}``.

    Works on any span; closure is not needed since only brackets with ``x``
    are formed.
    """
    _in_span(x, A)
    images = [bracket(x, e).vector() for e in A.basis]
    return [A.element(c) for c in linalg.kernel(images)]


def center(A: SpannedAlgebra) -> list[Derivation]:
    m = A.dim
    # y = sum c_j e_j is central iff sum_j c_j [e_i, e_j] = 0 for all i
    images = []
    for j in range(m):
        v = {}
        for i in range(m):
            for k, c in bracket(A.basis[i], A.basis[j]).vector().items():
                v[(i, k)] = c
        images.append(v)
    return [A.element(c) for c in linalg.kernel(images)]


def derived(A: SpannedAlgebra) -> list[Derivation]:
    """Basis of the span of all brackets of basis elements."""
    A.require_closed()
    brs = [bracket(A.basis[i], A.basis[j]) for i in range(A.dim) for j in range(i + 1, A.dim)]
    return independent_basis(brs)


def is_abelian(A: SpannedAlgebra) -> bool:
    if A.structure is not None:
        return all(c == 0 for plane in A.structure for row in plane for c in row)
    return all(
        bracket(A.basis[i], A.basis[j]).is_zero() for i in range(A.dim) for j in range(i + 1, A.dim)
    )


def brackets_vanish(Ds: Sequence[Derivation]) -> bool:
    return all(bracket(Ds[i], Ds[j]).is_zero() for i in range(len(Ds)) for j in range(i + 1, len(Ds)))
