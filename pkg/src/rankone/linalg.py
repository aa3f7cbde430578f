"""Exact Gaussian elimination on sparse rational vectors.

Vectors are dicts from hashable, mutually comparable keys to nonzero
Fractions. :class:`Echelon` keeps a triangular set of pivot rows together with
the combination of inserted vectors each row stands for, which is enough for
ranks, membership with coordinates, and kernels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Sequence

Vector = dict


def axpy(y: dict, a: Fraction, x: dict) -> None:
    """In place ``y += a * x``, dropping zeros."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    def __init__(self):
        self.rows: list[tuple[Hashable, dict, dict]] = []  # (pivot key, row, combination)

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict) -> tuple[dict, dict]:
        r = dict(v)
        combo: dict = {}
        for key, row, rc in self.rows:
            c = r.get(key)
            if c:
                f = c / row[key]
                axpy(r, -f, row)
                axpy(combo, f, rc)
        return r, combo

    def add(self, v: dict, label) -> dict | None:
        """Insert ``v`` under ``label``.

        Returns None when ``v`` was independent of the earlier vectors;
        otherwise returns ``{label: coefficient}`` with ``v = sum coeff * vectors[label]``.
        """
        r, combo = self._reduce(v)
        if not r:
            return combo
        own = {label: Fraction(1)}
        axpy(own, Fraction(-1), combo)
        self.rows.append((min(r), r, own))
        return None

    def express(self, v: dict) -> dict | None:
        """Coefficients of ``v`` over inserted labels, or None if ``v`` is outside the span."""
        r, combo = self._reduce(v)
        return None if r else combo


def independent_indices(vectors: Sequence[dict]) -> list[int]:
    ech = Echelon()
    return [j for j, v in enumerate(vectors) if ech.add(v, j) is None]


def rank(vectors: Sequence[dict]) -> int:
    return len(independent_indices(vectors))


def kernel(vectors: Sequence[dict]) -> list[list[Fraction]]:
    """Basis of ``{c : sum c_j vectors[j] = 0}`` as dense coefficient lists."""
    m = len(vectors)
    ech = Echelon()
    out = []
    for j, v in enumerate(vectors):
        dep = ech.add(v, j)
        if dep is not None:
            c = [Fraction(0)] * m
            c[j] = Fraction(1)
            for l, a in dep.items():
                c[l] -= a
            out.append(c)
    return out


def solve(vectors: Sequence[dict], target: dict) -> list[Fraction] | None:
    """Coordinates of ``target`` over ``vectors`` (dependent entries get coefficient 0), or None."""
    ech = Echelon()
    for j, v in enumerate(vectors):
        ech.add(v, j)
    combo = ech.express(target)
    if combo is None:
        return None
    return [combo.get(j, Fraction(0)) for j in range(len(vectors))]


def dense_to_sparse(row: Sequence) -> dict:
    return {j: Fraction(x) for j, x in enumerate(row) if x}


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; ValueError when singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)] for row in a]


def rref(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form, pivots equal to 1."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return []
    width = len(a[0])
    out_rows = 0
    for col in range(width):
        piv = next((r for r in range(out_rows, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[out_rows], a[piv] = a[piv], a[out_rows]
        p = a[out_rows][col]
        a[out_rows] = [x / p for x in a[out_rows]]
        for r in range(len(a)):
            if r != out_rows and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[out_rows])]
        out_rows += 1
    return a[:out_rows]
