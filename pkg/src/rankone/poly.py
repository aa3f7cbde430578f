"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` in ``n`` variables maps exponent tuples to nonzero
:class:`fractions.Fraction` coefficients. Values are immutable. Variables are
indexed from 0, so ``Poly.var(0, 2)`` is ``x1`` in a two-variable ring.

The monomial order is graded lexicographic with ``x1 > x2 > ... > xn``; it
fixes leading terms, printing order and the normalization of gcds.

GCDs are computed recursively: the smallest occurring variable is treated as
the main variable, contents are split off with recursive gcd calls over the
remaining variables, and the primitive parts go through a subresultant
pseudo-remainder sequence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import DimensionMismatch, NotDivisible, ZeroInput

Monomial = tuple[int, ...]


def gradlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, n: int = 1):
        if n < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for n={n}")
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], n: int) -> Poly:
        # caller guarantees clean input
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c, n: int) -> Poly:
        c = _as_fraction(c)
        return cls._raw({(0,) * n: c} if c else {}, n)

    @classmethod
    def one(cls, n: int) -> Poly:
        return cls.constant(1, n)

    @classmethod
    def var(cls, i: int, n: int) -> Poly:
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        mono = tuple(1 if j == i else 0 for j in range(n))
        return cls._raw({mono: Fraction(1)}, n)

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> Poly:
        return cls({tuple(mono): c}, len(mono))

    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.n, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def variables(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: gradlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ZeroInput("zero polynomial has no leading term")
        m = max(self._terms, key=gradlex_key)
        return m, self._terms[m]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> Poly:
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self._raw({m: c / lc for m, c in self._terms.items()}, self.n)

    # arithmetic

    def _check(self, other: Poly) -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"polynomials in {self.n} and {other.n} variables")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Poly.constant(other, self.n)
        return None

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({m: -c for m, c in self._terms.items()}, self.n)

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Poly:
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.n)
        return Poly._raw({m: c * v for m, v in self._terms.items()}, self.n)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c}, self.n)

    def __rmul__(self, other) -> Poly:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, c=1) -> Poly:
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.n)
        return Poly._raw(
            {tuple(a + b for a, b in zip(m, mono)): c * v for m, v in self._terms.items()},
            self.n,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .textio import print_poly

        return f"Poly({print_poly(self)!r}, n={self.n})"

    def __str__(self) -> str:
        from .textio import print_poly

        return print_poly(self)

    # calculus and evaluation

    def partial(self, i: int) -> Poly:
        return partial(self, i)

    def compose(self, values: list[Poly]) -> Poly:
        """Substitute ``values[i]`` for the i-th variable.

        All substituted polynomials must share one ring, which may differ from
        the ring of ``self``.
        """
        if len(values) != self.n:
            raise DimensionMismatch("need one substitution per variable")
        target = values[0].n
        out = Poly.zero(target)
        powers: list[dict[int, Poly]] = [{0: Poly.one(target)} for _ in values]
        for m, c in self._terms.items():
            t = Poly.constant(c, target)
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = values[i] ** e
                    t = t * cache[e]
            out = out + t
        return out

    def __call__(self, *point) -> Fraction:
        if len(point) != self.n:
            raise DimensionMismatch("need one value per variable")
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(point, m):
                if e:
                    t *= Fraction(v) ** e
            total += t
        return total

    # recursive view in one variable

    def coefficients_in(self, i: int) -> dict[int, Poly]:
        """Split as a univariate polynomial in the i-th variable.

        Returns ``{degree: coefficient}`` where coefficients do not involve
        the i-th variable.
        """
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            e = m[i]
            parts.setdefault(e, {})[m[:i] + (0,) + m[i + 1 :]] = c
        return {e: Poly._raw(t, self.n) for e, t in parts.items()}

    def leading_coefficient_in(self, i: int) -> Poly:
        d = self.degree_in(i)
        return Poly._raw(
            {m[:i] + (0,) + m[i + 1 :]: c for m, c in self._terms.items() if m[i] == d},
            self.n,
        )


def _check_same(p: Poly, q: Poly) -> None:
    if p.n != q.n:
        raise DimensionMismatch(f"polynomials in {p.n} and {q.n} variables")


def add(p: Poly, q: Poly) -> Poly:
    _check_same(p, q)
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    _check_same(p, q)
    return p * q


def partial(p: Poly, i: int) -> Poly:
    """Formal partial derivative with respect to the i-th variable (0-based)."""
    if not 0 <= i < p.n:
        raise IndexError(f"variable index {i} out of range for n={p.n}")
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1 :]] = c * e
    return Poly._raw(out, p.n)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide_exact(p: Poly, d: Poly) -> Poly:
    """Return ``c`` with ``p == c * d``; raise :class:`NotDivisible` otherwise."""
    _check_same(p, d)
    if d.is_zero():
        raise ZeroInput("division by the zero polynomial")
    if p.is_zero():
        return p
    dm, dc = d.leading_term()
    if len(d) == 1:
        if not all(_divides(dm, m) for m in p._terms):
            raise NotDivisible("monomial divisor leaves a remainder")
        return Poly._raw(
            {tuple(a - b for a, b in zip(m, dm)): c / dc for m, c in p._terms.items()}, p.n
        )
    dterms = list(d._terms.items())
    r = dict(p._terms)
    quotient: dict[Monomial, Fraction] = {}
    while r:
        m = max(r, key=gradlex_key)
        if not _divides(dm, m):
            raise NotDivisible("leading term of the remainder is not divisible")
        t = tuple(a - b for a, b in zip(m, dm))
        tc = r[m] / dc
        quotient[t] = tc
        for mm, cc in dterms:
            key = tuple(a + b for a, b in zip(mm, t))
            v = r.get(key, 0) - tc * cc
            if v:
                r[key] = v
            else:
                r.pop(key, None)
    return Poly._raw(quotient, p.n)


def _prem(a: Poly, b: Poly, v: int) -> Poly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, in variable v."""
    db = b.degree_in(v)
    lcb = b.leading_coefficient_in(v)
    r = a
    e = a.degree_in(v) - db + 1
    while r and r.degree_in(v) >= db:
        shift = tuple(r.degree_in(v) - db if j == v else 0 for j in range(a.n))
        r = lcb * r - (r.leading_coefficient_in(v).mul_monomial(shift)) * b
        e -= 1
    return lcb**e * r if e > 0 else r


def _content_in(p: Poly, v: int) -> Poly:
    coeffs = p.coefficients_in(v).values()
    g = None
    for c in coeffs:
        g = c.monic() if g is None else _gcd(g, c)
        if g.is_constant():
            return Poly.one(p.n)
    return g


def _subresultant_gcd(a: Poly, b: Poly, v: int) -> Poly:
    # a, b primitive in v with positive degree in v
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    g = Poly.one(a.n)
    h = Poly.one(a.n)
    while True:
        delta = a.degree_in(v) - b.degree_in(v)
        r = _prem(a, b, v)
        if r.is_zero():
            return divide_exact(b, _content_in(b, v))
        if r.degree_in(v) == 0:
            return Poly.one(a.n)
        a, b = b, divide_exact(r, g * h**delta)
        g = a.leading_coefficient_in(v)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divide_exact(g**delta, h ** (delta - 1))


def _gcd(p: Poly, q: Poly) -> Poly:
    # gcd up to a unit; both nonzero
    if p.is_constant() or q.is_constant():
        return Poly.one(p.n)
    if len(p) == 1 and len(q) == 1:
        m = tuple(min(a, b) for a, b in zip(next(iter(p._terms)), next(iter(q._terms))))
        return Poly.monomial(m)
    used = p.variables() | q.variables()
    v = min(used)
    cp, cq = _content_in(p, v), _content_in(q, v)
    c = _gcd(cp, cq)
    pp, qq = divide_exact(p, cp), divide_exact(q, cq)
    if pp.degree_in(v) <= 0 or qq.degree_in(v) <= 0:
        return c
    # cheap exits before the PRS
    for small, big in ((pp, qq), (qq, pp)):
        if len(small) <= len(big):
            try:
                divide_exact(big, small)
            except NotDivisible:
                pass
            else:
                return c * small
    return c * _subresultant_gcd(pp, qq, v)


def gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, monic in graded lexicographic order."""
    _check_same(p, q)
    if p.is_zero() and q.is_zero():
        raise ZeroInput("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    return _gcd(p, q).monic()


def content(ps: Iterable[Poly]) -> Poly:
    """Monic gcd of all entries; zero entries are ignored."""
    nonzero = [p for p in ps if p]
    if not nonzero:
        raise ZeroInput("content of an all-zero list")
    return reduce(gcd, nonzero[1:], nonzero[0].monic())
