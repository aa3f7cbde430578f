"""Text format for polynomials and derivations.

Grammar (whitespace is insignificant, implicit multiplication is rejected)::

    expr       := sign? term (('+' | '-') term)*
    term       := factor ('*' factor)*
    factor     := atom ('^' nat)?
    atom       := rational | var | '(' expr ')'
    rational   := int ('/' nat)?
    var        := 'x' nat | 'x' | 'y' | 'z'
    derivation := sign? dterm (('+' | '-') dterm)*
    dterm      := (term '*')? 'd/d' var

Bare ``x``, ``y``, ``z`` name the first three variables and are only valid
when the ring has that many. The printer writes bare ``x`` when ``n == 1`` and
``x1 .. xn`` otherwise, so ``parse(print(v)) == v`` always holds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .deriv import Derivation
from .poly import Monomial, Poly

_BARE = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, text: str = ""):
        self.message = message
        self.span = span
        self.text = text
        super().__init__(f"{message} at {span.start}..{span.end}")


@dataclass(frozen=True)
class _Token:
    kind: str  # NUM VAR DIFF OP END
    text: str
    start: int
    end: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<DIFF>d/d(?:x\d+|[xyz]))|(?P<NUM>\d+)|(?P<VAR>x\d+|[xyz])|(?P<OP>[-+*^/()]))"
)


def _tokenize(s: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        m = _TOKEN_RE.match(s, pos)
        if not m or m.lastgroup is None:
            raise ParseError(f"unexpected character {s[pos]!r}", SourceSpan(pos, pos + 1), s)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind), m.end(kind)))
        pos = m.end()
    tokens.append(_Token("END", "", len(s), len(s)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.text = text
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tok
        return ParseError(message, SourceSpan(tok.start, tok.end), self.text)

    def at_op(self, op: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == op

    def expect_op(self, op: str) -> None:
        if not self.at_op(op):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {op!r}, found {found!r}")
        self.advance()

    def expect_end(self) -> None:
        if self.tok.kind != "END":
            raise self.error(f"expected end of input, found {self.tok.text!r}")

    def var_index(self, tok: _Token, name: str) -> int:
        if name in _BARE:
            idx = _BARE[name]
        else:
            idx = int(name[1:]) - 1
            if idx < 0:
                raise self.error("variables are numbered from x1", tok)
        if idx >= self.n:
            raise self.error(f"variable {name} out of range for {self.n} variable(s)", tok)
        return idx

    def nat(self) -> int:
        if self.tok.kind != "NUM":
            raise self.error("expected a natural number")
        return int(self.advance().text)

    def expr(self) -> Poly:
        negate = False
        if self.at_op("-") or self.at_op("+"):
            negate = self.advance().text == "-"
        value = self.term()
        if negate:
            value = -value
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self, stop_at_diff: bool = False) -> Poly:
        value = self.factor()
        while self.at_op("*"):
            if stop_at_diff and self.tokens[self.i + 1].kind == "DIFF":
                break
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Poly:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            base = base ** self.nat()
        return base

    def atom(self) -> Poly:
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            num = int(tok.text)
            if self.at_op("/"):
                self.advance()
                den_tok = self.tok
                den = self.nat()
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                return Poly.constant(Fraction(num, den), self.n)
            return Poly.constant(num, self.n)
        if tok.kind == "VAR":
            self.advance()
            return Poly.var(self.var_index(tok, tok.text), self.n)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        found = tok.text or "end of input"
        raise self.error(f"expected a number, variable or '(', found {found!r}")

    def diff(self) -> int:
        tok = self.tok
        if tok.kind != "DIFF":
            found = tok.text or "end of input"
            raise self.error(f"expected 'd/d<var>', found {found!r}")
        self.advance()
        return self.var_index(tok, tok.text[3:])

    def dterm(self) -> tuple[Poly, int]:
        if self.tok.kind == "DIFF":
            return Poly.one(self.n), self.diff()
        coeff = self.term(stop_at_diff=True)
        self.expect_op("*")
        return coeff, self.diff()

    def derivation(self) -> Derivation:
        coeffs = [Poly.zero(self.n) for _ in range(self.n)]
        if self.tok.kind == "NUM" and int(self.tok.text) == 0 and self.tokens[self.i + 1].kind == "END":
            self.advance()
            return Derivation(coeffs)
        sign = 1
        if self.at_op("-") or self.at_op("+"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            c, i = self.dterm()
            coeffs[i] = coeffs[i] + (c if sign > 0 else -c)
            if self.at_op("+") or self.at_op("-"):
                sign = 1 if self.advance().text == "+" else -1
            else:
                break
        return Derivation(coeffs)


def parse_poly(s: str, n: int) -> Poly:
    p = _Parser(s, n)
    value = p.expr()
    p.expect_end()
    return value


def parse_derivation(s: str, n: int) -> Derivation:
    p = _Parser(s, n)
    value = p.derivation()
    p.expect_end()
    return value


def var_name(i: int, n: int) -> str:
    return "x" if n == 1 else f"x{i + 1}"


def print_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _print_monomial(m: Monomial) -> str:
    n = len(m)
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(var_name(i, n))
        elif e > 1:
            parts.append(f"{var_name(i, n)}^{e}")
    return "*".join(parts)


def _signed_terms(p: Poly) -> list[tuple[bool, str]]:
    out = []
    for m, c in p.sorted_terms():
        neg = c < 0
        a = -c if neg else c
        mono = _print_monomial(m)
        if not mono:
            body = print_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{print_rational(a)}*{mono}"
        out.append((neg, body))
    return out


def _join(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    neg, body = parts[0]
    s = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        s += (" - " if neg else " + ") + body
    return s


def print_poly(p: Poly) -> str:
    return _join(_signed_terms(p))


def print_derivation(d: Derivation) -> str:
    parts = []
    for i, c in enumerate(d.coeffs):
        if c.is_zero():
            continue
        diff = "d/d" + var_name(i, d.n)
        terms = _signed_terms(c)
        if len(terms) == 1:
            neg, body = terms[0]
            if body == "1":
                parts.append((neg, diff))
            else:
                parts.append((neg, f"{body}*{diff}"))
        else:
            parts.append((False, f"({_join(terms)})*{diff}"))
    return _join(parts)
