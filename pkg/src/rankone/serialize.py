"""JSON and one-line text renderings of classifier outcomes.

Derivations and polynomials are embedded as strings in the :mod:`textio`
grammar, rationals as ``"a/b"`` strings, so every document can be read back
with :func:`outcome_from_dict` / :func:`w1_from_dict`.
"""

from __future__ import annotations

from fractions import Fraction

from . import classify as cl
from . import w1
from .deriv import Derivation
from .textio import parse_derivation, parse_poly, print_derivation, print_poly, print_rational


def _vec(v) -> list[str]:
    return [print_rational(Fraction(x)) for x in v]


def _item(x) -> object:
    return print_derivation(x) if isinstance(x, Derivation) else _vec(x)


def _vec_text(v) -> str:
    return "(" + ", ".join(_vec(v)) + ")"


def _item_text(x) -> str:
    return print_derivation(x) if isinstance(x, Derivation) else _vec_text(x)


def outcome_to_dict(out, n: int | None = None) -> dict:
    doc: dict = {"variant": out.variant, "dimension": out.dim}
    if n is not None:
        doc["vars"] = n
    doc["basis"] = [print_derivation(D) for D in out.basis]
    if isinstance(out, cl.AlmostAbelian):
        doc["ideal"] = [_item(a) for a in out.ideal]
        doc["witness_b"] = _item(out.b)
        if out.eigenvalues:
            doc["eigenvalues"] = _vec(out.eigenvalues)
    elif isinstance(out, cl.Sl2):
        if out.triple is not None:
            doc["triple"] = dict(zip("ehf", (_item(t) for t in out.triple)))
    elif isinstance(out, cl.HypothesisViolated):
        doc["reason"] = out.reason
        if out.detail:
            doc["detail"] = out.detail
    elif isinstance(out, cl.NotClosedOutcome):
        doc["pair"] = list(out.pair)
        doc["escape"] = print_derivation(out.escape)
    return doc


def outcome_from_dict(doc: dict):
    """Inverse of :func:`outcome_to_dict` for derivation-valued outcomes (needs ``vars``)."""
    n = doc["vars"]

    def der(s):
        return parse_derivation(s, n) if isinstance(s, str) else tuple(Fraction(x) for x in s)

    basis = tuple(parse_derivation(s, n) for s in doc.get("basis", []))
    variant = doc["variant"]
    if variant == "Abelian":
        return cl.Abelian(doc["dimension"], basis)
    if variant == "AlmostAbelian":
        return cl.AlmostAbelian(
            doc["dimension"],
            tuple(der(a) for a in doc["ideal"]),
            der(doc["witness_b"]),
            tuple(Fraction(x) for x in doc.get("eigenvalues", [])),
            basis,
        )
    if variant == "Sl2":
        t = doc.get("triple")
        return cl.Sl2(tuple(der(t[k]) for k in "ehf") if t else None, basis)
    if variant == "HypothesisViolated":
        return cl.HypothesisViolated(doc["reason"], doc.get("detail", ""), basis)
    if variant == "NotClosed":
        return cl.NotClosedOutcome(tuple(doc["pair"]), parse_derivation(doc["escape"], n), basis)
    raise ValueError(f"unknown variant {variant!r}")


def outcome_text(out) -> str:
    if isinstance(out, cl.Abelian):
        return f"Abelian, dimension {out.dim}"
    if isinstance(out, cl.AlmostAbelian):
        ideal = ", ".join(_item_text(a) for a in out.ideal)
        return f"AlmostAbelian, dimension {out.dim}, ideal <{ideal}>, b={_item_text(out.b)}"
    if isinstance(out, cl.Sl2):
        if out.triple is None:
            return "Sl2 over the algebraic closure, no rational triple found"
        e, h, f = (_item_text(t) for t in out.triple)
        return f"Sl2, triple e={e}, h={h}, f={f}"
    if isinstance(out, cl.HypothesisViolated):
        return f"HypothesisViolated: {out.reason}" + (f" ({out.detail})" if out.detail else "")
    if isinstance(out, cl.NotClosedOutcome):
        i, j = out.pair
        return f"NotClosed: [e{i}, e{j}] = {print_derivation(out.escape)} leaves the span"
    raise TypeError(out)


def w1_to_dict(out) -> dict:
    doc: dict = {"variant": out.variant}
    if isinstance(out, w1.OneDim):
        doc["generator"] = print_derivation(out.generator)
    elif isinstance(out, w1.Fk):
        doc["k"] = out.k
        doc["q"] = print_poly(out.q)
        if out.scale != 1:
            doc["scale"] = print_rational(Fraction(out.scale))
    elif isinstance(out, w1.FkBeta):
        doc["k"] = out.k
        doc["beta"] = print_rational(Fraction(out.beta))
    elif isinstance(out, w1.FBeta):
        doc["beta"] = print_rational(Fraction(out.beta))
    elif isinstance(out, w1.NotSubalgebra):
        doc["reason"] = out.reason
        if out.witness is not None:
            doc["witness"] = print_derivation(out.witness)
    return doc


def w1_from_dict(doc: dict):
    variant = doc["variant"]
    if variant == "OneDim":
        return w1.OneDim(parse_derivation(doc["generator"], 1))
    if variant == "Fk":
        return w1.Fk(doc["k"], parse_poly(doc["q"], 1), Fraction(doc.get("scale", "1")))
    if variant == "FkBeta":
        return w1.FkBeta(doc["k"], Fraction(doc["beta"]))
    if variant == "FBeta":
        return w1.FBeta(Fraction(doc["beta"]))
    if variant == "NotSubalgebra":
        wit = doc.get("witness")
        return w1.NotSubalgebra(doc["reason"], parse_derivation(wit, 1) if wit else None)
    raise ValueError(f"unknown variant {variant!r}")


def w1_text(out) -> str:
    if isinstance(out, w1.OneDim):
        return f"OneDim, generator {print_derivation(out.generator)}"
    if isinstance(out, w1.Fk):
        tail = f", scale={print_rational(Fraction(out.scale))}" if out.scale != 1 else ""
        return f"Fk, k={out.k}, q={print_poly(out.q)}{tail}"
    if isinstance(out, w1.FkBeta):
        return f"FkBeta, k={out.k}, beta={print_rational(Fraction(out.beta))}"
    if isinstance(out, w1.FBeta):
        return f"FBeta, beta={print_rational(Fraction(out.beta))}"
    if isinstance(out, w1.NotSubalgebra):
        tail = f", witness {print_derivation(out.witness)}" if out.witness is not None else ""
        return f"NotSubalgebra: {out.reason}{tail}"
    raise TypeError(out)
