"""Command-line interface.

Derivations and polynomials are given in the text grammar of
:mod:`rankone.textio`. Arguments that start with ``-`` (such as ``-d/dx``)
are accepted as positionals. Exit codes: 0 success, 1 typed domain error,
2 parse error or bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classify as cl
from . import construct, suites, w1
from .deriv import apply, bracket, reduce
from .errors import RankOneError
from .poly import Poly
from .serialize import outcome_text, outcome_to_dict, w1_text, w1_to_dict
from .span import centralizer, span
from .textio import ParseError, parse_derivation, parse_poly, print_derivation, print_poly, print_rational

COMMANDS = """\
commands:
  bracket D1 D2                     bracket of two derivations
  apply D f                         apply a derivation to a polynomial
  reduce D                          content and reduced direction
  classify D1 D2 ...                classify a rank-one span
  classify-abstract TENSOR          classify a structure tensor given as JSON c[i][j][k]
  centralizer X in D1 D2 ...        centralizer of X inside the span
  construct KIND [PARAMS]           abelian M | almost-abelian M | sl2 | fk K | fbeta
  w1-classify D1 ...                identify a univariate family (optional --q)
  w1-normalize D1 ...               classify and translate beta to 0
  verify prop1|theorem1|prop3       run a verification suite:
                                      prop1     centralizers in random rank-one spans are abelian
                                      theorem1  constructed algebras classify as predicted
                                      prop3     univariate families and the lattice search
"""


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rankone",
        description="Exact computations with polynomial vector fields.",
        epilog=COMMANDS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--vars", type=int, default=1, help="number of variables (default 1)")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized suites (default $RANKONE_SEED or 0)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--beta", default="0", help="beta for construct fk/fbeta")
    p.add_argument("--q", default=None, help="generator q of q(x)K[x]d/dx for w1 commands")
    p.add_argument("--no-lattice", action="store_true", help="skip the exhaustive lattice part of verify prop3")
    return p


class _Ctx:
    def __init__(self, opts, out):
        self.n = opts.vars
        self.json = opts.format == "json"
        self.opts = opts
        self.out = out

    def der(self, s):
        return parse_derivation(s, self.n)

    def emit(self, human: str, doc: dict) -> None:
        if self.json:
            self.out.write(json.dumps(doc) + "\n")
        else:
            self.out.write(human + "\n")


def _need(args, count: int, usage: str) -> None:
    if len(args) != count:
        raise UsageError(f"usage: {usage}")


def _cmd_bracket(ctx, args):
    _need(args, 2, "bracket D1 D2")
    r = print_derivation(bracket(ctx.der(args[0]), ctx.der(args[1])))
    ctx.emit(r, {"result": r})


def _cmd_apply(ctx, args):
    _need(args, 2, "apply D f")
    r = print_poly(apply(ctx.der(args[0]), parse_poly(args[1], ctx.n)))
    ctx.emit(r, {"result": r})


def _cmd_reduce(ctx, args):
    _need(args, 1, "reduce D")
    red = reduce(ctx.der(args[0]))
    c, d = print_poly(red.content), print_derivation(red.direction)
    ctx.emit(f'content "{c}", direction "{d}"', {"content": c, "direction": d})


def _cmd_classify(ctx, args):
    if not args:
        raise UsageError("usage: classify D1 D2 ...")
    out = cl.classify_rank_one([ctx.der(s) for s in args])
    ctx.emit(outcome_text(out), outcome_to_dict(out))


def _cmd_classify_abstract(ctx, args):
    _need(args, 1, "classify-abstract TENSOR")
    try:
        tensor = json.loads(args[0])
    except json.JSONDecodeError as exc:
        raise UsageError(f"tensor is not valid JSON: {exc}") from exc
    out = cl.classify_abstract(tensor)
    doc = outcome_to_dict(out)
    doc.pop("basis")
    ctx.emit(outcome_text(out), doc)


def _cmd_centralizer(ctx, args):
    if len(args) < 3 or args[1] != "in":
        raise UsageError("usage: centralizer X in D1 D2 ...")
    x = ctx.der(args[0])
    A = span([ctx.der(s) for s in args[2:]], ctx.n)
    basis = [print_derivation(D) for D in centralizer(x, A)]
    ctx.emit("\n".join(basis) if basis else "0", {"basis": basis})


def _cmd_construct(ctx, args):
    if not args:
        raise UsageError("usage: construct abelian M | almost-abelian M | sl2 | fk K | fbeta")
    kind, rest = args[0], args[1:]
    beta = Fraction(ctx.opts.beta)
    if kind in ("abelian", "almost-abelian"):
        _need(rest, 1, f"construct {kind} M")
        fn = construct.abelian_example if kind == "abelian" else construct.almost_abelian_example
        A = fn(int(rest[0]), ctx.n)
    elif kind == "sl2":
        _need(rest, 0, "construct sl2")
        A = construct.sl2_example(ctx.n)
    elif kind == "fk":
        _need(rest, 1, "construct fk K [--beta B]")
        A = construct.f_k_beta(int(rest[0]), beta)
    elif kind == "fbeta":
        _need(rest, 0, "construct fbeta [--beta B]")
        A = construct.f_of_beta(beta)
    else:
        raise UsageError(f"unknown construction {kind!r}")
    basis = [print_derivation(D) for D in A.basis]
    ctx.emit("\n".join(basis), {"basis": basis, "closed": A.closed})


def _w1_input(ctx, args, name):
    if not args:
        raise UsageError(f"usage: {name} D1 ... [--q Q]")
    if ctx.n != 1:
        raise UsageError(f"{name} works with --vars 1")
    q = parse_poly(ctx.opts.q, 1) if ctx.opts.q is not None else None
    return [ctx.der(s) for s in args], q


def _cmd_w1_classify(ctx, args):
    basis, q = _w1_input(ctx, args, "w1-classify")
    out = w1.classify_w1(basis, q)
    ctx.emit(w1_text(out), w1_to_dict(out))


def _cmd_w1_normalize(ctx, args):
    basis, q = _w1_input(ctx, args, "w1-normalize")
    normal, t = w1.normalize_w1(w1.classify_w1(basis, q))
    moved = [print_derivation(w1.affine_change(D, t.alpha, t.beta)) for D in basis]
    alpha, shift = print_rational(t.alpha), print_rational(t.beta)
    sub = print_poly(Poly.var(0, 1).scale(t.alpha) + t.beta).replace("x", "y")
    human = f"{w1_text(normal)}\nsubstitution x = {sub}\n" + "\n".join(moved)
    doc = {"outcome": w1_to_dict(normal), "alpha": alpha, "beta": shift, "basis": moved}
    ctx.emit(human, doc)


def _cmd_verify(ctx, args):
    _need(args, 1, "verify prop1|theorem1|prop3")
    suite = args[0]
    seed = ctx.opts.seed
    if suite == "prop1":
        rep = suites.centralizer_suite(ctx.opts.trials, seed)
        human = f"{rep.passed}/{rep.total} centralizers abelian"
    elif suite == "theorem1":
        rep = suites.round_trip_suite(ctx.opts.max_dim)
        human = f"{rep.passed}/{rep.total} round trips consistent"
    elif suite == "prop3":
        rep = suites.univariate_suite(lattice=not ctx.opts.no_lattice)
        human = f"{rep.passed}/{rep.total} checks passed"
    else:
        raise UsageError(f"unknown suite {suite!r}")
    if suite == "prop1":
        print(f"seed: {seed}", file=sys.stderr)
    for f in rep.failures:
        print(f"FAIL {f}", file=sys.stderr)
    doc = {"suite": suite, "total": rep.total, "passed": rep.passed, "failed": rep.total - rep.passed}
    if suite == "prop1":
        doc["seed"] = seed
    ctx.emit(human, doc)
    return 0 if rep.ok else 1


DISPATCH = {
    "bracket": _cmd_bracket,
    "apply": _cmd_apply,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
    "classify-abstract": _cmd_classify_abstract,
    "centralizer": _cmd_centralizer,
    "construct": _cmd_construct,
    "w1-classify": _cmd_w1_classify,
    "w1-normalize": _cmd_w1_normalize,
    "verify": _cmd_verify,
}


def _default_seed() -> int:
    env = os.environ.get("RANKONE_SEED")
    try:
        return int(env) if env else 0
    except ValueError:
        return 0


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        opts, rest = parser.parse_known_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if opts.seed is None:
        opts.seed = _default_seed()
    unknown = [a for a in rest if a.startswith("--")]
    if unknown:
        err.write(f"rankone: unknown option {unknown[0]}\n")
        return 2
    if not rest or rest[0] not in DISPATCH:
        err.write(f"rankone: expected a command\n{COMMANDS}" if not rest else f"rankone: unknown command {rest[0]!r}\n")
        return 2
    if opts.vars < 1:
        err.write("rankone: --vars must be at least 1\n")
        return 2
    ctx = _Ctx(opts, out)
    old = sys.stderr
    sys.stderr = err
    try:
        return DISPATCH[rest[0]](ctx, rest[1:]) or 0
    except ParseError as exc:
        err.write(f"ParseError at {exc.span.start}..{exc.span.end}: {exc.message}\n")
        if exc.text:
            err.write(f"  {exc.text}\n  {' ' * exc.span.start}{'^' * max(1, exc.span.end - exc.span.start)}\n")
        return 2
    except UsageError as exc:
        err.write(f"rankone: {exc}\n")
        return 2
    except (RankOneError, ValueError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    finally:
        sys.stderr = old


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
