"""Command-line front end (``wpq``)."""

from __future__ import annotations

import argparse
import os
import sys

from . import compositions as wc
from . import hopf, oracle, verify
from . import rota_baxter as rb
from .element import BasisMismatch, Element, ElementParseError, format_element, parse_element
from .expansions import UnsupportedConversion, convert
from .products import product
from .scalar import Scalar, parse_scalar
from .words import InvalidWord, parse_word, poset_word, word_to_F, word_to_K

DEFAULT_CEILING = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ceiling() -> int:
    raw = os.environ.get("WPQ_MAX_TOTAL_WEIGHT")
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"WPQ_MAX_TOTAL_WEIGHT must be an integer, got {raw!r}") from None


def _guard(alphas):
    # only the algebraic and enumerative commands are capped; statistics and
    # relations between indices stay cheap at any size
    cap = _ceiling()
    for a in alphas:
        if wc.total_weight(a) > cap:
            raise UsageError(
                f"total weight {wc.total_weight(a)} of {wc.format_composition(a)} exceeds "
                f"the ceiling {cap} (set WPQ_MAX_TOTAL_WEIGHT to raise it)"
            )


def _element(text: str, basis: str) -> Element:
    """Either a bare weak composition or an element expression like ``2*K[0,1]``."""
    if "[" in text:
        x = parse_element(text)
        if x.basis != basis:
            raise UsageError(f"expected basis {basis}, got {x.basis}")
    else:
        x = Element.gen(basis, wc.parse_composition(text))
    _guard(x.support())
    return x


def _scalar(text: str) -> Scalar:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wpq", description="Weak composition and weak peak quasisymmetric functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="change of basis on one index")
    e.add_argument("--from", dest="source", choices="MFK", required=True)
    e.add_argument("--to", dest="target", choices="MFK", required=True)
    e.add_argument("alpha")

    m = sub.add_parser("mul", help="product of two generators or elements")
    m.add_argument("--basis", choices="MFK", required=True)
    m.add_argument("x")
    m.add_argument("y")

    c = sub.add_parser("comul", help="coproduct")
    c.add_argument("--basis", choices="MFK", required=True)
    c.add_argument("x")

    a = sub.add_parser("antipode")
    a.add_argument("--basis", choices="MFK", required=True)
    a.add_argument("x")

    mp = sub.add_parser("map", help="phi, theta, Theta, rho, pi or phi_b")
    mp.add_argument("name", choices=["phi", "theta", "Theta", "rho", "pi", "phi_b"])
    mp.add_argument("--basis", choices="MFK", help="input basis where several are allowed")
    mp.add_argument("--b", help="scalar for phi_b, INT or INT/INT")
    mp.add_argument("x")

    r = sub.add_parser("rb", help="Rota-Baxter operators")
    r.add_argument("op", choices=["P", "Phat"])
    r.add_argument("--basis", choices="MFK", default="K")
    r.add_argument("x")

    t = sub.add_parser("tau", help="canonical class representative")
    t.add_argument("alpha")

    pk = sub.add_parser("peaks", help="descent and peak sets")
    pk.add_argument("alpha")

    inf = sub.add_parser("info", help="statistics, structural maps and poset word of an index")
    inf.add_argument("alpha")

    rel = sub.add_parser("relation", help="refinement and mutation relations between two indices")
    rel.add_argument("alpha")
    rel.add_argument("beta")

    wd = sub.add_parser("word", help="expand a poset word, e.g. \"8 1' 4' 2' 9\"")
    wd.add_argument("--basis", choices="FK", required=True)
    wd.add_argument("word")

    o = sub.add_parser("oracle", help="brute-force enumerators")
    o.add_argument("kind", choices=["lambda", "gamma", "product"])
    o.add_argument("--vars", type=int, required=True, dest="N")
    o.add_argument("--basis", choices="MFK", default="K")
    o.add_argument("alpha")
    o.add_argument("beta", nargs="?")

    b = sub.add_parser("basis", help="list canonical representatives")
    b.add_argument("n", type=int)
    b.add_argument("--max-zero-length", type=int, default=2)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    v.add_argument("--max-total-weight", type=int, default=verify.DEFAULT_BOUND)
    v.add_argument("--seed", type=int, default=0)
    return p


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _default_basis(name: str, given):
    allowed = {
        "phi": "MF",
        "theta": "F",
        "Theta": "F",
        "rho": "K",
        "pi": "FK",
        "phi_b": "F",
    }[name]
    basis = given or allowed[-1 if name == "pi" else 0]
    if name == "phi" and given is None:
        basis = "F"
    if basis not in allowed:
        raise UsageError(f"{name} accepts basis {' or '.join(allowed)}, got {basis}")
    return basis


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "expand":
        x = _element(args.alpha, args.source)
        out.write(format_element(convert(x, args.target)) + "\n")
    elif cmd == "mul":
        x, y = _element(args.x, args.basis), _element(args.y, args.basis)
        out.write(format_element(product(x, y)) + "\n")
    elif cmd == "comul":
        out.write(str(hopf.coproduct(_element(args.x, args.basis))) + "\n")
    elif cmd == "antipode":
        out.write(format_element(hopf.antipode(_element(args.x, args.basis))) + "\n")
    elif cmd == "map":
        basis = _default_basis(args.name, args.basis)
        x = _element(args.x, basis)
        if args.name == "phi_b":
            if args.b is None:
                raise UsageError("phi_b needs --b")
            y = hopf.map_phi_b(x, _scalar(args.b))
        else:
            fn = {
                "phi": hopf.map_phi,
                "theta": hopf.map_theta,
                "Theta": hopf.map_Theta,
                "rho": hopf.map_rho,
                "pi": hopf.map_pi,
            }[args.name]
            y = fn(x)
        out.write(format_element(y) + "\n")
    elif cmd == "rb":
        if args.op == "Phat" and args.basis != "K":
            raise UsageError("Phat acts on the K basis")
        x = _element(args.x, args.basis)
        out.write(format_element(rb.OPERATORS[args.op](x)) + "\n")
    elif cmd == "tau":
        a = wc.parse_composition(args.alpha)
        out.write(wc.format_composition(wc.canonical_form(a)) + "\n")
    elif cmd == "peaks":
        a = wc.parse_composition(args.alpha)
        out.write(f"D={_fmt_set(wc.descent_set(a))} P={_fmt_set(wc.peak_set(a))}\n")
    elif cmd == "info":
        _info(wc.parse_composition(args.alpha), out)
    elif cmd == "relation":
        a, b = wc.parse_composition(args.alpha), wc.parse_composition(args.beta)
        yes = lambda flag: "yes" if flag else "no"
        out.write(f"refines: {yes(wc.refines(b, a))}\n")
        out.write(f"mutation multiplicity: {wc.mutation_decompositions(a).get(b, 0)}\n")
        out.write(f"mutates: {yes(wc.mutates_to(b, a))}\n")
        out.write(f"vdash: {yes(wc.vdash(b, a))}\n")
    elif cmd == "word":
        w = parse_word(args.word)
        expand = word_to_K if args.basis == "K" else word_to_F
        out.write(format_element(expand(w)) + "\n")
    elif cmd == "oracle":
        return _oracle(args, out)
    elif cmd == "basis":
        _guard([(0,) * args.max_zero_length + (args.n,)] if args.n else [(0,) * args.max_zero_length])
        reps = sorted(
            {wc.canonical_form(a) for a in wc.enumerate_weak(args.n, args.max_zero_length)},
            key=wc.sort_key,
        )
        for a in reps:
            out.write(wc.format_composition(a) + "\n")
    elif cmd == "verify":
        if args.max_total_weight > _ceiling():
            raise UsageError(f"--max-total-weight {args.max_total_weight} exceeds the ceiling {_ceiling()}")
        results = verify.run_suite(args.suite, args.max_total_weight, args.seed)
        out.write(verify.format_report(results) + "\n")
        return 0 if verify.all_passed(results) else 1
    return 0


def _info(a, out) -> None:
    f = wc.format_composition
    rows = [
        ("weight", wc.weight(a)),
        ("total weight", wc.total_weight(a)),
        ("length", wc.length(a)),
        ("zero length", wc.zero_length(a)),
        ("descents", _fmt_set(wc.descent_set(a))),
        ("peaks", _fmt_set(wc.peak_set(a))),
        ("reverse", f(wc.reverse(a))),
        ("complement", f(wc.complement(a))),
        ("transpose", f(wc.transpose(a))),
        ("tau", f(wc.canonical_form(a))),
        ("poset word", str(poset_word(a)) or "e"),
    ]
    for name, value in rows:
        out.write(f"{name}: {value}\n")


def _oracle(args, out) -> int:
    if args.N < 0:
        raise UsageError("--vars must be non-negative")
    a = wc.parse_composition(args.alpha)
    _guard([a])
    if args.kind in ("lambda", "gamma"):
        if args.beta is not None:
            raise UsageError(f"oracle {args.kind} takes one index")
        basis = "K" if args.kind == "lambda" else "F"
        series = (oracle.enumerate_enriched if basis == "K" else oracle.enumerate_ordinary)(
            poset_word(a), args.N
        )
        expected = oracle.realize(Element.gen(basis, a), args.N)
        out.write(oracle.format_series(series) + "\n")
        same = series == expected
        out.write(f"matches expansion of {basis}[{wc.format_composition(a)}]: {'yes' if same else 'no'}\n")
        return 0 if same else 1
    if args.beta is None:
        raise UsageError("oracle product takes two indices")
    b = wc.parse_composition(args.beta)
    _guard([b])
    x, y = Element.gen(args.basis, a), Element.gen(args.basis, b)
    lhs = oracle.realize(x, args.N) * oracle.realize(y, args.N)
    rhs = oracle.realize(product(x, y), args.N)
    out.write(oracle.format_series(lhs) + "\n")
    out.write(f"series product matches algebra product: {'yes' if lhs == rhs else 'no'}\n")
    return 0 if lhs == rhs else 1


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out)
    except (UsageError, wc.ParseError, ElementParseError, BasisMismatch, UnsupportedConversion, InvalidWord) as exc:
        err.write(f"wpq: error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"wpq: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
