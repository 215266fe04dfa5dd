"""Command-line interface.

Exit codes: 0 success, 1 invalid input or complex, 2 computation cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import alexander as alex_mod
from . import cfk, invariants, models
from .certificate import certificate_json, jump_matrix
from .errors import ComputationError, InvalidComplexError
from .laurent import LaurentError, is_trivial, render
from .pl import fmt, frac


def parse_range(text: str) -> range:
    """``"2..10"`` (inclusive) or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def parse_bits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_rational(text: str) -> Fraction:
    try:
        return frac(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def decimal(x: Fraction) -> str:
    return f"{float(x):.10f}"


def _emit(text: str, out=None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# model ---------------------------------------------------------------------

def build_model(args) -> cfk.Complex:
    kind = args.type
    if kind == "unknot":
        return models.unknot()
    if kind == "torus":
        if args.p is None or args.q is None:
            raise InvalidComplexError("--type torus needs --p and --q")
        return models.torus_staircase(args.p, args.q)
    if kind == "staircase":
        if not args.alpha:
            raise InvalidComplexError("--type staircase needs --alpha")
        return models.staircase_from_exponents(parse_bits(args.alpha))
    if kind == "box":
        return models.box(args.shift_i, args.shift_j, args.top_maslov)
    if kind == "thin":
        if args.tau is None:
            raise InvalidComplexError("--type thin needs --tau")
        return models.thin_model(args.tau)
    if kind == "cable":
        if args.n is None:
            raise InvalidComplexError("--type cable needs --n")
        a = parse_bits(args.a) if args.a else ()
        return models.cable_model(models.CableModelConfig(args.n, a))
    raise InvalidComplexError(f"unknown model type {kind!r}")


def cmd_model(args) -> int:
    c = build_model(args)
    _emit(cfk.to_json(c), args.out)
    return 0


def cmd_validate(args) -> int:
    with open(args.complex) as fh:
        c = cfk.from_json(fh.read())
    report = cfk.validate(c)
    print(report)
    return 0 if report.ok else 1


def _load(path) -> cfk.Complex:
    return cfk.load(path)


# invariants ------------------------------------------------------------------

def cmd_tau(args) -> int:
    print(invariants.tau(_load(args.complex)))
    return 0


def cmd_upsilon(args) -> int:
    c = _load(args.complex)
    if args.t is not None:
        print(fmt(invariants.upsilon_at(c, args.t)))
        return 0
    if args.sampled:
        f = invariants.upsilon_pl(c, "sampled", qmax=args.sampled)
    else:
        f = invariants.upsilon_pl(c, "exact", method=args.method, cap=args.cap)
    print(json.dumps(f.to_dict(), sort_keys=True))
    return 0


def cmd_v0(args) -> int:
    print(invariants.v_k(_load(args.complex), args.k))
    return 0


def cmd_nuplus(args) -> int:
    print(invariants.nu_plus(_load(args.complex)))
    return 0


def cmd_d1(args) -> int:
    print(invariants.d_surgery_one(_load(args.complex)))
    return 0


def cmd_dhalf(args) -> int:
    print(fmt(invariants.d_half_zero_surgery(_load(args.complex))))
    return 0


def cmd_jump(args) -> int:
    print(fmt(invariants.upsilon_jump(_load(args.complex), args.t0)))
    return 0


def cmd_singularity(args) -> int:
    t = invariants.first_singularity(_load(args.complex))
    print("none" if t is None else fmt(t))
    return 0


def cmd_equiv(args) -> int:
    a, b = _load(args.a), _load(args.b)
    print("true" if invariants.nu_plus_equivalent(a, b) else "false")
    return 0


def cmd_hat(args) -> int:
    c = _load(args.complex)
    for (a, m), r in cfk.hat_table(c).items():
        print(f"alexander {a} maslov {m} rank {r}")
    return 0


# families --------------------------------------------------------------------

def _family(args) -> list[cfk.Complex]:
    if args.family != "cable":
        raise InvalidComplexError(f"unknown complex family {args.family!r}")
    a = parse_bits(args.a) if getattr(args, "a", None) else ()
    out = []
    for n in parse_range(args.n):
        out.append(models.cable_model(models.CableModelConfig(n, a if len(a) == n - 1 else ())))
    return out


def cmd_certificate(args) -> int:
    if args.complexes:
        family = [_load(p) for p in args.complexes]
    else:
        family = _family(args)
    m = jump_matrix(family, args.kmax, jobs=args.jobs)
    _emit(certificate_json(m), args.out)
    return 0


def _curve(c: cfk.Complex, samples: int) -> list[tuple[Fraction, Fraction]]:
    f = invariants.upsilon_pl(c)
    ts = {Fraction(2 * a, samples) for a in range(samples + 1)} | set(f.breakpoints)
    return [(t, f(t)) for t in sorted(ts)]


def cmd_plot(args) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.complex:
        w.writerow(["t", "value"])
        for t, v in _curve(_load(args.complex), args.samples):
            w.writerow([decimal(t), decimal(v)])
    else:
        w.writerow(["label", "t", "value"])
        for c in _family(args):
            for t, v in _curve(c, args.samples):
                w.writerow([c.name, decimal(t), decimal(v)])
    _emit(buf.getvalue(), args.out)
    return 0


_COMPANIONS = {
    "unknot": lambda: alex_mod.ONE,
    "trefoil": lambda: alex_mod.torus_delta(2, 3),
    "whitehead-double": alex_mod.whitehead_double_delta,
}


def _companion(name: str):
    if name in _COMPANIONS:
        return _COMPANIONS[name]()
    if name.startswith("torus:"):
        p, q = (int(x) for x in name[6:].split(","))
        return alex_mod.torus_delta(p, q)
    raise InvalidComplexError(f"unknown companion {name!r}")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_alexander(args) -> int:
    if args.from_complex:
        d = cfk.delta_from_complex(_load(args.from_complex))
        print(f"{render(d)}, trivial: {_yes(is_trivial(d))}")
    elif args.cable:
        p, q = args.cable
        d = alex_mod.cable_delta(p, q, _companion(args.companion))
        print(f"{render(d)}, trivial: {_yes(is_trivial(d))}")
    elif args.torus:
        d = alex_mod.torus_delta(*args.torus)
        print(f"{render(d)}, trivial: {_yes(is_trivial(d))}")
    elif args.family:
        for row in alex_mod.family_delta_report(args.family, parse_range(args.n)):
            print(f"{row.label}: {render(row.delta)}, trivial: {_yes(row.trivial)}")
    else:
        raise InvalidComplexError("alexander needs --from-complex, --cable, --torus or --family")
    return 0


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotfloer", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model", help="write a model complex as JSON")
    p.add_argument("--type", required=True, choices=["unknot", "torus", "staircase", "box", "thin", "cable"])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--alpha", help="comma-separated staircase exponents, e.g. 1,0,-1")
    p.add_argument("--tau", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", help="comma-separated a-vector bits for the cable model")
    p.add_argument("--shift-i", type=int, default=0)
    p.add_argument("--shift-j", type=int, default=0)
    p.add_argument("--top-maslov", type=int, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("validate", help="check the structural axioms of a complex")
    p.add_argument("complex")
    p.set_defaults(func=cmd_validate)

    for name, func, helptext in [
        ("tau", cmd_tau, "tau invariant"),
        ("nuplus", cmd_nuplus, "nu+ invariant"),
        ("d1", cmd_d1, "d(S^3_1(K)) = -2 V_0"),
        ("dhalf", cmd_dhalf, "d_{1/2}(S^3_0(K)) = 1/2 + d(S^3_1(K))"),
        ("singularity", cmd_singularity, "first t > 0 where Upsilon changes slope"),
        ("hat", cmd_hat, "HFK-hat ranks by (Alexander, Maslov)"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("complex")
        p.set_defaults(func=func)

    p = sub.add_parser("v0", help="V_k (default k = 0)")
    p.add_argument("complex")
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_v0)

    p = sub.add_parser("upsilon", help="Upsilon at a rational t, or the whole function")
    p.add_argument("complex")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=parse_rational)
    g.add_argument("--exact", action="store_true")
    g.add_argument("--sampled", type=int, metavar="QMAX")
    p.add_argument("--method", choices=["scan", "enumerate"], default="scan")
    p.add_argument("--cap", type=int, default=invariants.DEFAULT_ENUMERATION_CAP,
                   help="log2 of the representative limit for --method enumerate")
    p.set_defaults(func=cmd_upsilon)

    p = sub.add_parser("jump", help="jump of Upsilon' at t0")
    p.add_argument("complex")
    p.add_argument("--t0", type=parse_rational, required=True)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("equiv", help="nu+-equivalence of two complexes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("certificate", help="jump matrix and Z^r-summand certificate")
    p.add_argument("--family", default="cable")
    p.add_argument("--n", default="2..10")
    p.add_argument("--a", help="a-vector applied to every member of matching length")
    p.add_argument("--complexes", nargs="+")
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("plot", help="Upsilon curves as CSV")
    p.add_argument("complex", nargs="?")
    p.add_argument("--family", default="cable")
    p.add_argument("--n", default="2..5")
    p.add_argument("--samples", type=int, default=60)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("alexander", help="Alexander polynomials")
    p.add_argument("--from-complex")
    p.add_argument("--cable", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--companion", default="whitehead-double")
    p.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--family", choices=["KP", "HOM", "OSS"])
    p.add_argument("--n", default="2..10")
    p.set_defaults(func=cmd_alexander)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidComplexError, LaurentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
