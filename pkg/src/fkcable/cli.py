"""``fk``: command-line front end.

JSON is the canonical output; ``--format text`` mirrors the printed notation.
Progress goes to stderr. Exit codes: 0 success, 1 verification failure or a
module-level arithmetic error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .alexjones import (
    BadParameter as AlexBadParameter,
    NonUnitLeading,
    alexander_cable,
    colored_jones_cable,
    hbar_jones,
    symmetric_expansion,
)
from .apoly import (
    BadParameter as OpBadParameter,
    GridViolation,
    NonSolvableLeading,
    recursion_for,
    solve_forward,
    verify_annihilation,
)
from .cabling import UnsupportedW, format_terms, gen_cable, w_from_r
from .exactalg.hbar import InconsistentSamples
from .exactalg.lpoly import NotDivisible
from .fk_core import FkSeries, format_h_table, h_table, mirror
from .surgery import BadSlope, SurgerySlope, TruncationInsufficient, zhat_for_cable
from .verify import run_all

CACHE_ENV = "FKCABLE_CACHE_DIR"

USAGE_ERRORS = (AlexBadParameter, OpBadParameter, UnsupportedW, BadSlope)
MODULE_ERRORS = (NotDivisible, GridViolation, NonSolvableLeading, InconsistentSamples, TruncationInsufficient,
                 NonUnitLeading)


class UsageError(ValueError):
    pass


def _progress(msg) -> None:
    print(f"[fk] {msg}", file=sys.stderr, flush=True)


def _knot_args(args) -> tuple[int, int]:
    """``(p, w)`` from ``--p`` with ``--r`` or ``--w``, enforcing r = p w + 1."""
    if args.r is None and args.w is None:
        raise UsageError("give --r or --w")
    if args.r is not None:
        try:
            w = w_from_r(args.p, args.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.w is not None and args.w != w:
            raise UsageError(f"--r {args.r} and --w {args.w} disagree: r must equal {args.p}*w + 1")
        return args.p, w
    return args.p, args.w


def _odd(value: str) -> int:
    n = int(value)
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected an odd positive integer, got {value}")
    return n


def _add_knot(sp) -> None:
    sp.add_argument("--p", type=int, choices=(2, 3), default=2, help="cable index (default 2)")
    sp.add_argument("--r", type=int, help="cable framing parameter, r = p*w + 1")
    sp.add_argument("--w", type=int, help="pattern parameter w > 3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fk", description="Exact F_K series of figure-eight cables and their checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("h", parents=[common], help="figure-eight coefficient table h_1 .. h_max")
    sp.add_argument("--max", type=_odd, default=13)

    sp = sub.add_parser("cable", parents=[common], help="closed-form series of a cable")
    _add_knot(sp)
    sp.add_argument("--mmax", type=_odd, default=129)
    sp.add_argument("--terms", action="store_true", help="text output in terms of h_k instead of expanded")

    sp = sub.add_parser("mirror", parents=[common], help="series of the mirror knot (q -> 1/q)")
    _add_knot(sp)
    sp.add_argument("--mmax", type=_odd, default=129)
    sp.add_argument("--input", help="FkSeries JSON file to mirror instead of a generated cable")

    sp = sub.add_parser("recursion", parents=[common], help="coefficient recursion of the (r,2)-cable")
    sp.add_argument("action", choices=("derive", "solve", "verify"))
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--mmax", type=_odd, help="solve/verify through f_mmax (default window + 28)")

    sp = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a cable")
    _add_knot(sp)

    sp = sub.add_parser("selimit", parents=[common], help="expansion of (x^1/2 - x^-1/2)/Delta at x = 0")
    _add_knot(sp)
    sp.add_argument("--mmax", type=_odd, default=129)

    sp = sub.add_parser("jones", parents=[common], help="normalized colored Jones polynomial in t (q = t^4)")
    _add_knot(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--unnormalized", action="store_true")

    sp = sub.add_parser("jones-hbar", parents=[common], help="hbar expansion of the colored Jones polynomial")
    _add_knot(sp)
    sp.add_argument("--order", type=int, default=6)

    sp = sub.add_parser("zhat", parents=[common], help="q-series of a negative surgery on a cable")
    _add_knot(sp)
    sp.add_argument("--slope", required=True, help="negative slope such as -1/2")
    sp.add_argument("--b", type=int, default=0)
    sp.add_argument("--qmax", type=int, default=300)

    sp = sub.add_parser("verify-all", parents=[common], help="run every applicable check against printed data")
    _add_knot(sp)
    sp.add_argument("--mmax", type=_odd)
    return ap


def _emit(args, obj, text: str) -> None:
    out = text if args.format == "text" else json.dumps(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


def _series_text(F: FkSeries, p: int | None = None, w: int | None = None, terms: bool = False) -> str:
    if terms and p is not None:
        lines = [f"# F_K for {F.knot}, m <= {F.m_max}"]
        lines += [format_terms(p, w, m) for m in F.support()]
        return "\n".join(lines)
    return F.format_text()


def cmd_h(args) -> int:
    table = h_table(args.max)
    obj = {"h": [{"k": k, "poly": h.to_json_obj()} for k, h in table.items(args.max)]}
    _emit(args, obj, format_h_table(table, args.max))
    return 0


def cmd_cable(args) -> int:
    p, w = _knot_args(args)
    F = gen_cable(p, w, args.mmax)
    _emit(args, F.to_json_obj(), _series_text(F, p, w, args.terms))
    return 0


def cmd_mirror(args) -> int:
    if args.input:
        with open(args.input) as fh:
            F = FkSeries.from_json(fh.read())
    else:
        p, w = _knot_args(args)
        F = gen_cable(p, w, args.mmax)
    G = mirror(F)
    _emit(args, G.to_json_obj(), G.format_text())
    return 0


def cmd_recursion(args) -> int:
    r = args.r
    if r % 2 == 0 or abs(r) <= 8:
        raise UsageError(f"need odd r with |r| > 8, got {r}")
    cache = os.environ.get(CACHE_ENV)
    _progress(f"deriving the recursion for r={r} (content removal takes a while)")
    rec = recursion_for(r, cache)
    if args.action == "derive":
        text = (
            f"r = {r}: f_(v+{rec.span}) from f_v .. f_(v+{rec.span - 2}); initial window f_1 .. f_{rec.window}\n"
            f"leading coefficient: {rec.divisor_text()}\n"
            f"offsets: {', '.join(str(s) for s in rec.offsets)}"
        )
        _emit(args, rec.to_json_obj(), text)
        return 0
    w = w_from_r(2, r)
    m_max = args.mmax or rec.window + 28
    gen = gen_cable(2, w, m_max)
    if args.action == "solve":
        solved = solve_forward(rec, gen.truncate(rec.window), m_max, lambda m: _progress(f"solved f_{m}"))
        agree = all(solved[m] == gen[m] for m in range(1, m_max + 1, 2))
        obj = solved.to_json_obj()
        obj["agrees_with_closed_form"] = agree
        _emit(args, obj, solved.format_text() + f"\n# agrees with closed form: {agree}")
        return 0 if agree else 1
    report = verify_annihilation(rec, gen, v_min=1 - rec.span)
    text = (
        f"checked {len(report.checked)} relation instances, failures: {report.failures or 'none'}; "
        f"max verified v = {report.max_verified_v}"
    )
    _emit(args, report.to_json_obj(), text)
    return 0 if report.ok else 1


def cmd_alexander(args) -> int:
    p, w = _knot_args(args)
    delta = alexander_cable(p, p * w + 1)
    _emit(args, delta.to_json_obj(), delta.format("t"))
    return 0


def cmd_selimit(args) -> int:
    p, w = _knot_args(args)
    se = symmetric_expansion(alexander_cable(p, p * w + 1), args.mmax)
    _emit(args, se.to_json_obj(), se.format_text())
    return 0


def cmd_jones(args) -> int:
    p, w = _knot_args(args)
    if args.n < 1:
        raise UsageError("--n must be positive")
    J = colored_jones_cable(p, p * w + 1, args.n, normalized=not args.unnormalized)
    _emit(args, J.to_json_obj(), J.format("t"))
    return 0


def cmd_jones_hbar(args) -> int:
    p, w = _knot_args(args)
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    H = hbar_jones(p, p * w + 1, args.order)
    obj = H.to_json_obj()
    text = "\n".join(f"hbar^{k}: {c}" for k, c in enumerate(H.coeffs))
    _emit(args, obj, text)
    return 0


def cmd_zhat(args) -> int:
    p, w = _knot_args(args)
    try:
        slope = SurgerySlope.parse(args.slope, args.b)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad slope {args.slope!r}: {exc}") from None
    Z = zhat_for_cable(p, w, slope, args.qmax)
    _emit(args, Z.to_json_obj(), Z.format_text())
    return 0


def cmd_verify_all(args) -> int:
    p, w = _knot_args(args)
    report = run_all(p, w, args.mmax, os.environ.get(CACHE_ENV), _progress)
    _emit(args, report.to_json_obj(), report.format_text())
    return 0 if report.ok else 1


COMMANDS = {
    "h": cmd_h,
    "cable": cmd_cable,
    "mirror": cmd_mirror,
    "recursion": cmd_recursion,
    "alexander": cmd_alexander,
    "selimit": cmd_selimit,
    "jones": cmd_jones,
    "jones-hbar": cmd_jones_hbar,
    "zhat": cmd_zhat,
    "verify-all": cmd_verify_all,
}


def _join_slope(argv: list[str]) -> list[str]:
    """``--slope -1/2`` would read as an option; rewrite it to ``--slope=-1/2``."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--slope" and i + 1 < len(argv):
            out.append(f"--slope={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_slope(sys.argv[1:] if argv is None else list(argv)))
    try:
        return COMMANDS[args.command](args)
    except (UsageError,) + USAGE_ERRORS as exc:
        print(f"fk: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except MODULE_ERRORS as exc:
        print(f"fk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
