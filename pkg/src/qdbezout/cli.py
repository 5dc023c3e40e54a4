"""Command-line entry point: ``qdbezout {count,verify,dump,plot,gallery}``.

Polynomial coefficients are given LOW-TO-HIGH as a JSON array, so
``z**2 - 4`` is ``"[-4, 0, 1]"``.  Entries are JSON numbers or scalar strings
such as ``"1-2i"`` or ``"(3+4i)/5"``.

Exit codes: 0 success, 1 oracle mismatch (verify), 2 invalid input,
3 numerical failure or ambiguous rank.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bezout import DEFAULT_RANK_TOL, hermitian_form
from .counting import count_zeros_in_domain, empty_report
from .errors import (AmbiguousRankError, DegreeOverflowError, ExactModeUnavailable,
                     InvalidInput, NumericalFailure, PoleConfigurationError, QDError)
from .gallery import NAMES, gallery_lookup
from .oracles import cauchy_index, fiber_imbalance_generic, membership_count
from .plot import plot_domain
from .poly import Polynomial
from .ratfun import RationalFunction, compose_poly_ratfun
from .scalars import DOUBLE, EXACT

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3
AUTO = "auto"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InvalidInput(message)


def _json_arg(text, what):
    try:
        return json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise InvalidInput(f"{what} is not valid JSON: {exc}") from None


def _load_domain(args, mode):
    """``(phi, provenance, known_poles)`` from the gallery or explicit arrays."""
    if args.domain and (args.phi_num or args.phi_den):
        raise InvalidInput("give either --domain or --phi-num/--phi-den, not both")
    if args.domain:
        g = gallery_lookup(args.domain)
        if mode == EXACT and not g.exact_capable:
            raise ExactModeUnavailable(f"domain {g.name!r} has irrational poles; use --mode double")
        phi = g.phi if mode == EXACT else g.phi.to_mode(DOUBLE)
        return phi, g.name, None
    if not (args.phi_num and args.phi_den):
        raise InvalidInput("a domain is required: --domain NAME or --phi-num/--phi-den")
    num = Polynomial.from_json(_json_arg(args.phi_num, "--phi-num"), mode)
    den = Polynomial.from_json(_json_arg(args.phi_den, "--phi-den"), mode)
    if not den:
        raise InvalidInput("--phi-den is the zero polynomial")
    phi = RationalFunction(num, den)
    if phi.degree < 1:
        raise InvalidInput("the map must be nonconstant")
    return phi, "user map", None


def _load_poly(args, mode) -> Polynomial | None:
    if args.poly is None:
        return None
    p = Polynomial.from_json(_json_arg(args.poly, "--poly"), mode)
    if not p:
        raise InvalidInput("--poly is the zero polynomial")
    return p


def _with_mode(args, build):
    """Run ``build(mode)``; in auto mode try exact first and fall back to double."""
    if args.mode != AUTO:
        return build(args.mode)
    try:
        return build(EXACT)
    except ExactModeUnavailable:
        return build(DOUBLE)


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _count(args, mode):
    phi, prov, poles = _load_domain(args, mode)
    p = _load_poly(args, mode)
    if p is None:
        raise InvalidInput("--poly is required")
    if p.degree < 1:
        rep = empty_report(phi.degree, mode, args.rank_tol, prov)
    else:
        rep = count_zeros_in_domain(p, phi, mode, args.rank_tol, strict=True,
                                    known_poles=poles, provenance=prov)
    return phi, p, rep


def cmd_count(args) -> int:
    _, p, rep = _with_mode(args, lambda m: _count(args, m))
    out = rep.to_json()
    out["poly"] = p.to_json()
    _emit(_dumps(out), args.out)
    return EXIT_OK


def _real_imag_quotient(p: Polynomial, phi: RationalFunction) -> RationalFunction:
    """``h = f_r / f_i`` for ``f = p(phi)``; both parts share one denominator."""
    f = compose_poly_ratfun(p.to_mode(DOUBLE), phi.to_mode(DOUBLE))
    fr, fi = f.real_part(), f.imag_part()
    return RationalFunction(fr.num, fi.num)


def verify_checks(p, phi, rep, seed: int = 0, corrupt_j: bool = False, mode=DOUBLE):
    """Oracle comparisons for one count; returns ``(checks, membership)``."""
    rng = np.random.default_rng(seed)
    sig = rep.signature
    if corrupt_j:
        form = hermitian_form(p, phi, mode, rep.rank_tol, corrupt_j=True)
        sig = form.signature
    checks = []

    def check(name, expected, observed, ok=None):
        ok = (expected == observed) if ok is None else ok
        checks.append({"check": name, "expected": expected, "observed": observed, "ok": bool(ok)})

    h = _real_imag_quotient(p, phi)
    check("signature == cauchy_index", sig, cauchy_index(h, seed=int(rng.integers(2**31))))
    for _ in range(3):
        check("signature == fiber_imbalance", sig, fiber_imbalance_generic(h, rng).imbalance)
    inside, boundary, outside = membership_count(p, phi)
    n0, add = rep.common_zero_degree, rep.interior_additional
    if corrupt_j:
        add = form.n_minus - rep.offset
    check("additional <= inside <= additional + n_zero", [add, add + n0], inside,
          add <= inside <= add + n0)
    check("boundary roots imply n_zero > 0", boundary > 0, n0 > 0, boundary == 0 or n0 > 0)
    if n0 == 0:
        check("n_zero == 0 implies no boundary roots", 0, boundary)
        half = -sig / 2
        check("n_zero == 0 implies inside == -signature/2",
              int(half) if half.is_integer() else half, inside)
    return checks, (inside, boundary, outside)


def cmd_verify(args) -> int:
    phi, p, rep = _with_mode(args, lambda m: _count(args, m))
    if p.degree < 1:
        checks, memb = [], (0, 0, 0)
    else:
        checks, memb = verify_checks(p, phi, rep, args.seed, args.corrupt_j, rep.mode)
    ok = all(c["ok"] for c in checks)
    out = {"ok": ok, "report": rep.to_json(), "poly": p.to_json(),
           "membership": {"inside": memb[0], "boundary": memb[1], "outside": memb[2]},
           "checks": checks, "seed": args.seed}
    _emit(_dumps(out), args.out)
    for c in checks:
        if not c["ok"]:
            print(f"mismatch: {c['check']}: expected {c['expected']}, observed {c['observed']}",
                  file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_dump(args) -> int:
    def build(mode):
        phi, prov, poles = _load_domain(args, mode)
        p = _load_poly(args, mode)
        if p is None or p.degree < 1:
            raise InvalidInput("--poly of degree at least 1 is required")
        return hermitian_form(p, phi, mode, args.rank_tol, known_poles=poles), prov

    form, prov = _with_mode(args, build)
    out = form.to_json()
    out["provenance"] = prov
    _emit(_dumps(out), args.out)
    return EXIT_OK


def cmd_plot(args) -> int:
    phi, prov, _ = _load_domain(args, DOUBLE)
    p = _load_poly(args, DOUBLE)
    svg = plot_domain(phi, p, title=f"{prov} domain", samples=args.samples)
    _emit(svg, args.out)
    return EXIT_OK


def cmd_gallery(args) -> int:
    names = [args.name] if args.name else list(NAMES)
    out = []
    for name in names:
        g = gallery_lookup(name)
        out.append({"name": g.name, "phi": g.phi.to_json(), "notes": g.notes,
                    "exact_capable": g.exact_capable})
    _emit(_dumps(out if not args.name else out[0]), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qdbezout", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, poly=True):
        sp.add_argument("--domain", help=f"gallery domain: {', '.join(NAMES)}")
        sp.add_argument("--phi-num", help="map numerator, JSON array low-to-high")
        sp.add_argument("--phi-den", help="map denominator, JSON array low-to-high")
        if poly:
            sp.add_argument("--poly", help="polynomial, JSON array low-to-high")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    def numeric(sp):
        sp.add_argument("--mode", choices=[AUTO, EXACT, DOUBLE], default=AUTO,
                        help="arithmetic; auto uses exact when the data allow it")
        sp.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("count", help="count zeros inside a domain")
    common(sp)
    numeric(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="cross-check a count against independent oracles")
    common(sp)
    numeric(sp)
    sp.add_argument("--corrupt-j", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dump", help="print the Hermitian matrix and its inertia")
    common(sp)
    numeric(sp)
    sp.set_defaults(func=cmd_dump)

    sp = sub.add_parser("plot", help="SVG of the domain boundary and the roots")
    common(sp)
    sp.add_argument("--samples", type=int, default=4096)
    sp.set_defaults(func=cmd_plot)

    sp = sub.add_parser("gallery", help="list the built-in domains")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gallery)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InvalidInput, PoleConfigurationError, DegreeOverflowError,
            ExactModeUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AmbiguousRankError as exc:
        print(f"error: ambiguous rank: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (NumericalFailure, ZeroDivisionError, np.linalg.LinAlgError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except QDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
