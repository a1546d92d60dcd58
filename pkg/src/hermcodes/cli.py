"""Command-line front end.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 invalid
parameters. Machine-readable output goes to stdout (or ``--output``);
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cayley_spectrum import spectrum_of_cayley, verify_isomorphism
from .code_construct import brute_force_weight_distribution, build_code
from .errors import HermcodesError, ParameterError, TooLargeToEnumerate, VerificationFailed
from .exp_sums import closed_form_weight_distribution, t_value_distribution, weights_from_spectrum
from .finite_field import CodeParams, build_field
from .hermitian_graph import closed_form_spectrum, gaussian_binomial, prime_power_base, spectrum_multiset
from .span import default_cap, default_workers

log = logging.getLogger("hermcodes")


class CrossCheckFailed(HermcodesError):
    pass


def _dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _enumerated_weights(method, params, cap, workers):
    ctx = build_field(params)
    if method == "brute":
        return brute_force_weight_distribution(build_code(params, ctx), ctx, cap=cap, workers=workers)
    return weights_from_spectrum(params, spectrum_of_cayley(ctx, cap=cap, workers=workers))


def cmd_weights(args):
    params = CodeParams(args.p, args.m)
    closed = closed_form_weight_distribution(params)
    if args.method == "closed":
        result = closed
    else:
        result = _enumerated_weights(args.method, params, args.cap, args.workers)
        if result.lines != closed.lines:
            raise CrossCheckFailed(f"{args.method} weights disagree with the closed form")
    if args.check:
        for method in ("brute", "spectrum"):
            if method == args.method:
                continue
            try:
                other = _enumerated_weights(method, params, args.cap, args.workers)
            except TooLargeToEnumerate as exc:
                log.warning("skipping %s cross-check: %s", method, exc)
                continue
            if other.lines != result.lines:
                raise CrossCheckFailed(f"{method} weights disagree with {args.method}")
            log.info("%s cross-check agrees", method)
    if args.format == "enumerator":
        text = result.enumerator() + "\n"
    elif args.format == "csv":
        text = result.to_csv()
    else:
        text = _dump_json(result.to_dict(m=params.m))
    _emit(text, args.output)
    return 0


def cmd_spectrum(args):
    closed = closed_form_spectrum(args.d, args.r)
    if args.method == "direct":
        p, k = prime_power_base(args.r)
        if k != 1 or args.d % 2 == 0:
            raise ParameterError("direct spectrum needs r prime and d odd")
        ctx = build_field(CodeParams(args.r, args.d))
        direct = spectrum_of_cayley(ctx, cap=args.cap, workers=args.workers)
        if direct != spectrum_multiset(closed):
            raise CrossCheckFailed("character-sum spectrum disagrees with the closed form")
    if args.format == "csv":
        text = "j,theta,f\n" + "".join(f"{ln.j},{ln.eigenvalue},{ln.multiplicity}\n" for ln in closed)
    else:
        text = _dump_json(
            {
                "d": args.d,
                "r": args.r,
                "lines": [
                    {"j": ln.j, "theta": ln.eigenvalue, "f": str(ln.multiplicity)} for ln in closed
                ],
            }
        )
    _emit(text, args.output)
    return 0


def cmd_verify_iso(args):
    ctx = build_field(CodeParams(args.p, args.m))
    try:
        report = verify_isomorphism(ctx, cap=args.cap, samples=args.samples)
    except VerificationFailed as exc:
        report = exc.report
    text = _dump_json(report.to_dict()) if args.format == "json" else report.to_text() + "\n"
    _emit(text, args.output)
    if not report.passed:
        log.error("clause failed: %s", report.first_failure())
        return 1
    return 0


def cmd_gauss_binom(args):
    _emit(f"{gaussian_binomial(args.j, args.i, args.b)}\n", args.output)
    return 0


def cmd_t_dist(args):
    ctx = build_field(CodeParams(args.p, args.m))
    dist = t_value_distribution(ctx, cap=args.cap, workers=args.workers)
    if args.format == "csv":
        text = "T,count\n" + "".join(f"{T},{c}\n" for T, c in dist.items())
    else:
        text = _dump_json(
            {"p": args.p, "m": args.m, "values": [{"T": T, "count": str(c)} for T, c in dist.items()]}
        )
    _emit(text, args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hermcodes",
        description="Weight distributions of the cyclic codes C(p, m) and Hermitian forms graph spectra.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats, default_format):
        sp.add_argument("--format", choices=formats, default=default_format)
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.add_argument(
            "--cap",
            type=int,
            default=default_cap(),
            help="enumeration cap (default from HERMCODES_ENUM_CAP or 2^26)",
        )
        sp.add_argument("--workers", type=int, default=default_workers())
        sp.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    w = sub.add_parser("weights", help="weight distribution of C(p, m)")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--m", type=int, required=True)
    w.add_argument("--method", choices=["closed", "brute", "spectrum"], default="closed")
    w.add_argument("--check", action="store_true", help="also run every enumeration method that fits the cap")
    common(w, ["json", "csv", "enumerator"], "json")
    w.set_defaults(func=cmd_weights)

    s = sub.add_parser("spectrum", help="Hermitian forms graph spectrum")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--method", choices=["closed", "direct"], default="closed")
    common(s, ["json", "csv"], "json")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify-iso", help="check the Hermitian-matrix to G isomorphism")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--samples", type=int, default=200, help="random pairs for the homomorphism clause")
    common(v, ["text", "json"], "text")
    v.set_defaults(func=cmd_verify_iso)

    g = sub.add_parser("gauss-binom", help="Gaussian binomial coefficient [j, i]_b")
    g.add_argument("--j", type=int, required=True)
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gauss_binom)

    t = sub.add_parser("t-dist", help="value distribution of the exponential sum T")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--m", type=int, required=True)
    common(t, ["json", "csv"], "json")
    t.set_defaults(func=cmd_t_dist)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HermcodesError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
