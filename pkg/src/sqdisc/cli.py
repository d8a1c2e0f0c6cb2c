"""Command-line entry point: ``sqdisc <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 computation error.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from pathlib import Path

from .constructions import Case, CoeffSet, classify_coeff_set
from .poly import DomainError, IntPolynomial, reverse

log = logging.getLogger("sqdisc")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3

SET_ALIASES = {"pm1": (-1, 1), "zo": (0, 1), "zpm1": (-1, 0, 1)}


class UsageError(Exception):
    pass


def parse_coeff_set(text: str) -> CoeffSet:
    if text in SET_ALIASES:
        return classify_coeff_set(SET_ALIASES[text])
    try:
        elements = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad coefficient set {text!r}")
    try:
        return classify_coeff_set(elements)
    except DomainError as exc:
        raise UsageError(str(exc))


def _poly(text: str) -> IntPolynomial:
    try:
        return IntPolynomial.parse(text)
    except DomainError as exc:
        raise UsageError(str(exc))


def _complex_pair(text: str) -> complex:
    try:
        x, y = (float(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected X,Y but got {text!r}")
    return complex(x, y)


def sorted_roots(f: IntPolynomial) -> list[complex]:
    from .roots import find_all_roots

    return sorted(find_all_roots(f).roots, key=lambda z: (abs(z), math.atan2(z.imag, z.real)))


# --- subcommands ------------------------------------------------------------


def cmd_disc(args) -> int:
    from .discriminant import discriminant

    f = _poly(args.poly)
    if f.is_zero():
        raise UsageError("zero polynomial")
    d = discriminant(f)
    print(d.value)
    print(f"square: {str(d.is_square).lower()}")
    print(f"zero: {str(d.is_zero).lower()}")
    return EXIT_OK


def cmd_resultant(args) -> int:
    from .resultant import resultant

    f, g = _poly(args.f), _poly(args.g)
    if f.is_zero() or g.is_zero():
        raise UsageError("zero polynomial")
    print(resultant(f, g))
    return EXIT_OK


def cmd_approx(args) -> int:
    from .certificate import approximate_square_disc, to_text
    from .roots import nearest_root, find_all_roots

    f = _poly(args.poly)
    cs = parse_coeff_set(args.set)
    try:
        case = Case.parse(args.case)
    except ValueError:
        raise UsageError(f"unknown case {args.case!r}")
    roots = sorted_roots(f)
    if not 0 <= args.root_index < len(roots):
        raise UsageError(f"root index must be in [0, {len(roots)})")
    z = roots[args.root_index]
    log.info("target root %r of %s", z, f.format())
    inverted = False
    work = f
    if abs(abs(z) - 1) < 1e-9:
        raise DomainError("root lies on the unit circle")
    if abs(z) > 1:
        inverted = True
        work = reverse(f)
        z, _ = nearest_root(find_all_roots(work).roots, 1 / z)
        log.info("inverted to %r via the reversed polynomial", z)
    cert = approximate_square_disc(work, z, args.eps, cs, case, inverted=inverted, source=f)
    text = to_text(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(
        f"case={cert.case_used.value} k={cert.k} deg f_k={cert.f_k.degree} "
        f"error={cert.achieved_error:.6g} square={str(cert.disc.is_square).lower()}",
        file=sys.stderr if not args.out else sys.stdout,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    from .certificate import verify_text

    try:
        text = Path(args.cert).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc}")
    results = verify_text(text)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY


def cmd_render(args) -> int:
    from .atlas import RenderConfig, emit_artifacts, rasterize

    cs = parse_coeff_set(args.set)
    try:
        cfg = RenderConfig(
            coeff_set=cs,
            max_degree=args.max_degree,
            center=_complex_pair(args.center),
            half_width=args.half_width,
            width=args.width,
            height=args.height,
            square_only=args.square_only,
            overlay=not args.square_only,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    workers = args.workers if args.workers > 0 else (os.cpu_count() or 1)
    clouds = [] if args.csv else None
    raster = rasterize(cfg, workers=workers, collect=clouds)
    emit_artifacts(raster, args.out, args.csv, clouds or ())
    print(
        f"roots={int(raster.all_roots.sum())} square_roots={int(raster.square.sum())} "
        f"skipped={raster.skipped}"
    )
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run

    results = run(args.seed)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sqdisc", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log the resolved configuration")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("disc", help="exact discriminant and square verdict")
    s.add_argument("--poly", required=True, help="coefficients, constant term first")
    s.set_defaults(func=cmd_disc)

    s = sub.add_parser("resultant", help="exact resultant Res(f, g)")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.set_defaults(func=cmd_resultant)

    s = sub.add_parser("approx", help="certify a square-discriminant approximation of a root")
    s.add_argument("--poly", required=True)
    s.add_argument("--root-index", type=int, required=True, help="index into roots sorted by (|z|, arg)")
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--set", required=True, help="pm1, zo, zpm1 or a comma list")
    s.add_argument("--case", default="auto", help="auto, i, ii or iii")
    s.add_argument("--out", help="certificate path (stdout when omitted)")
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("render", help="rasterize the zero set to a PPM image")
    s.add_argument("--set", required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--csv")
    s.add_argument("--width", type=int, default=512)
    s.add_argument("--height", type=int, default=512)
    s.add_argument("--center", default="0,0")
    s.add_argument("--half-width", type=float, default=2.0)
    s.add_argument("--square-only", action="store_true")
    s.add_argument("--workers", type=int, default=1, help="0 = all cores")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="re-check every invariant of a certificate")
    s.add_argument("--cert", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("selftest", help="run the randomized property battery")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    log.info("config %s", {k: v for k, v in vars(args).items() if k != "func"})
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sqdisc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, RuntimeError, ArithmeticError) as exc:
        print(f"sqdisc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"sqdisc: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
