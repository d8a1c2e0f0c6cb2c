"""Certify square-discriminant approximations for random {-1, 1} roots.

    python scripts/certify_batch.py --count 25 --eps 1e-2 1e-3 --out-dir certs
"""

import argparse
import random
import time
from pathlib import Path

from sqdisc.certificate import approximate_square_disc, to_text, verify_text
from sqdisc.constructions import Case, classify_coeff_set
from sqdisc.poly import IntPolynomial
from sqdisc.roots import find_all_roots


def sample_roots(rng, count, max_degree, radius):
    out = []
    while len(out) < count:
        d = rng.randint(2, max_degree)
        f = IntPolynomial((1,) + tuple(rng.choice((-1, 1)) for _ in range(d)))
        inside = [z for z in find_all_roots(f).roots if abs(z) < radius]
        if inside:
            out.append((f, rng.choice(inside)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=25)
    ap.add_argument("--eps", type=float, nargs="+", default=[1e-2, 1e-3])
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--radius", type=float, default=0.95)
    ap.add_argument("--case", choices=[c.value for c in Case])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cs = classify_coeff_set({-1, 1})
    case = Case(args.case) if args.case else None
    out = Path(args.out_dir) if args.out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    print("eps      |alpha|  case            k  deg f_k  error      verify  seconds")
    failures = 0
    for eps in args.eps:
        for i, (f, alpha) in enumerate(sample_roots(rng, args.count, args.max_degree, args.radius)):
            t0 = time.perf_counter()
            cert = approximate_square_disc(f, alpha, eps, cs, case)
            text = to_text(cert)
            ok = all(passed for _, passed in verify_text(text))
            failures += not ok
            if out:
                (out / f"cert_{eps:g}_{i:03d}.txt").write_text(text)
            print(
                f"{eps:<8g} {abs(alpha):7.4f}  {cert.case_used.value:<14s} {cert.k:3d}  {cert.f_k.degree:7d}"
                f"  {cert.achieved_error:.3e}  {'PASS' if ok else 'FAIL':6s}  {time.perf_counter() - t0:7.2f}"
            )
    print(f"failures: {failures}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
