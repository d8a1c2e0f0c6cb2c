"""Render the {-1, 1} zero set at two degrees and report how red the circle gets.

    python scripts/render_figure1.py --degrees 12 16 --out-dir figures
"""

import argparse
import logging
import os
import time
from pathlib import Path

import numpy as np

from sqdisc.atlas import RenderConfig, emit_artifacts, rasterize, to_rgb
from sqdisc.constructions import classify_coeff_set


def grey_to_red_distance(img):
    """Mean pixel distance from occupied non-red pixels to the nearest red one (brute force)."""
    red = np.all(img == (255, 0, 0), axis=2)
    grey = ~red & ~np.all(img == 255, axis=2)
    ry, rx = np.nonzero(red)
    gy, gx = np.nonzero(grey)
    if not len(ry) or not len(gy):
        return float("nan")
    best = np.full(len(gy), np.inf)
    for s in range(0, len(ry), 2048):
        d = (gy[:, None] - ry[None, s : s + 2048]) ** 2 + (gx[:, None] - rx[None, s : s + 2048]) ** 2
        best = np.minimum(best, d.min(axis=1))
    return float(np.sqrt(best).mean())


def circle_sectors(img, half_width):
    h, w, _ = img.shape
    red = np.all(img == (255, 0, 0), axis=2)
    y, x = np.nonzero(red)
    px = 2 * half_width / w
    zx = -half_width + (x + 0.5) * px
    zy = half_width - (y + 0.5) * px
    near = np.abs(np.hypot(zx, zy) - 1) <= 2 * px
    return len(set((np.degrees(np.arctan2(zy[near], zx[near])) % 360 // 5).astype(int)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[12, 16])
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--half-width", type=float, default=2.0)
    ap.add_argument("--workers", type=int, default=0, help="0 = all cores")
    ap.add_argument("--out-dir", default="figures")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    workers = args.workers or os.cpu_count() or 1
    cs = classify_coeff_set({-1, 1})
    print("degree  seconds  roots  square_roots  sectors/72  grey->red px")
    for d in args.degrees:
        cfg = RenderConfig(cs, d, half_width=args.half_width, width=args.size, height=args.size)
        t0 = time.perf_counter()
        raster = rasterize(cfg, workers=workers)
        dt = time.perf_counter() - t0
        emit_artifacts(raster, out / f"littlewood_{d}.ppm")
        img = to_rgb(raster)
        print(
            f"{d:6d}  {dt:7.1f}  {int(raster.all_roots.sum()):5d}  {int(raster.square.sum()):12d}"
            f"  {circle_sectors(img, args.half_width):10d}  {grey_to_red_distance(img):12.3f}"
        )


if __name__ == "__main__":
    main()
