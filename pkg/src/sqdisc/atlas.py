"""Zero sets of all polynomials with coefficients in a finite set, rasterized.

The enumeration is cut into fixed chunks (one degree, at most
``CHUNK_SIZE`` consecutive polynomials). Chunks are the unit of work for
both serial and parallel runs, so the floating-point path of every root is
the same whatever the worker count, and channel grids merge by integer
addition.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from .constructions import CoeffSet
from .discriminant import discriminant
from .poly import IntPolynomial
from .roots import ACCEPT_RESIDUAL, aberth_batch

log = logging.getLogger(__name__)

CHUNK_SIZE = 4096


@dataclass(frozen=True)
class RenderConfig:
    coeff_set: CoeffSet
    max_degree: int
    center: complex = 0j
    half_width: float = 2.0
    width: int = 512
    height: int = 512
    square_only: bool = False
    overlay: bool = True

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("resolution must be positive")
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")


@dataclass
class Raster:
    config: RenderConfig
    all_roots: np.ndarray = field(default=None)
    square: np.ndarray = field(default=None)
    skipped: int = 0

    def __post_init__(self):
        shape = (self.config.height, self.config.width)
        if self.all_roots is None:
            self.all_roots = np.zeros(shape, dtype=np.int64)
        if self.square is None:
            self.square = np.zeros(shape, dtype=np.int64)

    def __add__(self, other: "Raster") -> "Raster":
        return Raster(
            self.config,
            self.all_roots + other.all_roots,
            self.square + other.square,
            self.skipped + other.skipped,
        )

    def __eq__(self, other) -> bool:
        return (
            np.array_equal(self.all_roots, other.all_roots)
            and np.array_equal(self.square, other.square)
            and self.skipped == other.skipped
        )


# --- enumeration ------------------------------------------------------------


def _digit_sets(cs: CoeffSet, d: int) -> list[list[int]]:
    els = cs.sorted()
    nonzero = [a for a in els if a]
    lead = [a for a in nonzero if a > 0] if cs.negation_closed else nonzero
    return [nonzero] + [els] * (d - 1) + [lead]


def count_degree(cs: CoeffSet, d: int) -> int:
    return math.prod(len(s) for s in _digit_sets(cs, d))


def degree_block(cs: CoeffSet, d: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start:stop`` of the degree-``d`` enumeration, constant term first.

    Order is lexicographic in (a_0, a_1, ..., a_d) over the sorted set.
    """
    sets = _digit_sets(cs, d)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, d + 1), dtype=np.int64)
    for pos in range(d, -1, -1):
        base = len(sets[pos])
        out[:, pos] = np.asarray(sets[pos], dtype=np.int64)[idx % base]
        idx //= base
    return out


def enumerate_polynomials(cs: CoeffSet, max_degree: int) -> Iterator[IntPolynomial]:
    """Every f in P(N) with 1 <= deg f <= max_degree.

    For negation-closed sets only positive leading coefficients appear, since
    f and -f share zeros and discriminant.
    """
    for d in range(1, max_degree + 1):
        n = count_degree(cs, d)
        for start in range(0, n, CHUNK_SIZE):
            for row in degree_block(cs, d, start, min(n, start + CHUNK_SIZE)):
                yield IntPolynomial(tuple(int(a) for a in row))


def chunks(config: RenderConfig) -> list[tuple[int, int, int]]:
    out = []
    for d in range(1, config.max_degree + 1):
        n = count_degree(config.coeff_set, d)
        out += [(d, s, min(n, s + CHUNK_SIZE)) for s in range(0, n, CHUNK_SIZE)]
    return out


# --- root cloud -------------------------------------------------------------


@dataclass
class ChunkCloud:
    degree: int
    roots: np.ndarray  # (m, d) complex; rows of skipped polynomials removed
    disc_square: np.ndarray  # (m,) bool
    disc_zero: np.ndarray  # (m,) bool
    skipped: int


def process_chunk(cs: CoeffSet, chunk: tuple[int, int, int]) -> ChunkCloud:
    d, start, stop = chunk
    C = degree_block(cs, d, start, stop)
    z, resid = aberth_batch(C.astype(float))
    ok = np.all(resid < ACCEPT_RESIDUAL, axis=1)
    sq = np.empty(len(C), dtype=bool)
    zero = np.empty(len(C), dtype=bool)
    for i, row in enumerate(C.tolist()):
        disc = discriminant(IntPolynomial(tuple(row)))
        sq[i] = disc.is_square
        zero[i] = disc.is_zero
    return ChunkCloud(d, z[ok], sq[ok], zero[ok], int((~ok).sum()))


def _process(args):
    return process_chunk(*args)


def iter_chunk_clouds(config: RenderConfig, chunk_list=None, workers: int = 1) -> Iterator[ChunkCloud]:
    chunk_list = chunks(config) if chunk_list is None else chunk_list
    jobs = [(config.coeff_set, c) for c in chunk_list]
    if workers <= 1:
        for job in jobs:
            yield _process(job)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            yield from ex.map(_process, jobs)


def build_root_cloud(config: RenderConfig, workers: int = 1):
    """Yield (root, degree, disc_is_square, disc_is_zero) in enumeration order."""
    skipped = 0
    for cc in iter_chunk_clouds(config, workers=workers):
        skipped += cc.skipped
        for row, s, zr in zip(cc.roots, cc.disc_square, cc.disc_zero):
            for root in row:
                yield complex(root), cc.degree, bool(s), bool(zr)
    if skipped:
        log.warning("skipped %d polynomials (root finder did not converge)", skipped)


# --- raster -----------------------------------------------------------------


def pixel_coords(config: RenderConfig, z: np.ndarray):
    """Pixel (x, y) per root and an in-window mask; half-open edges."""
    w = config.half_width
    cx, cy = config.center.real, config.center.imag
    x = np.floor((z.real - cx + w) / (2 * w) * config.width)
    y = np.floor((cy + w - z.imag) / (2 * w) * config.height)
    inside = (x >= 0) & (x < config.width) & (y >= 0) & (y < config.height)
    return x.astype(np.int64), y.astype(np.int64), inside


def accumulate(raster: Raster, cc: ChunkCloud) -> None:
    cfg = raster.config
    if cc.roots.size:
        z = cc.roots.ravel()
        sq = np.repeat(cc.disc_square, cc.roots.shape[1])
        x, y, inside = pixel_coords(cfg, z)
        np.add.at(raster.all_roots, (y[inside], x[inside]), 1)
        m = inside & sq
        np.add.at(raster.square, (y[m], x[m]), 1)
    raster.skipped += cc.skipped


def rasterize(
    config: RenderConfig,
    workers: int = 1,
    chunk_list: Optional[Sequence[tuple[int, int, int]]] = None,
    collect: Optional[list] = None,
) -> Raster:
    """Hit counts of all roots and of square-discriminant roots.

    ``chunk_list`` restricts the work to a partition of :func:`chunks`;
    rasters of disjoint partitions add up to the full raster. Chunk clouds
    are appended to ``collect`` in order when given.
    """
    raster = Raster(config)
    for cc in iter_chunk_clouds(config, chunk_list, workers):
        accumulate(raster, cc)
        if collect is not None:
            collect.append(cc)
    if raster.skipped:
        log.warning("skipped %d polynomials", raster.skipped)
    return raster


# --- output -----------------------------------------------------------------


def to_rgb(raster: Raster) -> np.ndarray:
    cfg = raster.config
    base = raster.square if cfg.square_only else raster.all_roots
    cmax = int(base.max())
    if cmax > 0:
        grey = 255.0 * (1.0 - np.log1p(base) / math.log1p(cmax))
    else:
        grey = np.full(base.shape, 255.0)
    grey = np.rint(grey).astype(np.uint8)
    img = np.repeat(grey[:, :, None], 3, axis=2)
    if cfg.overlay and not cfg.square_only:
        img[raster.square > 0] = (255, 0, 0)
    return img


def write_ppm(path, img: np.ndarray) -> None:
    h, w, _ = img.shape
    try:
        with open(path, "wb") as fh:
            fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
            fh.write(np.ascontiguousarray(img, dtype=np.uint8).tobytes())
    except OSError as exc:
        raise OSError(f"cannot write image {path}: {exc}") from exc


def write_csv(path, clouds: Sequence[ChunkCloud]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("re,im,degree,disc_square,disc_zero\n")
            for cc in clouds:
                for row, s, zr in zip(cc.roots, cc.disc_square, cc.disc_zero):
                    tail = f",{cc.degree},{'true' if s else 'false'},{'true' if zr else 'false'}\n"
                    fh.write("".join(f"{z.real:.17g},{z.imag:.17g}{tail}" for z in row))
    except OSError as exc:
        raise OSError(f"cannot write csv {path}: {exc}") from exc


def emit_artifacts(raster: Raster, out_image, out_csv=None, clouds: Sequence[ChunkCloud] = ()) -> None:
    write_ppm(Path(out_image), to_rgb(raster))
    if out_csv is not None:
        write_csv(Path(out_csv), clouds)


def read_ppm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    assert parts[0] == b"P6"
    w, h = map(int, parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(h, w, 3)
