"""Expansion-free share encoding, stacking and contrast measurement.

Each secret pixel becomes exactly one pixel per share: the pixel's color
selects a basis matrix (white -> C0, black -> C1), one of its m columns is
sampled uniformly, and share i receives row i of that column.  Sampling
never materialises the matrices; a weight class is picked with probability
(copies * C(n,j)) / m and a uniform weight-j row subset stands in for the
column (every weight-j pattern occurs equally often inside a class, so the
distribution is exactly the uniform-column one).

Pixel polarity is 0 = white, 1 = black everywhere, which is also the PBM
convention, so rasters round-trip with no inversion.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .backend import get_backend
from .codebook import CodebookSpec, SchemeParams, codebook_for, column_count

DEFAULT_SEED = 0xD1CE5EED


@dataclass(frozen=True)
class BinaryImage:
    """A width x height bit raster; 0 = white, 1 = black."""

    pixels: np.ndarray  # shape (height, width), dtype uint8, values {0,1}

    def __post_init__(self):
        px = np.ascontiguousarray(self.pixels, dtype=np.uint8)
        if px.ndim != 2:
            raise ValueError("pixels must be a 2-d array")
        if px.size and px.max() > 1:
            raise ValueError("pixels must be strictly binary (0 or 1)")
        object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            (self.pixels == other.pixels).all()
        )

    def __hash__(self):
        return hash((self.pixels.shape, self.pixels.tobytes()))


@dataclass(frozen=True)
class ShareSet:
    """The n share rasters produced from one secret image."""

    shares: tuple[BinaryImage, ...]
    seed: int
    params: SchemeParams | None = None  # set when built from scheme parameters

    def __post_init__(self):
        if not self.shares:
            raise ValueError("a share set needs at least one share")
        first = self.shares[0]
        for s in self.shares:
            if (s.width, s.height) != (first.width, first.height):
                raise ValueError("all shares must have identical dimensions")

    @property
    def n(self) -> int:
        return len(self.shares)


def encode(
    secret: BinaryImage,
    spec: CodebookSpec,
    seed: int = DEFAULT_SEED,
    params: SchemeParams | None = None,
    backend: str | None = None,
) -> ShareSet:
    """Encode a secret image into n shares, deterministically in seed.

    Each pixel is processed with its own (seed, index)-keyed random stream
    (see pvss.rng), so the result is independent of processing order.
    """
    if secret.width == 0 or secret.height == 0:
        raise ValueError("cannot encode an empty image")
    n = spec.n
    if n > 64:
        raise ValueError("n must be at most 64")

    classes0 = spec.side_class_sizes(0)
    classes1 = spec.side_class_sizes(1)
    kernel = get_backend(backend)
    masks = kernel.encode_pixels(
        secret.pixels.reshape(-1),
        np.array([w for w, _ in classes0], dtype=np.int32),
        np.array([s for _, s in classes0], dtype=np.uint64),
        np.array([w for w, _ in classes1], dtype=np.int32),
        np.array([s for _, s in classes1], dtype=np.uint64),
        n,
        spec.m,
        seed,
    )
    shares = []
    for i in range(n):
        bits = ((masks >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
        shares.append(BinaryImage(bits.reshape(secret.height, secret.width)))
    return ShareSet(shares=tuple(shares), seed=seed, params=params)


def encode_with_params(
    secret: BinaryImage,
    params: SchemeParams,
    seed: int = DEFAULT_SEED,
    backend: str | None = None,
) -> ShareSet:
    """Build the codebook for params and encode in one step."""
    return encode(secret, codebook_for(params), seed, params=params, backend=backend)


def stack(shares: Sequence[BinaryImage]) -> BinaryImage:
    """Superimpose shares by pixel-wise OR (black wins)."""
    if not shares:
        raise ValueError("need at least one share to stack")
    first = shares[0]
    acc = first.pixels.copy()
    for s in shares[1:]:
        if s.pixels.shape != acc.shape:
            raise ValueError(
                f"share dimensions differ: {s.pixels.shape} vs {acc.shape}"
            )
        np.bitwise_or(acc, s.pixels, out=acc)
    return BinaryImage(acc)


def empirical_contrast(
    stacked: BinaryImage, secret: BinaryImage
) -> tuple[Fraction, Fraction, Fraction]:
    """White-pixel rates of the stacked image over the secret's two regions.

    Returns (rate over white region, rate over black region, difference),
    all as exact fractions of pixel counts.
    """
    if stacked.pixels.shape != secret.pixels.shape:
        raise ValueError("stacked image and secret must have equal dimensions")
    white = secret.pixels == 0
    black = ~white
    n_white = int(white.sum())
    n_black = int(black.sum())
    if n_white == 0:
        raise ValueError("secret image has no white region")
    if n_black == 0:
        raise ValueError("secret image has no black region")
    white_rate = Fraction(int((stacked.pixels[white] == 0).sum()), n_white)
    black_rate = Fraction(int((stacked.pixels[black] == 0).sum()), n_black)
    return white_rate, black_rate, white_rate - black_rate


# --- PBM file format (P1 ascii / P4 packed), plus share-set sidecars ---

_TOKEN = re.compile(rb"\S+")


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """First `count` whitespace-separated tokens, skipping # comments."""
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < count:
        match = _TOKEN.search(data, pos)
        if match is None:
            raise ValueError("truncated PBM header")
        tok = match.group()
        if tok.startswith(b"#"):
            eol = data.find(b"\n", match.start())
            if eol < 0:
                raise ValueError("unterminated PBM comment")
            pos = eol + 1
            continue
        tokens.append(tok)
        pos = match.end()
    return tokens, pos


def loads_pbm(data: bytes) -> BinaryImage:
    """Parse a PBM image from bytes (P1 or P4)."""
    (magic, w_tok, h_tok), pos = _header_tokens(data, 3)
    if magic not in (b"P1", b"P4"):
        raise ValueError(f"not a PBM image (magic {magic!r})")
    width, height = int(w_tok), int(h_tok)
    if width <= 0 or height <= 0:
        raise ValueError(f"invalid PBM dimensions {width}x{height}")

    if magic == b"P1":
        digits = []
        body = data[pos:]
        i = 0
        while i < len(body) and len(digits) < width * height:
            c = body[i : i + 1]
            if c == b"#":
                eol = body.find(b"\n", i)
                i = len(body) if eol < 0 else eol + 1
                continue
            if c in (b"0", b"1"):
                digits.append(0 if c == b"0" else 1)
            elif not c.isspace():
                raise ValueError(f"unexpected byte {c!r} in P1 raster")
            i += 1
        if len(digits) < width * height:
            raise ValueError("truncated P1 raster")
        px = np.array(digits, dtype=np.uint8).reshape(height, width)
        return BinaryImage(px)

    # P4: a single whitespace byte after the header, then packed rows
    row_bytes = (width + 7) // 8
    start = pos + 1
    raster = data[start : start + row_bytes * height]
    if len(raster) < row_bytes * height:
        raise ValueError("truncated P4 raster")
    rows = np.frombuffer(raster, dtype=np.uint8).reshape(height, row_bytes)
    px = np.unpackbits(rows, axis=1)[:, :width]
    return BinaryImage(px)


def dumps_pbm(image: BinaryImage, ascii: bool = False) -> bytes:
    """Serialize to PBM bytes; packed P4 by default, P1 when ascii=True."""
    header = f"{'P1' if ascii else 'P4'}\n{image.width} {image.height}\n"
    if ascii:
        lines = []
        for row in image.pixels:
            digits = "".join("1" if b else "0" for b in row)
            # keep plain-format lines short
            lines.extend(digits[i : i + 64] for i in range(0, len(digits), 64))
        return header.encode() + "\n".join(lines).encode() + b"\n"
    packed = np.packbits(image.pixels, axis=1)
    return header.encode() + packed.tobytes()


def read_pbm(path: str | Path) -> BinaryImage:
    return loads_pbm(Path(path).read_bytes())


def write_pbm(image: BinaryImage, path: str | Path, ascii: bool = False) -> None:
    Path(path).write_bytes(dumps_pbm(image, ascii=ascii))


def share_path(stem: str | Path, index: int) -> Path:
    """Path of share `index` (1-based) for a given output stem."""
    stem = Path(stem)
    return stem.with_name(f"{stem.name}.share{index}.pbm")


def sidecar_path(stem: str | Path) -> Path:
    stem = Path(stem)
    return stem.with_name(f"{stem.name}.vss.json")


def save_share_set(share_set: ShareSet, stem: str | Path) -> list[Path]:
    """Write share<i>.pbm files plus the metadata sidecar; returns the paths."""
    if share_set.params is None:
        raise ValueError("share set has no scheme parameters to record")
    paths = []
    for i, share in enumerate(share_set.shares, start=1):
        p = share_path(stem, i)
        write_pbm(share, p)
        paths.append(p)
    meta = {
        "k": share_set.params.k,
        "n": share_set.params.n,
        "start_row": share_set.params.start_row,
        "m": column_count(share_set.params),
        "seed": share_set.seed,
    }
    side = sidecar_path(stem)
    side.write_text(json.dumps(meta, indent=2) + "\n")
    paths.append(side)
    return paths
