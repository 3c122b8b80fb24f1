"""Codebook construction for (k,n)-threshold progressive visual secret sharing.

A scheme is specified by a signed coefficient sequence (a_0, ..., a_n) read
straight down column n-k of the generalized Pascal's triangle, starting at a
chosen row (by default row n - ceil(k/2), which centres the sequence and
empirically minimises the matrix size).  The sign rule

    v_j = (-1)^j * a_j

sends |v_j| copies of the "all weight-j columns" block to the white basis
matrix C0 when v_j > 0 and to the black basis matrix C1 when v_j < 0.  Both
matrices end up with the same column count m, which doubles as the contrast
denominator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .pascal import gbinom

# n x m cells; expanding anything larger is almost certainly a mistake.
DEFAULT_CELL_LIMIT = 10**8

MAX_SHARES = 64  # column bit patterns must fit a machine word


class BalanceError(ValueError):
    """The two sides of a coefficient sequence have unequal column counts."""


def default_start_row(k: int, n: int) -> int:
    return n - -(-k // 2)  # n - ceil(k/2)


@dataclass(frozen=True)
class SchemeParams:
    """Threshold k, share count n, and the triangle row the sequence starts at."""

    k: int
    n: int
    start_row: int = None  # type: ignore[assignment]  # None -> symmetric default

    def __post_init__(self):
        if not 2 <= self.k <= self.n:
            raise ValueError(f"need 2 <= k <= n, got k={self.k}, n={self.n}")
        if self.n > MAX_SHARES:
            raise ValueError(f"n={self.n} exceeds the supported maximum {MAX_SHARES}")
        if self.start_row is None:
            object.__setattr__(self, "start_row", default_start_row(self.k, self.n))

    @property
    def column(self) -> int:
        """Triangle column the coefficients are read from."""
        return self.n - self.k


@dataclass(frozen=True)
class CodebookSpec:
    """Compact codebook: per-weight block copy counts for each side.

    c0_counts/c1_counts map a column weight j to how many copies of the
    block of all C(n,j) distinct weight-j columns the side contains.  m is
    the common column count of both sides.
    """

    n: int
    c0_counts: dict[int, int]
    c1_counts: dict[int, int]
    m: int

    def side_blocks(self, side: int) -> list[tuple[int, int]]:
        """(weight, copies) pairs for side 0 or 1, ascending by weight."""
        counts = self.c0_counts if side == 0 else self.c1_counts
        return sorted(counts.items())

    def side_class_sizes(self, side: int) -> list[tuple[int, int]]:
        """(weight, columns contributed) pairs; the sizes sum to m."""
        return [(j, c * comb(self.n, j)) for j, c in self.side_blocks(side)]


@dataclass(frozen=True)
class BasisMatrixPair:
    """Explicit n x m binary basis matrices in canonical column order."""

    c0: np.ndarray
    c1: np.ndarray

    def __post_init__(self):
        for name, mat in (("c0", self.c0), ("c1", self.c1)):
            if mat.ndim != 2:
                raise ValueError(f"{name} must be a 2-d array")
            if not np.isin(mat, (0, 1)).all():
                raise ValueError(f"{name} must be binary")
        if self.c0.shape != self.c1.shape:
            raise ValueError(
                f"basis matrices differ in shape: {self.c0.shape} vs {self.c1.shape}"
            )

    @property
    def n(self) -> int:
        return self.c0.shape[0]

    @property
    def m(self) -> int:
        return self.c0.shape[1]

    def column_masks(self, side: int) -> np.ndarray:
        """Each column as an integer bit mask (bit i = row i), dtype uint64."""
        mat = (self.c0 if side == 0 else self.c1).astype(np.uint64)
        weights = (np.uint64(1) << np.arange(self.n, dtype=np.uint64))[:, None]
        return (mat * weights).sum(axis=0, dtype=np.uint64)


def build_sequence(params: SchemeParams) -> tuple[int, ...]:
    """Coefficient sequence a_j = C(start_row - j, n - k) for j = 0..n."""
    col = params.column
    return tuple(gbinom(params.start_row - j, col) for j in range(params.n + 1))


def assign_sides(seq: tuple[int, ...] | list[int]) -> CodebookSpec:
    """Split a coefficient sequence into the two sides by the sign rule.

    Works for any integer sequence of length n+1; raises BalanceError when
    the resulting sides would not have equal column counts (only possible
    for sequences that do not come from a single triangle column).
    """
    n = len(seq) - 1
    if n < 1:
        raise ValueError("sequence must have at least two entries")
    c0: dict[int, int] = {}
    c1: dict[int, int] = {}
    for j, a in enumerate(seq):
        v = a if j % 2 == 0 else -a
        if v > 0:
            c0[j] = v
        elif v < 0:
            c1[j] = -v
    m0 = sum(c * comb(n, j) for j, c in c0.items())
    m1 = sum(c * comb(n, j) for j, c in c1.items())
    if m0 != m1:
        raise BalanceError(
            f"sides are unbalanced: C0 has {m0} columns, C1 has {m1}"
        )
    if m0 == 0:
        raise BalanceError("empty codebook: no nonzero coefficients")
    return CodebookSpec(n=n, c0_counts=c0, c1_counts=c1, m=m0)


def codebook_for(params: SchemeParams) -> CodebookSpec:
    """Convenience: coefficient sequence plus side assignment in one step."""
    return assign_sides(build_sequence(params))


def weight_block(n: int, j: int) -> np.ndarray:
    """The n x C(n,j) matrix of all distinct weight-j columns.

    Columns appear in lexicographic order of their row-index tuples, i.e.
    the subset {0,1} before {0,2} before {1,2}.
    """
    cols = comb(n, j)
    block = np.zeros((n, cols), dtype=np.uint8)
    for c, rows in enumerate(itertools.combinations(range(n), j)):
        block[list(rows), c] = 1
    return block


def _expand_side(spec: CodebookSpec, side: int) -> np.ndarray:
    blocks = []
    for j, copies in spec.side_blocks(side):
        base = weight_block(spec.n, j)
        # canonical order keeps the copies of each column adjacent
        blocks.append(np.repeat(base, copies, axis=1))
    if not blocks:
        return np.zeros((spec.n, 0), dtype=np.uint8)
    return np.concatenate(blocks, axis=1)


def expand(spec: CodebookSpec, n: int, cell_limit: int = DEFAULT_CELL_LIMIT) -> BasisMatrixPair:
    """Expand a compact codebook into explicit basis matrices.

    Columns are grouped by weight ascending and ordered lexicographically
    within a group, copies adjacent, so the result is deterministic.
    """
    if n != spec.n:
        raise ValueError(f"spec is for n={spec.n}, not n={n}")
    if n * spec.m > cell_limit:
        raise ValueError(
            f"expansion of {n}x{spec.m} = {n * spec.m} cells exceeds the "
            f"limit of {cell_limit}"
        )
    pair = BasisMatrixPair(c0=_expand_side(spec, 0), c1=_expand_side(spec, 1))
    assert pair.m == spec.m
    return pair


def column_count(params: SchemeParams) -> int:
    """Column count m of either basis matrix, by the closed form.

    m = (1/2) * sum_j C(n, j) * |a_j|: every coefficient contributes its
    block to exactly one side and the two sides balance.
    """
    total = sum(
        comb(params.n, j) * abs(a) for j, a in enumerate(build_sequence(params))
    )
    if total == 0 or total % 2 != 0:
        raise BalanceError(f"sequence for {params} does not split evenly")
    return total // 2


def contrast_numerator(params: SchemeParams, q: int) -> int:
    """Zero-column surplus of C0 over C1 when any q >= k shares are stacked.

    Equals C(start_row - n + q, q - k); with the default start row that is
    C(q - ceil(k/2), q - k).
    """
    if not params.k <= q <= params.n:
        raise ValueError(f"q must satisfy k <= q <= n, got q={q} for {params}")
    return gbinom(params.start_row - params.n + q, q - params.k)


def theoretical_contrast(params: SchemeParams, q: int) -> Fraction:
    """Contrast when stacking q shares, as an exact reduced fraction."""
    return Fraction(contrast_numerator(params, q), column_count(params))
