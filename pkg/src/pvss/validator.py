"""Exhaustive verification of security and contrast for basis-matrix pairs.

The defining conditions quantify over every nonempty subset Q of the n share
rows: stacking (OR-ing) the rows of Q must reveal nothing for |Q| < k and
must leave C0 with strictly more all-zero columns than C1 for |Q| >= k.
Verification here is literal: all 2^n - 1 subsets are enumerated through the
kernel backend and the observed zero-count differences are aggregated per
subset size.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from . import references
from .backend import get_backend
from .codebook import (
    BasisMatrixPair,
    SchemeParams,
    default_start_row,
    theoretical_contrast,
)
from .pascal import gbinom

DEFAULT_ENUM_CAP = 24
ENUM_CAP_ENV = "PVSS_MAX_N"


def _enum_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class SubsetDiff:
    """Zero-column counts of both matrices restricted to one row subset."""

    q: int
    subset: frozenset[int]  # 1-based row indices
    zero_cols_c0: int
    zero_cols_c1: int

    @property
    def diff(self) -> int:
        return self.zero_cols_c0 - self.zero_cols_c1


@dataclass(frozen=True)
class ValidationReport:
    """Aggregated result of enumerating every nonempty row subset."""

    k: int
    n: int
    start_row: int  # baseline for the predicted per-q difference
    m: int
    security_ok: bool
    predicted_match_ok: bool
    progressive_ok: bool
    per_q_diff: dict[int, frozenset[int]]
    contrast_per_q: dict[int, Optional[Fraction]]

    @property
    def valid(self) -> bool:
        """Security holds and stacking q >= k shares always shows contrast."""
        return self.security_ok and all(
            len(diffs) == 1 and min(diffs) > 0
            for q, diffs in self.per_q_diff.items()
            if q >= self.k
        )

    def to_json(self) -> dict:
        per_q = []
        for q in sorted(self.per_q_diff):
            diffs = sorted(self.per_q_diff[q])
            entry: dict = {"q": q}
            if len(diffs) == 1:
                entry["diff"] = diffs[0]
                entry["alpha_num"] = diffs[0]
                entry["alpha_den"] = self.m
            else:  # non-uniform: scheme is broken, expose everything observed
                entry["diff"] = diffs
                entry["alpha_num"] = None
                entry["alpha_den"] = self.m
            per_q.append(entry)
        return {
            "params": {"k": self.k, "n": self.n, "start_row": self.start_row},
            "security_ok": self.security_ok,
            "progressive_ok": self.progressive_ok,
            "predicted_match_ok": self.predicted_match_ok,
            "per_q": per_q,
        }


def predicted_diff(k: int, n: int, start_row: int, q: int) -> int:
    """Zero-count difference the construction should show for q >= k."""
    return gbinom(start_row - n + q, q - k)


def subset_diff(pair: BasisMatrixPair, subset: Iterable[int]) -> SubsetDiff:
    """OR the selected rows of each matrix and count all-zero columns."""
    rows = frozenset(subset)
    if not rows:
        raise ValueError("subset must be nonempty")
    if not all(1 <= r <= pair.n for r in rows):
        raise ValueError(f"row indices must lie in 1..{pair.n}, got {sorted(rows)}")
    sel = [r - 1 for r in sorted(rows)]
    z0 = int((pair.c0[sel].any(axis=0) == 0).sum())
    z1 = int((pair.c1[sel].any(axis=0) == 0).sum())
    return SubsetDiff(q=len(rows), subset=rows, zero_cols_c0=z0, zero_cols_c1=z1)


def _zero_counts(pair: BasisMatrixPair, side: int, kernel) -> np.ndarray:
    masks = pair.column_masks(side)
    uniq, counts = np.unique(masks, return_counts=True)
    return kernel.zero_counts_all_subsets(uniq, counts, pair.n)


def verify_scheme(
    pair: BasisMatrixPair,
    k: int,
    start_row: int | None = None,
    backend: str | None = None,
) -> ValidationReport:
    """Enumerate all nonempty row subsets and check the scheme conditions.

    start_row sets the baseline for the predicted difference values; leave
    it None for matrices built with the default (symmetric) start row.
    Accepts arbitrary binary matrix pairs, not only constructed ones.
    """
    n = pair.n
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    cap = _enum_cap()
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the enumeration cap {cap}; "
            f"raise {ENUM_CAP_ENV} to override"
        )
    if start_row is None:
        start_row = default_start_row(k, n)

    kernel = get_backend(backend)
    diff = _zero_counts(pair, 0, kernel)
    diff -= _zero_counts(pair, 1, kernel)
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.uint64))

    per_q_diff: dict[int, frozenset[int]] = {}
    for q in range(1, n + 1):
        values = np.unique(diff[sizes == q])
        per_q_diff[q] = frozenset(int(v) for v in values)

    m = pair.m
    security_ok = all(per_q_diff[q] == {0} for q in range(1, k))
    predicted_match_ok = all(
        per_q_diff[q] == {predicted_diff(k, n, start_row, q)}
        for q in range(k, n + 1)
    )
    contrast_per_q: dict[int, Optional[Fraction]] = {}
    common: list[int] = []
    uniform = True
    for q in range(k, n + 1):
        diffs = per_q_diff[q]
        if len(diffs) == 1:
            d = next(iter(diffs))
            common.append(d)
            contrast_per_q[q] = Fraction(d, m)
        else:
            uniform = False
            contrast_per_q[q] = None
    progressive_ok = uniform and all(a < b for a, b in zip(common, common[1:]))

    return ValidationReport(
        k=k,
        n=n,
        start_row=start_row,
        m=m,
        security_ok=security_ok,
        predicted_match_ok=predicted_match_ok,
        progressive_ok=progressive_ok,
        per_q_diff=per_q_diff,
        contrast_per_q=contrast_per_q,
    )


@dataclass(frozen=True)
class LemmaCheck:
    """Direct summation vs closed form of the alternating binomial identity."""

    s: int
    t: int
    r: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def lemma_identity_check(s: int, t: int, r: int) -> LemmaCheck:
    """Check sum_{i=0}^t (-1)^(t-i) C(t,t-i) C(s+r+i,s) against its closed form.

    The closed form is 0 for t >= s+1 and C(s+r, s-t) otherwise; the left
    side is summed term by term, so the two routes are independent.
    """
    if s < 0 or t < 0:
        raise ValueError(f"s and t must be nonnegative, got s={s}, t={t}")
    lhs = 0
    for i in range(t + 1):
        sign = -1 if (t - i) % 2 else 1
        lhs += sign * gbinom(t, t - i) * gbinom(s + r + i, s)
    rhs = 0 if t >= s + 1 else gbinom(s + r, s - t)
    return LemmaCheck(s=s, t=t, r=r, lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class ProfilePoint:
    q: int
    ours: Fraction
    reference: Fraction
    ours_pair: tuple[int, int]
    reference_pair: tuple[int, int]


@dataclass(frozen=True)
class ReferenceComparison:
    """Our contrast at q=k next to the published linear-programming optimum."""

    params: SchemeParams
    ours: Fraction
    opt: Fraction
    matches_opt: bool
    profile: Optional[tuple[ProfilePoint, ...]]  # (3,8) stacking profile


def reference_compare(params: SchemeParams) -> Optional[ReferenceComparison]:
    """Compare against embedded reference constants; None when out of range."""
    key = (params.k, params.n)
    if key not in references.OPT_CONTRAST:
        return None
    ours = theoretical_contrast(params, params.k)
    opt = references.as_fraction(references.OPT_CONTRAST[key])
    profile = None
    if key == (3, 8) and params.start_row == default_start_row(3, 8):
        points = []
        for q in references.HKS38_Q:
            ours_pair = references.HKS38_OURS[q]
            ref_pair = references.HKS38_REFERENCE[q]
            points.append(
                ProfilePoint(
                    q=q,
                    ours=theoretical_contrast(params, q),
                    reference=references.as_fraction(ref_pair),
                    ours_pair=ours_pair,
                    reference_pair=ref_pair,
                )
            )
        profile = tuple(points)
    return ReferenceComparison(
        params=params,
        ours=ours,
        opt=opt,
        matches_opt=ours == opt,
        profile=profile,
    )
