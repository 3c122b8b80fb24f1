"""Exact generalized binomial coefficients and triangle slices.

The generalized Pascal's triangle extends the familiar one to negative row
indices: column M is the degree-M polynomial

    C(N, M) = (1/M!) * prod_{i=1..M} (N + 1 - i)

which is an integer for every integer N.  Rows N >= 0 reproduce the classic
triangle (with zeros right of the diagonal); rows N < 0 hold the
alternating-sign coefficients of (1+x)^N.

Everything here is exact integer arithmetic.  Results are range-checked
against a signed 128-bit window so downstream consumers can rely on a fixed
portable value domain; the schemes built on top never come close to it.
"""

from __future__ import annotations

# Checked value range: signed 128-bit.
INT128_MAX = (1 << 127) - 1
INT128_MIN = -(1 << 127)


def gbinom(n: int, m: int) -> int:
    """Generalized binomial coefficient C(n, m) for any integer n, m >= 0.

    Raises OverflowError if the exact value leaves the signed 128-bit range,
    and ValueError for negative m.
    """
    if m < 0:
        raise ValueError(f"lower index must be nonnegative, got {m}")
    if m == 0:
        return 1
    if 0 <= n < m:
        return 0
    if n >= 0:
        # C(n, m) = C(n, n-m); the smaller lower index keeps intermediate
        # values monotonically increasing, so only the result needs checking.
        m = min(m, n - m)
        if m == 0:
            return 1
    value = 1
    for i in range(1, m + 1):
        # value stays equal to C(n, i), so the division is exact.
        value = value * (n + 1 - i) // i
    if not (INT128_MIN <= value <= INT128_MAX):
        raise OverflowError(
            f"binomial C({n}, {m}) exceeds the checked 128-bit range"
        )
    return value


def triangle_slice(row_lo: int, row_hi: int, col_hi: int) -> list[list[int]]:
    """Rectangular block of the triangle: rows row_lo..row_hi, columns 0..col_hi."""
    if row_lo > row_hi:
        raise ValueError(f"empty row range {row_lo}..{row_hi}")
    if col_hi < 0:
        raise ValueError(f"column bound must be nonnegative, got {col_hi}")
    return [
        [gbinom(n, m) for m in range(col_hi + 1)]
        for n in range(row_lo, row_hi + 1)
    ]
