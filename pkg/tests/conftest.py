"""Shared fixtures: independent oracles and frozen known-good data.

The oracles here deliberately avoid the library's fast paths: binomials come
from math.comb plus the reflection identity, and subset checks walk explicit
matrices column by column in plain Python.  Tests compare the library
against these slow routes.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np
import pytest

from pvss import SchemeParams, codebook_for, expand


def oracle_binomial(n: int, m: int) -> int:
    """Generalized binomial via math.comb and the upper-negation identity."""
    if m < 0:
        raise ValueError
    if n >= 0:
        return comb(n, m) if m <= n else 0
    return (-1) ** m * comb(-n + m - 1, m)


def oracle_zero_columns(matrix, rows) -> int:
    """Count columns whose OR over the given 0-based rows is zero."""
    matrix = np.asarray(matrix)
    count = 0
    for col in range(matrix.shape[1]):
        if all(matrix[r, col] == 0 for r in rows):
            count += 1
    return count


def oracle_all_subset_diffs(c0, c1, n: int) -> dict[int, set[int]]:
    """Exhaustive per-size diff sets via itertools, no bit tricks."""
    out: dict[int, set[int]] = {q: set() for q in range(1, n + 1)}
    for q in range(1, n + 1):
        for rows in itertools.combinations(range(n), q):
            d = oracle_zero_columns(c0, rows) - oracle_zero_columns(c1, rows)
            out[q].add(d)
    return out


def scheme_pair(k: int, n: int, start_row: int | None = None):
    params = SchemeParams(k=k, n=n, start_row=start_row)
    return expand(codebook_for(params), n), params


def columns_multiset(matrix) -> list[tuple[int, ...]]:
    return sorted(tuple(int(v) for v in col) for col in np.asarray(matrix).T)


# --- matrices exactly as printed in the source worked examples ---

EX1_C0 = np.array([  # (2,4): [3*M(4,0), M(4,4)]
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
], dtype=np.uint8)

EX1_C1 = np.array([  # (2,4): [M(4,1)]
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
], dtype=np.uint8)

EX2_C0 = np.array([  # (3,4): [2*M(4,0), M(4,3)]
    [0, 0, 1, 1, 1, 0],
    [0, 0, 1, 1, 0, 1],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 1, 1],
], dtype=np.uint8)

EX2_C1 = np.array([  # (3,4): [M(4,1), 2*M(4,4)]
    [1, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 1, 1],
], dtype=np.uint8)

EX3_C0 = np.array([  # (4,5): [3*M(5,0), M(5,2), 2*M(5,5)]
    [0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1],
], dtype=np.uint8)

EX3_C1 = np.array([  # (4,5): [2*M(5,1), M(5,4)] (block order as printed)
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1],
    [0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1],
], dtype=np.uint8)

# (2,2) demo pair: C0 = [M(2,0), M(2,2)], C1 = [M(2,1)]
DEMO22_C0 = np.array([[0, 1], [0, 1]], dtype=np.uint8)
DEMO22_C1 = np.array([[0, 1], [1, 0]], dtype=np.uint8)


@pytest.fixture
def half_card():
    """128x128 test card, left half white, right half black."""
    from pvss import BinaryImage

    px = np.zeros((128, 128), dtype=np.uint8)
    px[:, 64:] = 1
    return BinaryImage(px)
