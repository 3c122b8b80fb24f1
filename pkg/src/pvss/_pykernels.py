"""Pure-Python implementations of the two hot kernels.

Selected automatically when the compiled extension is unavailable (see
``pvss.backend``).  Outputs are bit-identical to the compiled kernels; the
test suite enforces parity whenever both are importable.
"""

from __future__ import annotations

import numpy as np

from .rng import GAMMA, MASK64, _MULT1, _MULT2

NAME = "python"


def zero_counts_all_subsets(masks: np.ndarray, mults: np.ndarray, n: int) -> np.ndarray:
    """Zero-column counts of one basis matrix for every row subset.

    ``masks[i]`` is the bit pattern of a distinct column, ``mults[i]`` its
    multiplicity.  Returns an int64 array z of length 2**n where z[S] is the
    number of columns (with multiplicity) whose OR restricted to the rows in
    S is all-zero, i.e. whose mask is disjoint from S.

    Uses the subset-sum (zeta) transform: accumulate counts of masks into
    f, fold bit by bit so f[U] becomes the number of columns contained in U,
    then read the answer at the complement of each subset.
    """
    size = 1 << n
    f = np.zeros(size, dtype=np.int64)
    np.add.at(f, masks.astype(np.int64), mults.astype(np.int64))
    for b in range(n):
        f = f.reshape(-1, 2, 1 << b)
        f[:, 1, :] += f[:, 0, :]
    f = f.reshape(size)
    # complement of S within n bits is (size - 1) - S: just reverse
    return f[::-1].copy()


def encode_pixels(
    bits: np.ndarray,
    weights0: np.ndarray,
    sizes0: np.ndarray,
    weights1: np.ndarray,
    sizes1: np.ndarray,
    n: int,
    m: int,
    seed: int,
) -> np.ndarray:
    """Sample one basis-matrix column pattern per pixel.

    ``bits`` holds the secret pixels in row-major order (0 white, 1 black).
    ``weightsX``/``sizesX`` describe side X's weight classes in ascending
    weight order: class t contributes sizes[t] of the m columns and its
    columns have weight weights[t].  Returns a uint64 array of column bit
    masks, one per pixel (bit i = share i's pixel turns black).

    The draw sequence per pixel is fixed by pvss.rng: one bounded draw in
    [0, m) picks the class, then a partial Fisher-Yates shuffle picks the
    weight-j row subset.
    """
    sides = (
        [(int(w), int(s)) for w, s in zip(weights0, sizes0)],
        [(int(w), int(s)) for w, s in zip(weights1, sizes1)],
    )
    seed_mixed = _mix(int(seed) & MASK64)
    m = int(m)
    two64 = 1 << 64
    rows = list(range(n))
    out = []

    for index, bit in enumerate(np.asarray(bits, dtype=np.uint8).tolist()):
        state = _mix(seed_mixed ^ ((index * GAMMA) & MASK64))

        # class pick: uniform column index in [0, m)
        r, state = _below(m, state, two64)
        j = 0
        for weight, size in sides[bit]:
            if r < size:
                j = weight
                break
            r -= size

        # uniform j-subset of rows via partial Fisher-Yates
        idx = rows.copy()
        mask = 0
        for t in range(j):
            r, state = _below(n - t, state, two64)
            r += t
            idx[t], idx[r] = idx[r], idx[t]
            mask |= 1 << idx[t]
        out.append(mask)
    return np.array(out, dtype=np.uint64)


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MULT1) & MASK64
    z = ((z ^ (z >> 27)) * _MULT2) & MASK64
    return z ^ (z >> 31)


def _below(bound: int, state: int, two64: int) -> tuple[int, int]:
    # modulo rejection, matching rng.PixelStream.next_below
    if bound == 1:
        return 0, state
    cutoff = (two64 - bound) % bound
    while True:
        state = (state + GAMMA) & MASK64
        u = _mix(state)
        if u >= cutoff:
            return u % bound, state
