"""Published reference values used as regression gates and for comparison.

Two kinds of constants live here:

* ``OPT_CONTRAST`` and the ``HKS38_*`` profile come from Hofmeister, Krause
  and Simon, "Contrast-optimal k out of n secret sharing schemes in visual
  cryptography" (Theor. Comput. Sci. 240, 2000).  Their optimal-contrast
  values are the solution of a linear program; we embed them as exact
  rationals and never recompute them.

* ``EXPECTED_CONTRAST`` and ``EXPECTED_M`` are the known-correct outputs of
  the triangle construction for small parameters.  They gate the
  ``tables --check`` CI mode and the acceptance tests against regressions.

All fractions are stored as (numerator, denominator) pairs, unreduced where
the source kept them unreduced (e.g. 6/14).
"""

from __future__ import annotations

from fractions import Fraction

# --- contrast at q = k for the triangle construction, k = 2..4, n = k..10 ---

EXPECTED_CONTRAST: dict[tuple[int, int], tuple[int, int]] = {
    (2, 2): (1, 2), (2, 3): (1, 3), (2, 4): (1, 4), (2, 5): (1, 5),
    (2, 6): (1, 6), (2, 7): (1, 7), (2, 8): (1, 8), (2, 9): (1, 9),
    (2, 10): (1, 10),
    (3, 3): (1, 4), (3, 4): (1, 6), (3, 5): (1, 8), (3, 6): (1, 10),
    (3, 7): (1, 12), (3, 8): (1, 14), (3, 9): (1, 16), (3, 10): (1, 18),
    (4, 4): (1, 8), (4, 5): (1, 15), (4, 6): (1, 24), (4, 7): (1, 35),
    (4, 8): (1, 48), (4, 9): (1, 63), (4, 10): (1, 80),
}

# --- optimal contrast at q = k (Hofmeister et al., linear programming) ---

OPT_CONTRAST: dict[tuple[int, int], tuple[int, int]] = {
    (2, 2): (1, 2), (2, 3): (1, 3), (2, 4): (1, 3), (2, 5): (3, 10),
    (2, 6): (3, 10), (2, 7): (2, 7), (2, 8): (2, 7), (2, 9): (5, 18),
    (2, 10): (5, 18),
    (3, 3): (1, 4), (3, 4): (1, 6), (3, 5): (1, 8), (3, 6): (1, 10),
    (3, 7): (1, 10), (3, 8): (2, 21), (3, 9): (5, 56), (3, 10): (1, 12),
    (4, 4): (1, 8), (4, 5): (1, 15), (4, 6): (1, 18), (4, 7): (3, 70),
    (4, 8): (3, 80), (4, 9): (2, 63), (4, 10): (1, 35),
}

# --- basis-matrix column count m for 2 <= k <= n <= 10 ---

EXPECTED_M: dict[tuple[int, int], int] = {
    (2, 2): 2, (2, 3): 3, (2, 4): 4, (2, 5): 5, (2, 6): 6, (2, 7): 7,
    (2, 8): 8, (2, 9): 9, (2, 10): 10,
    (3, 3): 4, (3, 4): 6, (3, 5): 8, (3, 6): 10, (3, 7): 12, (3, 8): 14,
    (3, 9): 16, (3, 10): 18,
    (4, 4): 8, (4, 5): 15, (4, 6): 24, (4, 7): 35, (4, 8): 48, (4, 9): 63,
    (4, 10): 80,
    (5, 5): 16, (5, 6): 30, (5, 7): 48, (5, 8): 70, (5, 9): 96, (5, 10): 126,
    (6, 6): 32, (6, 7): 70, (6, 8): 128, (6, 9): 210, (6, 10): 320,
    (7, 7): 64, (7, 8): 140, (7, 9): 256, (7, 10): 420,
    (8, 8): 128, (8, 9): 315, (8, 10): 640,
    (9, 9): 256, (9, 10): 630,
    (10, 10): 512,
}

# --- (3,8): per-q contrast of ours vs the Hofmeister et al. scheme ---
# Their (3,8) basis matrices are C0 = [14*M(8,0), M(8,6)], C1 = [M(8,2), 14*M(8,8)]
# with m = 42; stacking q of 8 shares gives the profile below.

HKS38_Q = (3, 4, 5, 6, 7, 8)
HKS38_OURS: dict[int, tuple[int, int]] = {
    3: (1, 14), 4: (2, 14), 5: (3, 14), 6: (4, 14), 7: (5, 14), 8: (6, 14),
}
HKS38_REFERENCE: dict[int, tuple[int, int]] = {
    3: (4, 42), 4: (8, 42), 5: (11, 42), 6: (13, 42), 7: (14, 42), 8: (14, 42),
}


def as_fraction(pair: tuple[int, int]) -> Fraction:
    return Fraction(*pair)
