"""Fixed coefficient vectors of two cusp forms, used as Deligne-bound test data.

``G1`` has coefficients in ``Z[sqrt(-3)]``; an entry ``(a, b)`` stands for
``a + b sqrt(3) i``.  ``G2`` has integer coefficients and is listed through
``q^19``; unlisted indices up to 19 are zero.
"""
from __future__ import annotations

G1_WEIGHT = 3
G1 = {
    1: (1, 0), 2: (-1, -1), 3: (0, 1), 4: (-2, 2), 5: (-2, 0),
    6: (3, -1), 7: (0, -4), 8: (8, 0), 9: (-3, 0),
}

G2_WEIGHT = 3
G2_TRUNCATION = 19
G2 = {1: 1, 2: -2, 4: 4, 5: 8, 8: -8, 10: -16, 13: -10, 16: 16, 17: -16}


def sqrt_minus3_norm(c: tuple[int, int]) -> int:
    """``|a + b sqrt(3) i|^2 = a^2 + 3 b^2``."""
    a, b = c
    return a * a + 3 * b * b


def g1_coefficients() -> list:
    return [(0, 0)] + [G1[n] for n in range(1, max(G1) + 1)]


def g2_coefficients() -> list[int]:
    return [G2.get(n, 0) for n in range(G2_TRUNCATION + 1)]
