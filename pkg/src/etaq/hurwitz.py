"""Hurwitz class numbers by enumeration of reduced binary quadratic forms."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd, isqrt

from .arithmetic import divisors, is_fundamental_discriminant, is_squarefree, kronecker, mobius, sigma
from .qseries import CoeffSeries


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """Reduced positive definite forms ``(a, b, c)`` with ``b^2 - 4ac = -D``.

    Reduced means ``|b| <= a <= c`` and ``b >= 0`` whenever ``|b| = a`` or
    ``a = c``.  Imprimitive forms are included.
    """
    if D <= 0 or D % 4 in (1, 2):
        return []
    forms = []
    a = 1
    while 3 * a * a <= D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            q, r = divmod(b * b + D, 4 * a)
            if r or q < a:
                continue
            if b < 0 and q == a:
                continue
            forms.append((a, b, q))
        a += 1
    return forms


def _form_weight12(a: int, b: int, c: int) -> int:
    # 12 / |Aut(form)| in PSL_2(Z)
    if a == b == c:
        return 4
    if b == 0 and a == c:
        return 6
    return 12


class HurwitzCache:
    """On-demand table ``D -> H(D)``; concurrent fills are idempotent."""

    def __init__(self):
        self._table: dict[int, Fraction] = {0: Fraction(-1, 12)}
        self._filled_to = -1
        self._lock = threading.Lock()

    def __call__(self, D: int) -> Fraction:
        if D < 0:
            raise ValueError("D must be nonnegative")
        try:
            return self._table[D]
        except KeyError:
            pass
        value = Fraction(sum(_form_weight12(*f) for f in reduced_forms(D)), 12)
        with self._lock:
            self._table.setdefault(D, value)
        return value

    def fill(self, N: int) -> None:
        """Tabulate ``H(0..N)`` by one sweep over all reduced forms."""
        if N <= self._filled_to:
            return
        table = hurwitz_table12(N)
        with self._lock:
            for D, x in enumerate(table):
                self._table[D] = Fraction(x, 12)
            self._filled_to = max(self._filled_to, N)

    def series(self, T: int) -> CoeffSeries:
        self.fill(T)
        return CoeffSeries(tuple(int(self._table[D] * 12) for D in range(T + 1)), 12)


def hurwitz_table12(N: int) -> list[int]:
    """``12 H(D)`` for ``D = 0..N``."""
    out = [0] * (N + 1)
    out[0] = -1
    a = 1
    while 3 * a * a <= N:
        for b in range(-a + 1, a + 1):
            bb = b * b
            c = a
            D = 4 * a * c - bb
            while D <= N:
                if not (b < 0 and c == a):
                    out[D] += _form_weight12(a, b, c)
                c += 1
                D += 4 * a
        a += 1
    return out


_default_cache = HurwitzCache()


def hurwitz(D) -> Fraction:
    """``H(D)``, with ``H(0) = -1/12`` and ``H = 0`` off the nonnegative integers."""
    D = Fraction(D)
    if D.denominator != 1 or D < 0:
        return Fraction(0)
    return _default_cache(int(D))


def s_d_factor(D: int, f: int) -> int:
    """``S_D(f) = sum_{d | f} mu(d) chi_{-D}(d) sigma(f/d)``; needs ``-D`` fundamental."""
    if not is_fundamental_discriminant(-D):
        raise ValueError(f"-{D} is not a fundamental discriminant")
    if f < 1:
        raise ValueError("f must be positive")
    return sum(mobius(d) * kronecker(-D, d) * sigma(f // d) for d in divisors(f))


def fundamental_part(D: int) -> tuple[int, int]:
    """Write ``D = D0 f^2`` with ``-D0`` a fundamental discriminant."""
    if D <= 0 or D % 4 in (1, 2):
        raise ValueError(f"-{D} is not a negative discriminant")
    for f in reversed(_square_divisors(D)):
        if is_fundamental_discriminant(-(D // (f * f))):
            return D // (f * f), f
    raise AssertionError(f"no fundamental part found for {D}")


def _square_divisors(D: int) -> list[int]:
    return [f for f in range(1, isqrt(D) + 1) if D % (f * f) == 0]


def hurwitz_series(T: int) -> CoeffSeries:
    """``sum_{D >= 0} H(D) q^D``."""
    return _default_cache.series(T)


def hurwitz_sieved(l1: int, l2: int, T: int) -> CoeffSeries:
    """Coefficients ``H(l1 l2 n) - l2 H(l1 n / l2)`` for ``n = 0..T``."""
    if gcd(l1, l2) != 1 or not is_squarefree(l2):
        raise ValueError("need gcd(l1, l2) = 1 and l2 squarefree")
    _default_cache.fill(l1 * l2 * T)
    vals = [hurwitz(l1 * l2 * n) - l2 * hurwitz(Fraction(l1 * n, l2)) for n in range(T + 1)]
    return CoeffSeries.from_values(vals)
