"""Coefficient-level operators: U, V, sieving, twisting and Hecke T_p.

All operators act on :class:`CoeffSeries` only.  Truncations shrink under
``U`` and ``T_p`` and grow under ``V``; no operator ever reads past the
truncation of its input.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Sequence

from .arithmetic import num_divisors
from .lvalues import CharacterSpec
from .qseries import CoeffSeries


def op_U(s: CoeffSeries, ell: int) -> CoeffSeries:
    """``out[n] = s[ell n]``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return CoeffSeries(s.nums[::ell], s.den)


def op_V(s: CoeffSeries, ell: int, cap: Optional[int] = None) -> CoeffSeries:
    """``out[ell n] = s[n]``, zero elsewhere.

    Indices strictly between ``ell T`` and ``ell (T + 1)`` are known zeros, so
    the output reaches ``ell T + ell - 1`` (or ``cap``).
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    T = ell * s.truncation + ell - 1
    if cap is not None:
        T = min(T, cap)
    nums = [0] * (T + 1)
    nums[::ell] = s.nums[: T // ell + 1]
    return CoeffSeries(tuple(nums), s.den)


def op_sieve(s: CoeffSeries, M: int, m: int) -> CoeffSeries:
    """Keep the coefficients with ``n = m (mod M)``."""
    if M < 1:
        raise ValueError("M must be positive")
    m %= M
    nums = [0] * len(s.nums)
    nums[m::M] = s.nums[m::M]
    return CoeffSeries(tuple(nums), s.den)


def op_twist(s: CoeffSeries, chi: CharacterSpec) -> CoeffSeries:
    """``out[n] = chi(n) s[n]``."""
    if chi.is_trivial:
        return s
    return CoeffSeries(tuple(chi(n) * x for n, x in enumerate(s.nums)), s.den)


def hecke_Tp(s: CoeffSeries, p: int, k: int, chi: CharacterSpec) -> CoeffSeries:
    """``out[n] = s[p n] + chi(p) p^(k-1) s[n/p]`` with ``s[n/p] = 0`` unless ``p | n``."""
    T = s.truncation // p
    w = chi(p) * p ** (k - 1)
    nums = list(s.nums[::p][: T + 1])
    if w:
        for n in range(0, T + 1, p):
            nums[n] += w * s.nums[n // p]
    return CoeffSeries(tuple(nums), s.den)


def deligne_bound_check(
    coeffs: CoeffSeries | Sequence,
    k: int,
    norm: Optional[Callable[[object], Fraction | int]] = None,
) -> bool:
    """Whether ``|c(n)|^2 <= d(n)^2 n^(k-1)`` for every listed ``n >= 1``.

    ``norm`` returns ``|c|^2`` exactly; the default squares a rational.
    Entry 0 is ignored.
    """
    norm = norm or (lambda c: Fraction(c) ** 2)
    for n, c in enumerate(coeffs):
        if n == 0:
            continue
        if norm(c) > num_divisors(n) ** 2 * n ** (k - 1):
            return False
    return True


# -- bookkeeping for integral weight ---------------------------------------

def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


@dataclass(frozen=True)
class ModularityData:
    """Weight, level and character conductor attached to a series.

    Purely descriptive: it is propagated for reports and Sturm bounds and
    never checked against the coefficients.
    """

    weight: Fraction
    level: int
    conductor: int = 1

    def after_V(self, delta: int) -> "ModularityData":
        return ModularityData(self.weight, self.level * delta, self.conductor)

    def after_sieve(self, M: int) -> "ModularityData":
        return ModularityData(self.weight, _lcm(self.level, M * M, M * self.conductor), self.conductor)

    def after_twist(self, M: int) -> "ModularityData":
        return ModularityData(self.weight, _lcm(self.level, M * M, M * self.conductor), self.conductor)

    def after_U(self, delta: int) -> "ModularityData":
        if self.level % delta:
            raise ValueError(f"U_{delta} is only tracked when {delta} divides the level {self.level}")
        return self
