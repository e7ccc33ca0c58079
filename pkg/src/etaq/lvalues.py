"""Kronecker characters, Bernoulli polynomials and L(1-k, chi_D)."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .arithmetic import is_discriminant, kronecker, sign


class ParityError(ValueError):
    """The L-value vanishes because k has the wrong parity for the character."""


@dataclass(frozen=True)
class CharacterSpec:
    """The real character ``n -> (D/n)``; ``D = 1`` is the trivial character."""

    D: int = 1

    def __post_init__(self):
        if self.D != 1 and not is_discriminant(self.D):
            raise ValueError(f"{self.D} is not a discriminant")
        if self.D == 0:
            raise ValueError("D = 0 does not define a character")

    @classmethod
    def trivial(cls) -> "CharacterSpec":
        return cls(1)

    @property
    def is_trivial(self) -> bool:
        return self.D == 1

    @property
    def modulus(self) -> int:
        return abs(self.D)

    @property
    def parity(self) -> int:
        """``chi(-1)``."""
        return kronecker(self.D, -1)

    def __call__(self, n: int) -> int:
        if self.D == 1:
            return 1
        return kronecker(self.D, n)

    def __str__(self) -> str:
        return "chi_1" if self.D == 1 else f"chi_{self.D}"


TRIVIAL = CharacterSpec(1)

_bernoulli: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(k: int) -> Fraction:
    """``B_k`` with the convention ``B_1 = -1/2``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= len(_bernoulli):
        with _bernoulli_lock:
            for m in range(len(_bernoulli), k + 1):
                s = sum(comb(m + 1, j) * _bernoulli[j] for j in range(m))
                _bernoulli.append(-s / (m + 1))
    return _bernoulli[k]


def bernoulli_poly_eval(k: int, x) -> Fraction:
    """``B_k(x) = sum_j C(k, j) B_j x^(k-j)`` in exact arithmetic."""
    x = Fraction(x)
    return sum(
        (comb(k, j) * bernoulli_number(j) * x ** (k - j) for j in range(k + 1)),
        Fraction(0),
    )


def l_value(k: int, D: int) -> Fraction:
    """``L(1 - k, chi_D)`` through the finite Bernoulli-polynomial sum."""
    if k < 1:
        raise ValueError("k must be positive")
    chi = CharacterSpec(D)
    f = chi.modulus
    s = sum(
        (chi(r) * bernoulli_poly_eval(k, Fraction(r, f)) for r in range(1, f + 1)),
        Fraction(0),
    )
    return -Fraction(f ** (k - 1), k) * s


def generalized_bernoulli(k: int, D: int) -> Fraction:
    """``B_{k, chi_D}`` read off the generating function directly.

    Expands ``sum_a chi(a) t e^(a t) / (e^(f t) - 1)`` as a power series in
    ``t`` by inverting ``(e^(f t) - 1) / t``; no Bernoulli numbers are used.
    """
    chi = CharacterSpec(D)
    f = chi.modulus
    n = k + 1
    # (e^(f t) - 1)/t = sum_{m>=0} f^(m+1) t^m / (m+1)!
    denom = [Fraction(f ** (m + 1), factorial(m + 1)) for m in range(n)]
    inv = [Fraction(0)] * n
    inv[0] = 1 / denom[0]
    for m in range(1, n):
        inv[m] = -sum(denom[i] * inv[m - i] for i in range(1, m + 1)) / denom[0]
    # numerator: sum_a chi(a) e^(a t)
    num = [
        sum(Fraction(chi(a) * a**m, factorial(m)) for a in range(1, f + 1))
        for m in range(n)
    ]
    coeff = sum(num[i] * inv[k - i] for i in range(k + 1))
    return coeff * factorial(k)


def l_value_via_generalized_bernoulli(k: int, D: int) -> Fraction:
    """``-B_{k, chi_D} / k``; an independent route to :func:`l_value`."""
    return -generalized_bernoulli(k, D) / k


def l_discriminant(p: int) -> int:
    """``(-1/p) p``, the discriminant of the quadratic character modulo ``p``."""
    if p % 2 == 0:
        raise ValueError("p must be an odd prime")
    return p if p % 4 == 1 else -p


def k_p(p: int) -> int:
    return (p - 1) // 2


def l_norm_const(k: int, p: int) -> Fraction:
    """``1 / L(1 - k, chi_{(-1/p) p})``."""
    value = l_value(k, l_discriminant(p))
    if value == 0:
        raise ParityError(f"L(1-{k}, chi_{l_discriminant(p)}) = 0; need k = {k_p(p)} mod 2")
    return 1 / value


def predicted_l_sign(k: int, p: int) -> int:
    """Closed-form sign of ``L_{k,p}``.

    The exponent ``k/2 + (p-1)/4`` is read as ``floor(k/2) + floor((p-1)/4)``;
    this reading is the one consistent with the special values
    ``(-2/p)`` at ``k = (p-1)/2`` and ``(2/p)`` at ``k = p(p-1)/2``.
    """
    if (k - k_p(p)) % 2:
        raise ParityError(f"k = {k} has the wrong parity for p = {p}")
    return (-1) ** (k // 2 + (p - 1) // 4) * kronecker(-2, p)


def literal_l_sign(k: int, p: int) -> int:
    """The same formula with ``(-1)^x`` read as ``i^(2x)`` for half-integers."""
    if (k - k_p(p)) % 2:
        raise ParityError(f"k = {k} has the wrong parity for p = {p}")
    return (-1) ** ((2 * k + p - 1) // 4) * kronecker(-2, p)


def l_sign_check(k: int, p: int) -> bool:
    """Whether ``sgn(L_{k,p})`` matches :func:`predicted_l_sign`."""
    if (k - k_p(p)) % 2:
        raise ParityError(f"k = {k} has the wrong parity for p = {p}")
    return sign(l_norm_const(k, p)) == predicted_l_sign(k, p)
