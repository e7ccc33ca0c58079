"""Fourier coefficients of Eisenstein series with Kronecker characters."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lvalues import TRIVIAL, CharacterSpec, l_discriminant, l_norm_const, l_value
from .qseries import CoeffSeries


@dataclass(frozen=True)
class EisensteinSpec:
    k: int
    chi: CharacterSpec = TRIVIAL
    psi: CharacterSpec = TRIVIAL

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("weight must be at least 2")
        if self.k == 2 and self.chi.is_trivial and self.psi.is_trivial:
            raise ValueError("E_{2,chi_1,chi_1} is not modular; use e2_coeffs")

    def __str__(self) -> str:
        return f"E_{{{self.k},{self.chi},{self.psi}}}"


def twisted_divisor_table(T: int, k: int, chi: CharacterSpec, psi: CharacterSpec) -> list[int]:
    """``sum_{d | n} chi(n/d) psi(d) d^k`` for ``n = 0..T`` (entry 0 is 0)."""
    out = [0] * (T + 1)
    chi_vals = [chi(m) for m in range(T + 1)]
    for d in range(1, T + 1):
        w = psi(d)
        if not w:
            continue
        w *= d**k
        for m in range(1, T // d + 1):
            c = chi_vals[m]
            if c:
                out[d * m] += c * w
    return out


def eisenstein_coeffs(spec: EisensteinSpec, T: int) -> CoeffSeries:
    table = twisted_divisor_table(T, spec.k - 1, spec.chi, spec.psi)
    const = l_value(spec.k, spec.psi.D) if spec.chi.is_trivial else Fraction(0)
    # 2 * integer table plus a rational constant term
    den = const.denominator
    nums = [const.numerator] + [2 * x * den for x in table[1:]]
    return CoeffSeries(tuple(nums), den)


def e2_coeffs(T: int) -> CoeffSeries:
    """``E_2 = 1 - 24 sum sigma(n) q^n``."""
    table = twisted_divisor_table(T, 1, TRIVIAL, TRIVIAL)
    return CoeffSeries((1,) + tuple(-24 * x for x in table[1:]))


def normalized_eisenstein(k: int, p: int, T: int) -> CoeffSeries:
    """``L_{k,p} E_{k, chi_1, chi_{(-1/p) p}}``, constant term 1."""
    c = l_norm_const(k, p)
    spec = EisensteinSpec(k, TRIVIAL, CharacterSpec(l_discriminant(p)))
    return eisenstein_coeffs(spec, T).scale(c)
