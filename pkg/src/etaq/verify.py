"""Sturm bounds, identity checks and sign-pattern verifiers.

Every verifier returns a :class:`VerificationReport`.  Sign verifiers take
eta-quotient coefficients straight from the product expansion; lemma
verifiers also rebuild the claimed right-hand sides from Eisenstein series,
the Hurwitz series and the coefficient operators.
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Optional

from .arithmetic import (
    divisors,
    factorize,
    kronecker,
    legendre_twisted_divisor_sum,
    primes_up_to,
    rep_count_table,
    sigma,
    sign,
    split_prime_power,
    triangular_rep_count,
    twisted_divisor_sum,
)
from .hurwitz import hurwitz
from .lvalues import l_discriminant, l_norm_const
from .pipeline import E2, Coefficients, Eisenstein, Eta, EtaProduct, HurwitzGen, Pipeline
from .qseries import EtaQuotientSpec, eta_coefficients

PASS = "pass"
FAIL = "fail"
PASS_WITH_THRESHOLD = "pass-with-threshold"

DEFAULT_IDENTITY_BOUND = 1000
DEFAULT_THEOREM_BOUND = 10_000
DEFAULT_RCOUNT_BOUND = 2000


@dataclass
class Violation:
    n: int
    expected: str
    actual: str


@dataclass
class VerificationReport:
    id: str
    bound: int
    status: str = PASS
    violations: list[Violation] = field(default_factory=list)
    threshold: Optional[int] = None
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status in (PASS, PASS_WITH_THRESHOLD)

    def add(self, n: int, expected, actual) -> None:
        self.violations.append(Violation(n, str(expected), str(actual)))

    def finish(self, started: float) -> "VerificationReport":
        self.elapsed = time.perf_counter() - started
        if self.violations and self.status == PASS:
            self.status = FAIL
        return self

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "bound": self.bound,
            "status": self.status,
            "threshold": self.threshold,
            "violations": [asdict(v) for v in self.violations],
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        line = f"{self.id:<28} bound={self.bound:<7} {self.status.upper():<20}"
        if self.violations:
            v = self.violations[0]
            line += f" {len(self.violations)} violation(s), first n={v.n}: expected {v.expected}, got {v.actual}"
        if self.threshold is not None:
            line += f" threshold={self.threshold}"
        return line + f" ({self.elapsed:.2f}s)"


# -- Sturm bound -----------------------------------------------------------

def sturm_bound(k_times_2: int, N: int) -> int:
    """``floor(N k/12 prod_{p | N} (1 + 1/p))`` for weight ``k = k_times_2 / 2``."""
    if k_times_2 < 1 or N < 1:
        raise ValueError("weight and level must be positive")
    x = Fraction(N * k_times_2, 24)
    for p, _ in factorize(N):
        x *= Fraction(p + 1, p)
    return x.numerator // x.denominator


# -- identities --------------------------------------------------------------

def verify_identity(lhs: Pipeline, rhs: Pipeline, bound: int, id: str = "identity") -> VerificationReport:
    """Exact coefficientwise comparison on ``0..bound``."""
    started = time.perf_counter()
    report = VerificationReport(id, bound)
    cache: dict = {}
    a = lhs.evaluate(bound, cache)
    b = rhs.evaluate(bound, cache)
    for n in range(bound + 1):
        if a[n] != b[n]:
            report.add(n, a[n], b[n])
    return report.finish(started)


def _theta_odd_squares(n: int) -> int:
    r = isqrt(n)
    return 1 if n % 2 and r * r == n else 0


def _p2(n: int) -> int:
    if n == 0:
        return 1
    r = isqrt(n)
    return 2 * (-1) ** r if r * r == n else 0


def _q2(n: int) -> int:
    if n == 0:
        return 1
    return -4 * (-1) ** (n + 1) * twisted_divisor_sum(n, -4, 0)


def _p3(n: int) -> int:
    if n == 0:
        return 1
    out = -3 * legendre_twisted_divisor_sum(n, 3, 0)
    if n % 3 == 0:
        out += 9 * legendre_twisted_divisor_sum(n // 3, 3, 0)
    return out


def _p5(n: int) -> int:
    return 1 if n == 0 else -5 * legendre_twisted_divisor_sum(n, 5, 1)


def _q3(n: int) -> int:
    return 1 if n == 0 else -9 * legendre_twisted_divisor_sum(n, 3, 2)


def _sixteen_level_closed_form(n: int) -> int:
    if n == 0:
        return 1
    out = -4 * kronecker(-4, n) * sigma(n)
    if n % 4 == 0:
        out += 8 * (-1) ** (n // 4) * sigma(n // 4)
    if n % 16 == 0:
        out -= 32 * sigma(n // 16)
    return out


def _b2_formula(n: int) -> Fraction:
    N = 3 * n + 1
    if n % 4 == 0:
        return Fraction(twisted_divisor_sum(N, 3, 1))
    if n % 4 == 2:
        return Fraction(-twisted_divisor_sum(N, 3, 1), 3)
    first = sum(kronecker(12, d) * d for d in divisors(N))
    second = sum(kronecker(12, N // d) * d for d in divisors(N))
    return Fraction(-first, 3) - Fraction(2 * second, 3)


def b2_formula(n: int) -> Fraction:
    """Three-case divisor-sum expression for ``C_{1^3 2^-2 3^3}(n)``."""
    return _b2_formula(n)


def weight3_divisor_expression(n: int) -> int:
    """``sum_{d | n} (-1/d) d^2 + 6 sum_{d | n/3} (-1/d) d^2``."""
    out = twisted_divisor_sum(n, -4, 2)
    if n % 3 == 0:
        out += 6 * twisted_divisor_sum(n // 3, -4, 2)
    return out


def _curly_e_closed(n: int) -> Fraction:
    if n == 0:
        return Fraction(0)
    if n % 12 == 1:
        return Fraction(twisted_divisor_sum(n, -4, 2))
    if n % 12 == 5:
        return Fraction(-twisted_divisor_sum(n, -4, 2), 2)
    if n % 12 == 9:
        return Fraction(-2 * weight3_divisor_expression(n))
    return Fraction(0)


def curly_e_pipeline() -> Pipeline:
    """The weight-3 Eisenstein combination built from ``E_{3,chi_1,chi_-4}``."""
    E = Eisenstein(3, 1, -4)
    return (
        Fraction(1, 2) * E.sieve(12, 1)
        - Fraction(1, 4) * E.sieve(12, 5)
        - E.sieve(12, 9)
        - 6 * E.V(3).sieve(4, 1)
    )


def hurwitz_sieved_pipeline(l1: int, l2: int) -> Pipeline:
    H = HurwitzGen()
    return H.U(l1 * l2) - l2 * H.U(l1).V(l2)


def classnum_rhs() -> Pipeline:
    h43 = hurwitz_sieved_pipeline(4, 3)
    h13 = hurwitz_sieved_pipeline(1, 3)
    return (
        (h43 - h13).sieve(24, 1)
        - Fraction(1, 2) * (h43 - h13).sieve(24, 17)
        - (h43 + 2 * h13).sieve(24, 9)
    )


def b2_rhs() -> Pipeline:
    E = Eisenstein(2, 1, 12)
    F = Eisenstein(2, 12, 1)
    return (
        Fraction(1, 2) * E.sieve(12, 1)
        - Fraction(1, 6) * E.sieve(12, 7)
        - Fraction(1, 6) * E.sieve(6, 4)
        - Fraction(1, 3) * F.sieve(6, 4)
    )


def level16_rhs() -> Pipeline:
    e2 = E2()
    return (
        -2 * Eisenstein(2, -4, -4)
        + Fraction(1, 3) * e2.V(4)
        - Fraction(2, 3) * e2.U(2).V(8)
        + Fraction(4, 3) * e2.V(16)
    )


def r_count_combination(bound: int) -> Coefficients:
    """Sieved ``r_{(1,1,2,2,2)}`` combination for ``eta(z)^4 eta(2z)^4 / eta(4z)^3``."""
    r = rep_count_table((1, 1, 2, 2, 2), bound)
    pieces16 = {2: Fraction(-1, 5), 4: Fraction(-1, 5), 6: Fraction(1, 5), 10: Fraction(-3, 7),
                12: Fraction(-1, 5), 14: Fraction(1, 5)}

    def coeff(n: int) -> Fraction:
        if n % 4 == 1:
            return Fraction(-r[n])
        if n % 4 == 3:
            return Fraction(r[n])
        if n % 8 == 0:
            return Fraction(r[n] + 4 * r[n // 4], 5)
        return pieces16[n % 16] * r[n]

    return Coefficients(coeff, "r-combination")


@dataclass(frozen=True)
class NamedIdentity:
    lhs: Callable[[], Pipeline]
    rhs: Callable[[], Pipeline]
    bound: int
    weight_times_2: Optional[int] = None
    level: Optional[int] = None
    description: str = ""


def _norm_eis(k: int, p: int) -> Pipeline:
    return l_norm_const(k, p) * Eisenstein(k, 1, l_discriminant(p))


IDENTITIES: dict[str, NamedIdentity] = {
    "triangular": NamedIdentity(lambda: EtaProduct("1^-2 2^3 4^2"),
                                lambda: Coefficients(triangular_rep_count, "triangular counts"), 2000,
                                description="C_{1^-2 2^3 4^2}(n) counts n = T(a) + T(b) + 2 T(c)"),
    "Q2": NamedIdentity(lambda: Eta("1^4 2^-2"), lambda: Coefficients(_q2, "Q2 closed form"), 5000,
                        description="eta(z)^4/eta(2z)^2 closed form"),
    "P2": NamedIdentity(lambda: Eta("1^2 2^-1"), lambda: Coefficients(_p2, "P2 theta"), 5000,
                        description="eta(z)^2/eta(2z) = sum (-1)^n q^(n^2)"),
    "P3": NamedIdentity(lambda: Eta("1^3 3^-1"), lambda: Coefficients(_p3, "P3 closed form"), 5000,
                        description="eta(z)^3/eta(3z) closed form"),
    "P5": NamedIdentity(lambda: Eta("1^5 5^-1"), lambda: Coefficients(_p5, "P5 closed form"), 5000,
                        description="eta(z)^5/eta(5z) = 1 - 5 sum sum (d/5) d q^n"),
    "P5-eisenstein": NamedIdentity(lambda: Eta("1^5 5^-1"), lambda: _norm_eis(2, 5), 1000, 4, 5,
                                   "eta(z)^5/eta(5z) = L_{2,5} E_{2,chi_1,chi_5}"),
    "Q3": NamedIdentity(lambda: Eta("1^9 3^-3"), lambda: Coefficients(_q3, "Q3 closed form"), 1000,
                        description="eta(z)^9/eta(3z)^3 = 1 - 9 sum sum (d/3) d^2 q^n"),
    "Q3-eisenstein": NamedIdentity(lambda: Eta("1^9 3^-3"), lambda: _norm_eis(3, 3), 1000, 6, 3,
                                   "eta(z)^9/eta(3z)^3 = L_{3,3} E_{3,chi_1,chi_-3}"),
    "theta-odd-squares": NamedIdentity(lambda: Eta("8^-1 16^2"),
                                       lambda: Coefficients(_theta_odd_squares, "odd squares"), 5000,
                                       description="eta(16z)^2/eta(8z) = sum q^((2n+1)^2)"),
    "b2-eisenstein": NamedIdentity(lambda: Eta("3^3 6^-2 9^3"), b2_rhs, 1000, 4, 144,
                                   "eta(3z)^3 eta(9z)^3/eta(6z)^2 as sieved weight-2 Eisenstein series"),
    "level16-eisenstein": NamedIdentity(lambda: Eta("1^4 2^2 4^-2"), level16_rhs, 1000, 4, 16,
                                        "eta(z)^4 eta(2z)^2/eta(4z)^2 via E_{2,chi_-4,chi_-4} and E_2"),
    "level16-divisor-sums": NamedIdentity(lambda: Eta("1^4 2^2 4^-2"),
                                          lambda: Coefficients(_sixteen_level_closed_form, "divisor sums"),
                                          1000, 4, 16,
                                          "eta(z)^4 eta(2z)^2/eta(4z)^2 as three divisor sums"),
    "r-counts": NamedIdentity(lambda: Eta("1^4 2^4 4^-3"), lambda: r_count_combination(DEFAULT_RCOUNT_BOUND),
                              DEFAULT_RCOUNT_BOUND,
                              description="eta(z)^4 eta(2z)^4/eta(4z)^3 via r_(1,1,2,2,2)"),
    "curly-E": NamedIdentity(curly_e_pipeline, lambda: Coefficients(_curly_e_closed, "divisor sums"), 1000, 6, 144,
                             "weight-3 Eisenstein combination: operator form vs divisor sums"),
    "classnum": NamedIdentity(lambda: Eta("8^2 16^2 24^-1"), classnum_rhs, 2000, 4, 576,
                              "eta(8z)^2 eta(16z)^2/eta(24z) via sieved Hurwitz series"),
}


def verify_named_identity(name: str, bound: Optional[int] = None) -> VerificationReport:
    ident = IDENTITIES[name]
    if bound is None:
        bound = ident.bound
    if name == "r-counts":
        rhs = r_count_combination(bound)
    else:
        rhs = ident.rhs()
    report = verify_identity(ident.lhs(), rhs, bound, id=f"identity:{name}")
    if ident.level is not None:
        report.notes.append(f"Sturm bound {sturm_bound(ident.weight_times_2, ident.level)}")
    return report


# -- sign theorems -------------------------------------------------------------

def _m8a(n: int) -> int:
    if n % 4 == 2:
        return 0
    return 1 if n % 8 in (0, 3, 7) else -1


def _m8b(n: int) -> int:
    return 1 if n % 8 in (0, 3, 6, 7) else -1


def _prime_power_law(p: int, n: int) -> int:
    _, m = split_prime_power(n, p)
    return -kronecker(m, p)


@dataclass(frozen=True)
class SignTheorem:
    eta: str
    start: int
    rule: Callable[[int, tuple], int]
    description: str


def _classnum_rule(shrink: int):
    def rule(n: int, coeffs: tuple) -> int:
        a, m = split_prime_power(8 * n + 1, 3)
        if a == 0:
            return kronecker(m, 3)
        if a == 1:
            return -(kronecker(m, 3) + 1) // 2
        if a == 2:
            return -1
        return sign(coeffs[(n - 1) // shrink])

    return rule


SIGN_THEOREMS: dict[str, SignTheorem] = {
    "M1": SignTheorem("1^-2 2^3 4^2", 0, lambda n, c: 1, "C_{1^-2 2^3 4^2}(n) > 0"),
    "M2": SignTheorem("1^3 2^-2 3^3", 1, lambda n, c: (-1) ** n, "(-1)^n C_{1^3 2^-2 3^3}(n) > 0"),
    "M3": SignTheorem("1^4 2^4 3^-2", 1, lambda n, c: 1 if n % 3 == 0 else -1,
                      "sgn C_{1^4 2^4 3^-2}(n) = 1 iff 3 | n"),
    "M8a": SignTheorem("1^4 2^2 4^-2", 1, lambda n, c: _m8a(n), "8-periodic signs of C_{1^4 2^2 4^-2}"),
    "M8b": SignTheorem("1^4 2^4 4^-3", 1, lambda n, c: _m8b(n), "8-periodic signs of C_{1^4 2^4 4^-3}"),
    "CONJ99a": SignTheorem("1^9 3^-3", 1, lambda n, c: _prime_power_law(3, n),
                           "sgn C_{1^9 3^-3}(3^a m) = -(m/3)"),
    "CONJ99b": SignTheorem("1^5 5^-1", 1, lambda n, c: _prime_power_law(5, n),
                           "sgn C_{1^5 5^-1}(5^a m) = -(m/5)"),
    "CLASSNUM": SignTheorem("1^2 2^2 3^-1", 0, _classnum_rule(3),
                            "four-case law for C_{1^2 2^2 3^-1}, recursion to (n-1)/3 as stated"),
    "CLASSNUM_R9": SignTheorem("1^2 2^2 3^-1", 0, _classnum_rule(9),
                               "four-case law for C_{1^2 2^2 3^-1}, recursion to (n-1)/9"),
}

THEOREM_IDS = tuple(SIGN_THEOREMS)


def verify_theorem(id: str, bound: int = DEFAULT_THEOREM_BOUND) -> VerificationReport:
    try:
        thm = SIGN_THEOREMS[id]
    except KeyError:
        raise ValueError(f"unknown theorem id {id!r}; choose from {', '.join(THEOREM_IDS)}") from None
    started = time.perf_counter()
    report = VerificationReport(id, bound)
    coeffs = eta_coefficients(thm.eta, bound)
    for n in range(thm.start, bound + 1):
        expected = thm.rule(n, coeffs)
        if sign(coeffs[n]) != expected:
            report.add(n, f"sgn {expected:+d}", coeffs[n])
    return report.finish(started)


# -- lemma verifiers --------------------------------------------------------------

def verify_lemma_b2(bound: int = DEFAULT_THEOREM_BOUND) -> VerificationReport:
    """Divisor-sum formula for ``C_{1^3 2^-2 3^3}`` and the companion sign law."""
    started = time.perf_counter()
    report = VerificationReport("lemma-b2", bound)
    coeffs = eta_coefficients("1^3 2^-2 3^3", bound)
    for n in range(bound + 1):
        f = _b2_formula(n)
        if f != coeffs[n]:
            report.add(n, f"[formula] {f}", coeffs[n])
    for m in range(1, 3 * bound + 2, 2):
        if m % 3 == 0:
            continue
        s = sign(twisted_divisor_sum(m, 3, 1))
        if s != kronecker(3, m):
            report.add(m, f"[sign-law] {kronecker(3, m):+d}", s)
    # Eisenstein side: sum b2(n) q^(3n+1) on indices up to 3*min(bound, 1000)+1
    span = 3 * min(bound, DEFAULT_IDENTITY_BOUND) + 1
    ident = verify_identity(Eta("3^3 6^-2 9^3"), b2_rhs(), span, id="b2-eisenstein")
    for v in ident.violations:
        report.add(v.n, f"[eisenstein] {v.expected}", v.actual)
    return report.finish(started)


def verify_eisenstein_sign_section5(bound: int = 2000) -> VerificationReport:
    """Positivity of the weight-3 divisor expression and the resulting signs."""
    started = time.perf_counter()
    report = VerificationReport("weight3-eisenstein-sign", bound)
    for n in range(1, bound + 1, 4):
        x = weight3_divisor_expression(n)
        if x <= 0:
            report.add(n, "[positivity] > 0", x)
    cache: dict = {}
    curly = curly_e_pipeline().evaluate(bound, cache)
    closed = Coefficients(_curly_e_closed, "closed").evaluate(bound, cache)
    for n in range(bound + 1):
        if curly[n] != closed[n]:
            report.add(n, f"[closed-form] {closed[n]}", curly[n])
    for n in range((bound - 1) // 4 + 1):
        expected = 1 if n % 3 == 0 else -1
        if sign(curly[4 * n + 1]) != expected:
            report.add(4 * n + 1, f"[sign] {expected:+d}", curly[4 * n + 1])
    return report.finish(started)


def f_ell(x: int, ell: int) -> int:
    """``x^(2l+2) - 1 - 6 (l+1) x^l (x^2 + 1)``."""
    return x ** (2 * ell + 2) - 1 - 6 * (ell + 1) * x**ell * (x * x + 1)


def ladder_ratio(p: int, ell: int) -> Fraction:
    """``(p^(2l+2) - 1) / (p^l (p^2 + 1))``."""
    return Fraction(p ** (2 * ell + 2) - 1, p**ell * (p * p + 1))


# (p, l, multiple of (l+1)) rows stated explicitly
FIRST_LADDER = [(5, 1, Fraction(12, 5)), (7, 1, Fraction(17, 5)), (11, 1, Fraction(5))]
SECOND_LADDER = [
    (13, 1, Fraction(32, 5)), (5, 2, Fraction(8)), (17, 1, Fraction(42, 5)), (19, 1, Fraction(47, 5)),
    (23, 1, Fraction(57, 5)), (29, 1, Fraction(72, 5)), (31, 1, Fraction(77, 5)), (7, 2, Fraction(16)),
    (37, 1, Fraction(92, 5)),
]
F2_VALUES = {5: 3924, 7: 73548, 11: 1505844}


def _first_ladder_tail(p_max: int, ell_max: int):
    for p in primes_up_to(p_max):
        for ell in range(1, ell_max + 1):
            if p >= 13 or (p in (5, 7, 11) and ell >= 2):
                yield p, ell, Fraction(6)


def _second_ladder_tail(p_max: int, ell_max: int):
    for p in primes_up_to(p_max):
        for ell in range(1, ell_max + 1):
            if p >= 41 or (11 <= p <= 37 and ell >= 2) or (p in (5, 7) and ell >= 3):
                yield p, ell, Fraction(20)


def verify_claim_cases(p_max: int = 1000, ell_max: int = 8) -> VerificationReport:
    """Ratio ladders, ``f_l`` positivity and the induction step for ``f_l``.

    The open-ended rows are sampled over primes ``p <= p_max`` and
    ``l <= ell_max``; violation indices encode ``n = 100 p + l``.
    """
    started = time.perf_counter()
    report = VerificationReport("claim-cases", p_max)
    rows = FIRST_LADDER + list(_first_ladder_tail(p_max, ell_max))
    rows += SECOND_LADDER + list(_second_ladder_tail(p_max, ell_max))
    for p, ell, c in rows:
        r = ladder_ratio(p, ell)
        if r < c * (ell + 1):
            report.add(100 * p + ell, f"[ladder] >= {c * (ell + 1)}", r)
    for x, value in F2_VALUES.items():
        if f_ell(x, 2) != value:
            report.add(x, f"[f_2] {value}", f_ell(x, 2))
    for x in range(13, p_max + 1):
        if f_ell(x, 1) <= 0:
            report.add(x, "[f_1] > 0", f_ell(x, 1))
    for x in (5, 7, 11):
        for ell in range(2, ell_max + 1):
            if f_ell(x, ell) <= 0:
                report.add(100 * x + ell, "[f_l] > 0", f_ell(x, ell))
    for x in range(2, 60):
        for ell in range(1, ell_max + 1):
            rhs = (x * x * f_ell(x, ell) + 6 * (ell + 1) * x ** (ell + 1) * (x * x + 1) * (x - 1)
                   + x * x - 1 - 6 * x ** (ell + 1) * (x * x + 1))
            if f_ell(x, ell + 1) != rhs:
                report.add(100 * x + ell, f"[induction] {f_ell(x, ell + 1)}", rhs)
            tail = rhs - x * x * f_ell(x, ell)
            if tail < 0:
                report.add(100 * x + ell, "[induction-tail] >= 0", tail)
    return report.finish(started)


def verify_lemma_r_counts(bound: int = DEFAULT_RCOUNT_BOUND) -> VerificationReport:
    if bound > DEFAULT_RCOUNT_BOUND:
        raise ValueError(f"representation counts are brute force; bound must be <= {DEFAULT_RCOUNT_BOUND}")
    report = verify_identity(Eta("1^4 2^4 4^-3"), r_count_combination(bound), bound, id="lemma-r-counts")
    return report


def verify_level16_lemma(bound: int = DEFAULT_IDENTITY_BOUND) -> VerificationReport:
    """Divisor-sum and Eisenstein forms of ``eta(z)^4 eta(2z)^2 / eta(4z)^2``."""
    started = time.perf_counter()
    report = VerificationReport("lemma-level16", bound)
    for name in ("level16-divisor-sums", "level16-eisenstein"):
        for v in verify_named_identity(name, bound).violations:
            report.add(v.n, f"[{name}] {v.expected}", v.actual)
    return report.finish(started)


# -- prime-power sign scans ---------------------------------------------------------

def qp_spec(p: int, which: str) -> EtaQuotientSpec:
    if which == "Q":
        return EtaQuotientSpec.of({1: p * p, p: -p})
    if which == "P":
        return EtaQuotientSpec.of({1: p, p: -1})
    raise ValueError("which must be 'Q' or 'P'")


def predicted_qp_sign(p: int, which: str, n: int) -> int:
    _, m = split_prime_power(n, p)
    top = 2 if which == "Q" else -2
    return kronecker(top, p) * kronecker(m, p)


def scan_qp_threshold(p: int, which: str, bound: int) -> VerificationReport:
    """Compare signs of ``Q_p`` or ``P_p`` coefficients with the large-``m`` law.

    ``threshold`` is the largest ``m`` (in ``n = p^a m``) with a violation.
    The status is pass-with-threshold when every violating ``m`` lies in the
    lower half of the scanned range, so the violations form an initial
    segment followed by a clean stretch at least as long.
    """
    which = which.upper()
    if which == "P" and p < 5:
        raise ValueError("the P_p law needs p >= 5")
    if which == "Q" and p < 3:
        raise ValueError("the Q_p law needs p >= 3")
    started = time.perf_counter()
    report = VerificationReport(f"scan-{which}{p}", bound)
    coeffs = eta_coefficients(qp_spec(p, which), bound)
    worst_m = None
    for n in range(1, bound + 1):
        expected = predicted_qp_sign(p, which, n)
        if sign(coeffs[n]) != expected:
            report.add(n, f"sgn {expected:+d}", coeffs[n])
            m = split_prime_power(n, p)[1]
            worst_m = m if worst_m is None else max(worst_m, m)
    if report.violations:
        report.threshold = worst_m
        if worst_m <= bound // 2:
            report.status = PASS_WITH_THRESHOLD
    return report.finish(started)


# -- class numbers ---------------------------------------------------------------------

def verify_classnum(bound: int = DEFAULT_THEOREM_BOUND, recursion: int = 3,
                    identity_bound: Optional[int] = None) -> VerificationReport:
    """Sieved-Hurwitz identity plus the four-case sign law of ``C_{1^2 2^2 3^-1}``.

    ``recursion`` selects the index used when ``3^3 | 8n+1``: ``3`` reads the
    law as stated, ``(n-1)/3``; ``9`` uses ``(n-1)/9``.
    """
    started = time.perf_counter()
    ident_bound = identity_bound if identity_bound is not None else max(192, bound)
    report = VerificationReport("classnum" if recursion == 3 else "classnum-r9", bound)
    for v in verify_identity(Eta("8^2 16^2 24^-1"), classnum_rhs(), ident_bound).violations:
        report.add(v.n, f"[identity] {v.expected}", v.actual)
    thm = verify_theorem("CLASSNUM" if recursion == 3 else "CLASSNUM_R9", bound)
    for v in thm.violations:
        report.add(v.n, f"[sign] {v.expected}", v.actual)
    return report.finish(started)


def classnum_hurwitz_display(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(b7(3n), H(12(24n+1)) - H(3(24n+1)), H(12(24n+1)) - H(3(24n-1)))``."""
    b7 = eta_coefficients("1^2 2^2 3^-1", 3 * n)[3 * n]
    plus = hurwitz(12 * (24 * n + 1)) - hurwitz(3 * (24 * n + 1))
    minus = hurwitz(12 * (24 * n + 1)) - hurwitz(3 * (24 * n - 1))
    return Fraction(b7), plus, minus


# -- the whole suite ---------------------------------------------------------------------

def suite_tasks(theorem_bound: int = DEFAULT_THEOREM_BOUND, identity_bound: int = DEFAULT_IDENTITY_BOUND,
                rcount_bound: int = DEFAULT_RCOUNT_BOUND) -> list[tuple[Callable, tuple]]:
    """Every check of the full suite as ``(function, args)`` pairs."""
    tasks: list[tuple[Callable, tuple]] = [(verify_theorem, (t, theorem_bound)) for t in THEOREM_IDS]
    tasks += [
        (verify_lemma_b2, (theorem_bound,)),
        (verify_eisenstein_sign_section5, (2000,)),
        (verify_claim_cases, ()),
        (verify_level16_lemma, (identity_bound,)),
        (verify_lemma_r_counts, (rcount_bound,)),
        (verify_classnum, (theorem_bound,)),
    ]
    tasks += [(verify_named_identity, (name,)) for name in IDENTITIES if name != "r-counts"]
    tasks += [(scan_qp_threshold, (p, which, 2000))
              for p, which in ((3, "Q"), (5, "Q"), (7, "Q"), (5, "P"), (7, "P"), (11, "P"))]
    return tasks


def _run_task(task: tuple[Callable, tuple]) -> VerificationReport:
    fn, args = task
    return fn(*args)


def run_all(theorem_bound: int = DEFAULT_THEOREM_BOUND, identity_bound: int = DEFAULT_IDENTITY_BOUND,
            rcount_bound: int = DEFAULT_RCOUNT_BOUND, jobs: int = 1) -> list[VerificationReport]:
    """Run the full suite; report order does not depend on ``jobs``."""
    tasks = suite_tasks(theorem_bound, identity_bound, rcount_bound)
    if jobs <= 1:
        return [_run_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks))
