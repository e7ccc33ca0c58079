"""Truncated q-series with exact rational coefficients, and eta-quotients.

A :class:`CoeffSeries` stores integer numerators over one common
denominator.  Products go through Kronecker substitution: both operands are
packed into a single big integer with fixed-width signed slots, multiplied
once with GMP, and unpacked.  This keeps ``T = 10**4`` expansions of
eta-quotients with large exponents well inside a second.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

import gmpy2

Scalar = Union[int, Fraction]

_NAIVE_CUTOFF = 24


class NotInvertibleError(ArithmeticError):
    """Raised when a series with zero constant term is inverted."""


class TruncationError(ValueError):
    """Raised when a coefficient beyond the known truncation is requested."""


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    if den != 1:
        g = reduce(gcd, nums, den)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
    return tuple(nums), den


@dataclass(frozen=True)
class CoeffSeries:
    """Coefficients ``c[0..T]`` of a q-series; nothing is known past ``T``."""

    nums: tuple[int, ...]
    den: int = 1

    def __post_init__(self):
        if not self.nums:
            raise ValueError("a series needs at least its constant term")
        nums, den = _normalize(self.nums, self.den)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_values(cls, values: Iterable[Scalar]) -> "CoeffSeries":
        values = [Fraction(v) for v in values]
        den = reduce(lambda x, y: x * y // gcd(x, y), (v.denominator for v in values), 1)
        return cls(tuple(int(v * den) for v in values), den)

    @classmethod
    def constant(cls, c: Scalar, T: int) -> "CoeffSeries":
        c = Fraction(c)
        return cls((c.numerator,) + (0,) * T, c.denominator)

    @classmethod
    def one(cls, T: int) -> "CoeffSeries":
        return cls.constant(1, T)

    @classmethod
    def zero(cls, T: int) -> "CoeffSeries":
        return cls.constant(0, T)

    @classmethod
    def from_function(cls, f, T: int) -> "CoeffSeries":
        return cls.from_values(f(n) for n in range(T + 1))

    # -- access -----------------------------------------------------------
    @property
    def truncation(self) -> int:
        return len(self.nums) - 1

    def __len__(self) -> int:
        return len(self.nums)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation:
            raise TruncationError(f"coefficient {n} unknown (truncation {self.truncation})")
        return Fraction(self.nums[n], self.den)

    def __iter__(self):
        den = self.den
        return (Fraction(x, den) for x in self.nums)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(self)

    def is_integral(self) -> bool:
        return self.den == 1

    def ints(self) -> tuple[int, ...]:
        if self.den != 1:
            raise ValueError("series has non-integral coefficients")
        return self.nums

    def truncate(self, T: int) -> "CoeffSeries":
        if T > self.truncation:
            raise TruncationError(f"cannot extend truncation {self.truncation} to {T}")
        return CoeffSeries(self.nums[: T + 1], self.den)

    def shift(self, k: int) -> "CoeffSeries":
        """Multiply by ``q**k`` (``k >= 0``); the truncation grows by ``k``."""
        if k < 0:
            raise ValueError("negative shifts would need a Laurent series")
        return CoeffSeries((0,) * k + self.nums, self.den)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"CoeffSeries([{head}{more}], T={self.truncation})"

    # -- arithmetic -------------------------------------------------------
    def _aligned(self, other: "CoeffSeries"):
        T = min(self.truncation, other.truncation)
        l = self.den * other.den // gcd(self.den, other.den)
        fa, fb = l // self.den, l // other.den
        a = [x * fa for x in self.nums[: T + 1]]
        b = [x * fb for x in other.nums[: T + 1]]
        return a, b, l

    def __add__(self, other):
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        a, b, l = self._aligned(other)
        return CoeffSeries(tuple(x + y for x, y in zip(a, b)), l)

    def __sub__(self, other):
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        a, b, l = self._aligned(other)
        return CoeffSeries(tuple(x - y for x, y in zip(a, b)), l)

    def __neg__(self):
        return CoeffSeries(tuple(-x for x in self.nums), self.den)

    def scale(self, c: Scalar) -> "CoeffSeries":
        c = Fraction(c)
        return CoeffSeries(tuple(x * c.numerator for x in self.nums), self.den * c.denominator)

    def __mul__(self, other):
        if isinstance(other, CoeffSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        return series_pow(self, e)


# -- integer kernels ------------------------------------------------------

def _mul_naive(a: Sequence[int], b: Sequence[int], T: int) -> list[int]:
    out = [0] * (T + 1)
    for i, x in enumerate(a[: T + 1]):
        if x:
            for j, y in enumerate(b[: T + 1 - i]):
                out[i + j] += x * y
    return out


def _pack(xs: Sequence[int], width: int, half: int) -> int:
    chunks = b"".join((x + half).to_bytes(width, "little") for x in xs)
    bias = int.from_bytes(half.to_bytes(width, "little") * len(xs), "little")
    return int.from_bytes(chunks, "little") - bias


def _unpack(value, count: int, width: int, half: int) -> list[int]:
    bias = int.from_bytes(half.to_bytes(width, "little") * count, "little")
    total = (value + bias) & ((1 << (8 * width * count)) - 1)
    raw = int(total).to_bytes(width * count, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        for i in range(count)
    ]


def mul_ints(a: Sequence[int], b: Sequence[int], T: int) -> list[int]:
    """Exact product of integer coefficient lists, truncated at ``q**T``."""
    a = list(a[: T + 1])
    b = list(b[: T + 1])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return [0] * (T + 1)
    if min(len(a), len(b)) <= _NAIVE_CUTOFF:
        return _mul_naive(a, b, T)
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bound = min(len(a), len(b)) * ma * mb
    width = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * width - 1)
    square = a == b
    A = gmpy2.mpz(_pack(a, width, half))
    B = A if square else gmpy2.mpz(_pack(b, width, half))
    return _unpack(A * B, T + 1, width, half)


def _inverse_unit_ints(a: Sequence[int], T: int) -> list[int]:
    # a[0] is +1 or -1
    u = a[0]
    support = [(i, x) for i, x in enumerate(a[1 : T + 1], start=1) if x]
    if len(support) * 8 <= T or T <= 64:
        out = [0] * (T + 1)
        out[0] = u
        for n in range(1, T + 1):
            s = 0
            for i, x in support:
                if i > n:
                    break
                s += x * out[n - i]
            out[n] = -u * s
        return out
    g = [u]
    prec = 1
    while prec < T + 1:
        prec = min(2 * prec, T + 1)
        e = mul_ints(a, g, prec - 1)
        e[0] -= 1
        corr = mul_ints(g, e, prec - 1)
        g = g + [0] * (prec - len(g))
        g = [x - y for x, y in zip(g, corr)]
    return g


def _nonneg_power_ints(base: list[int], e: int, T: int) -> list[int]:
    result = [1] + [0] * T
    first = True
    while e:
        if e & 1:
            result = base[: T + 1] if first else mul_ints(result, base, T)
            first = False
        e >>= 1
        if e:
            base = mul_ints(base, base, T)
    return result


# -- public series operations ---------------------------------------------

def series_mul(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    T = min(a.truncation, b.truncation)
    return CoeffSeries(tuple(mul_ints(a.nums, b.nums, T)), a.den * b.den)


def series_inverse(a: CoeffSeries) -> CoeffSeries:
    """Multiplicative inverse to the same truncation."""
    T = a.truncation
    c = a.nums[0]
    if c == 0:
        raise NotInvertibleError("constant term is zero")
    if c in (1, -1):
        inv = _inverse_unit_ints(a.nums, T)
        return CoeffSeries(tuple(x * a.den for x in inv), 1)
    # B(q) = A(c q) / c has unit constant term and integer coefficients;
    # 1/A(q) has coefficients e_n / c^(n+1) where e = 1/B.
    b = [1] + [x * c ** (n - 1) for n, x in enumerate(a.nums[1:], start=1)]
    e = _inverse_unit_ints(b, T)
    nums = tuple(a.den * x * c ** (T - n) for n, x in enumerate(e))
    return CoeffSeries(nums, c ** (T + 1))


def series_pow(a: CoeffSeries, e: int) -> CoeffSeries:
    T = a.truncation
    if e < 0:
        return series_pow(series_inverse(a), -e)
    nums = _nonneg_power_ints(list(a.nums), e, T)
    return CoeffSeries(tuple(nums), a.den**e)


def pentagonal_exponents(T: int) -> list[tuple[int, int]]:
    """``(g, sign)`` for generalized pentagonal ``g <= T`` in Euler's identity."""
    out = [(0, 1)]
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > T:
            break
        s = -1 if k % 2 else 1
        out.append((g1, s))
        g2 = k * (3 * k + 1) // 2
        if g2 <= T:
            out.append((g2, s))
        k += 1
    return sorted(out)


def pochhammer_series(j: int, T: int) -> CoeffSeries:
    """``(q^j; q^j)_infinity`` through ``q**T``."""
    if j < 1:
        raise ValueError("j must be a positive integer")
    nums = [0] * (T + 1)
    for g, s in pentagonal_exponents(T // j):
        nums[j * g] = s
    return CoeffSeries(tuple(nums))


def _dilate_ints(xs: Sequence[int], j: int, T: int) -> list[int]:
    out = [0] * (T + 1)
    for n, x in enumerate(xs):
        if j * n > T:
            break
        out[j * n] = x
    return out


def _pochhammer_power_ints(j: int, delta: int, T: int) -> list[int]:
    t = T // j
    base = [0] * (t + 1)
    for g, s in pentagonal_exponents(t):
        base[g] = s
    if delta < 0:
        base = _inverse_unit_ints(base, t)
    return _dilate_ints(_nonneg_power_ints(base, abs(delta), t), j, T)


# -- eta-quotients ----------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``prod_j eta(j z)**delta_j`` as sorted ``(j, delta_j)`` pairs."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        terms = tuple(sorted((int(j), int(d)) for j, d in self.terms))
        if not terms:
            raise ValueError("an eta-quotient needs at least one factor")
        js = [j for j, _ in terms]
        if len(set(js)) != len(js):
            raise ValueError(f"repeated dilation in {terms}")
        for j, d in terms:
            if j < 1 or d == 0:
                raise ValueError(f"bad factor eta({j}z)^{d}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "EtaQuotientSpec":
        return cls(tuple(mapping.items()))

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse ``"1^-2 2^3 4^2"``; a bare ``j`` means exponent 1."""
        terms = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse eta factor {tok!r}")
            terms.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(terms))

    @property
    def weight_numerator(self) -> int:
        """Twice the weight, i.e. ``sum(delta_j)``."""
        return sum(d for _, d in self.terms)

    @property
    def weight(self) -> Fraction:
        return Fraction(self.weight_numerator, 2)

    @property
    def exponent24(self) -> int:
        return sum(j * d for j, d in self.terms)

    @property
    def label(self) -> str:
        return " ".join(f"{j}^{d}" for j, d in self.terms)

    def __str__(self) -> str:
        return self.label


def dilate_spec(spec: EtaQuotientSpec, c: int) -> EtaQuotientSpec:
    """The spec of ``f(c z)``."""
    if c < 1:
        raise ValueError("dilation must be positive")
    return EtaQuotientSpec(tuple((c * j, d) for j, d in spec.terms))


def eta_quotient_series(spec: EtaQuotientSpec, T: int) -> tuple[int, CoeffSeries]:
    """``(exponent24, C)`` with ``prod (q^j;q^j)^delta_j = sum C(n) q^n``.

    The full Fourier expansion is ``q**(exponent24/24) * sum C(n) q^n``.
    """
    result = None
    for j, d in spec.terms:
        part = _pochhammer_power_ints(j, d, T)
        result = part if result is None else mul_ints(result, part, T)
    return spec.exponent24, CoeffSeries(tuple(result))


def eta_coefficients(spec: EtaQuotientSpec | str, T: int) -> tuple[int, ...]:
    """Integer coefficients ``C(0..T)`` of the product side."""
    if isinstance(spec, str):
        spec = EtaQuotientSpec.parse(spec)
    return eta_quotient_series(spec, T)[1].ints()


def eta_fourier_series(spec: EtaQuotientSpec, T: int) -> CoeffSeries:
    """Full q-expansion of the eta-quotient through ``q**T``.

    Only eta-quotients whose leading exponent is a nonnegative integer are
    representable as a :class:`CoeffSeries`.
    """
    e24 = spec.exponent24
    if e24 % 24 or e24 < 0:
        raise ValueError(f"{spec} has leading exponent {Fraction(e24, 24)}, not a nonnegative integer")
    s = e24 // 24
    if T < s:
        return CoeffSeries.zero(T)
    _, c = eta_quotient_series(spec, T - s)
    return c.shift(s)
