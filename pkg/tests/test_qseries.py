from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from etaq.arithmetic import triangular_rep_count
from etaq.qseries import (
    CoeffSeries,
    EtaQuotientSpec,
    NotInvertibleError,
    TruncationError,
    dilate_spec,
    eta_coefficients,
    eta_fourier_series,
    eta_quotient_series,
    mul_ints,
    pochhammer_series,
    series_inverse,
    series_mul,
    series_pow,
)

PAPER_SPECS = [
    "1^-2 2^3 4^2", "1^3 2^-2 3^3", "1^4 2^4 3^-2", "1^4 2^2 4^-2", "1^4 2^4 4^-3",
    "1^9 3^-3", "1^5 5^-1", "1^2 2^2 3^-1", "1^4 2^-2", "1^2 2^-1", "1^3 3^-1",
    "3^3 6^-2 9^3", "8^2 16^2 24^-1", "8^-1 16^2", "1^49 7^-7", "1^11 11^-1",
]


def naive_mul(a, b, T):
    return [sum(Fraction(a[i]) * b[n - i] for i in range(n + 1)) for n in range(T + 1)]


def direct_product(factors_exponents, T):
    """prod (1 - q^n)^e over given (n, e), truncated at T, by repeated multiplication."""
    out = [Fraction(0)] * (T + 1)
    out[0] = Fraction(1)
    for n, e in factors_exponents:
        if e >= 0:
            for _ in range(e):
                out = [out[i] - (out[i - n] if i >= n else 0) for i in range(T + 1)]
        else:
            for _ in range(-e):
                # divide by (1 - q^n)
                res = list(out)
                for i in range(n, T + 1):
                    res[i] += res[i - n]
                out = res
    return out


series_st = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=60)


def test_multiplication_examples():
    a = CoeffSeries((1, 1, 0, 0))
    b = CoeffSeries((1, -1, 0, 0))
    assert (a * b).nums == (1, 0, -1, 0)
    geo = CoeffSeries((1,) * 31)
    assert (geo * CoeffSeries((1, -1) + (0,) * 29)).nums == (1,) + (0,) * 30
    assert series_mul(a, CoeffSeries.one(3)) == a


@settings(max_examples=200)
@given(series_st, series_st)
def test_mul_matches_schoolbook(a, b):
    T = min(len(a), len(b)) - 1
    assert mul_ints(a, b, T) == naive_mul(a, b, T)


@given(st.lists(st.integers(-10**40, 10**40), min_size=30, max_size=200))
def test_kronecker_substitution_big_coefficients(a):
    T = len(a) - 1
    assert mul_ints(a, a[::-1], T) == naive_mul(a, a[::-1], T)


@settings(max_examples=50)
@given(series_st, series_st, series_st)
def test_mul_commutative_associative(a, b, c):
    T = min(len(a), len(b), len(c)) - 1
    A, B, C = (CoeffSeries(tuple(x[: T + 1]), 3) for x in (a, b, c))
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)


def test_inverse_examples():
    T = 20
    assert series_inverse(CoeffSeries((1, -1) + (0,) * (T - 1))).nums == (1,) * (T + 1)
    partitions = series_inverse(pochhammer_series(1, T))
    assert list(partitions.ints()) == [int(sympy.partition(n)) for n in range(T + 1)]
    assert series_inverse(CoeffSeries.constant(Fraction(3, 7), 5)) == CoeffSeries.constant(Fraction(7, 3), 5)


@settings(max_examples=100)
@given(st.integers(-5, 5).filter(bool), st.lists(st.integers(-50, 50), min_size=1, max_size=40), st.integers(1, 9))
def test_inverse_roundtrip(c0, rest, den):
    s = CoeffSeries((c0,) + tuple(rest), den)
    assert s * series_inverse(s) == CoeffSeries.one(s.truncation)


def test_inverse_rejects_zero_constant():
    with pytest.raises(NotInvertibleError):
        series_inverse(CoeffSeries((0, 1, 2)))


def test_power_examples():
    s = CoeffSeries((2, 1, 5, -3))
    assert series_pow(s, 0) == CoeffSeries.one(3)
    assert series_pow(s, -1) == series_inverse(s)
    assert series_pow(pochhammer_series(1, 5), 3)[1] == -3


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=25).filter(lambda x: x[0] != 0), st.integers(-6, 6))
def test_power_is_repeated_product(xs, e):
    s = CoeffSeries(tuple(xs))
    base = s if e >= 0 else series_inverse(s)
    expected = CoeffSeries.one(s.truncation)
    for _ in range(abs(e)):
        expected = expected * base
    assert series_pow(s, e) == expected


def test_pochhammer_examples():
    assert pochhammer_series(1, 12).nums == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)
    assert pochhammer_series(2, 2).nums == (1, 0, -1)
    for j in (1, 3, 7):
        assert pochhammer_series(j, 10)[0] == 1


def test_pochhammer_matches_direct_product():
    T = 300
    assert list(pochhammer_series(1, T)) == direct_product([(n, 1) for n in range(1, T + 1)], T)


def test_truncation_is_enforced():
    s = CoeffSeries((1, 2, 3))
    with pytest.raises(TruncationError):
        s[3]
    with pytest.raises(TruncationError):
        s.truncate(5)
    assert (s + CoeffSeries((1,) * 10)).truncation == 2


def test_spec_parsing_and_bookkeeping():
    spec = EtaQuotientSpec.parse("8^2 16^2 24^-1")
    assert spec.exponent24 == 24
    assert spec.weight == Fraction(3, 2)
    assert EtaQuotientSpec.parse("1^4 2^-2") == EtaQuotientSpec.of({1: 4, 2: -2})
    for bad in ("0^2", "1^2 1^3", "x", "2^0"):
        with pytest.raises(ValueError):
            EtaQuotientSpec.parse(bad)


def test_dilate_examples():
    assert dilate_spec(EtaQuotientSpec.of({1: -2, 2: 3, 4: 2}), 8) == EtaQuotientSpec.of({8: -2, 16: 3, 32: 2})
    spec = EtaQuotientSpec.of({1: 9, 3: -3})
    assert dilate_spec(spec, 1) == spec
    assert dilate_spec(spec, 2) == EtaQuotientSpec.of({2: 9, 6: -3})


def test_eta_quotient_examples():
    e24, s = eta_quotient_series(EtaQuotientSpec.of({1: 2, 2: -1}), 9)
    assert e24 == 0
    assert s.nums == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)
    assert eta_coefficients("1^4 2^-2", 1) == (1, -4)


@pytest.mark.parametrize("text", ["1^3 2^-2 3^3", "1^4 2^4 4^-3", "1^2 2^2 3^-1", "1^-2 2^3 4^2"])
def test_eta_quotient_matches_direct_product(text):
    T = 120
    spec = EtaQuotientSpec.parse(text)
    factors = [(j * n, d) for j, d in spec.terms for n in range(1, T // j + 1)]
    assert [Fraction(x) for x in eta_coefficients(spec, T)] == direct_product(factors, T)


@pytest.mark.parametrize("text", PAPER_SPECS)
def test_eta_quotients_are_integral(text):
    _, s = eta_quotient_series(EtaQuotientSpec.parse(text), 1000)
    assert s.is_integral()


def test_theta_support_on_odd_squares():
    spec = dilate_spec(EtaQuotientSpec.of({1: -1, 2: 2}), 8)
    e24, s = eta_quotient_series(spec, 2000)
    assert e24 == 24
    tri = {8 * m * (m + 1) // 2 for m in range(40)}
    assert all(s[n] == (1 if n in tri else 0) for n in range(2001))
    full = eta_fourier_series(spec, 2001)
    assert all(full[n] == (1 if n % 2 and round(n**0.5) ** 2 == n else 0) for n in range(2002))


def test_fourier_series_requires_integral_shift():
    with pytest.raises(ValueError):
        eta_fourier_series(EtaQuotientSpec.parse("1^3"), 10)


def test_triangular_product_coefficients():
    C = eta_coefficients("1^-2 2^3 4^2", 2000)
    for n in range(0, 2001, 11):
        assert C[n] == triangular_rep_count(n)
