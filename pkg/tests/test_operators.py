from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from etaq.arithmetic import kronecker
from etaq.lvalues import TRIVIAL, CharacterSpec
from etaq.newforms import G1_WEIGHT, G2_WEIGHT, g1_coefficients, g2_coefficients, sqrt_minus3_norm
from etaq.operators import ModularityData, deligne_bound_check, hecke_Tp, op_sieve, op_twist, op_U, op_V
from etaq.qseries import CoeffSeries, eta_coefficients

series_st = st.lists(st.integers(-1000, 1000), min_size=1, max_size=201).map(lambda xs: CoeffSeries(tuple(xs), 7))
ell_st = st.integers(1, 12)
P2 = CoeffSeries(eta_coefficients("1^2 2^-1", 40))


def test_U_examples():
    assert op_U(P2, 1) == P2
    assert op_U(CoeffSeries((1, -2, 0, 0, 2)), 2).nums == (1, 0, 2)
    U4 = op_U(P2, 4)
    assert U4[0] == 1
    assert all(U4[n] == (2 if round(n**0.5) ** 2 == n else 0) for n in range(1, U4.truncation + 1))


def test_V_examples():
    assert op_V(P2, 1) == P2
    assert op_V(CoeffSeries((1, 1)), 2).nums == (1, 0, 1, 0)


def test_V_cap_and_known_zero_tail():
    s = CoeffSeries((1, 2, 3))
    assert op_V(s, 3).truncation == 8
    assert op_V(s, 3, cap=5).nums == (1, 0, 0, 2, 0, 0)


def test_sieve_examples():
    assert op_sieve(P2, 1, 0) == P2
    S = op_sieve(P2.truncate(10), 2, 1)
    assert S.nums == (0, -2, 0, 0, 0, 0, 0, 0, 0, -2, 0)


@settings(max_examples=60)
@given(series_st, ell_st)
def test_U_V_composition(s, ell):
    assert op_U(op_V(s, ell), ell) == s
    assert op_V(op_U(s, ell), ell, cap=s.truncation) == op_sieve(s, ell, 0).truncate(
        min(s.truncation, ell * (s.truncation // ell) + ell - 1))


@settings(max_examples=60)
@given(series_st, ell_st)
def test_sieves_partition_and_are_orthogonal(s, M):
    parts = [op_sieve(s, M, m) for m in range(M)]
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    assert total == s
    for m in range(M):
        assert op_sieve(parts[m], M, m) == parts[m]
        for m2 in range(M):
            if m2 != m:
                assert op_sieve(parts[m], M, m2) == CoeffSeries.zero(s.truncation)


def test_twist_examples():
    assert op_twist(P2, TRIVIAL) == P2
    tw = op_twist(P2, CharacterSpec(-4))
    assert tw[1] == -2 and tw[4] == 0
    g2 = CoeffSeries(tuple(g2_coefficients()))
    assert op_twist(g2, CharacterSpec(-3))[2] == 2


@pytest.mark.parametrize("D", [-4, -3, 5, 8, 12, -24])
@settings(max_examples=20)
@given(s=series_st)
def test_double_twist_keeps_coprime_indices(D, s):
    chi = CharacterSpec(D)
    out = op_twist(op_twist(s, chi), chi)
    for n in range(s.truncation + 1):
        assert out[n] == (s[n] if kronecker(D, n) != 0 else 0)


def test_hecke_examples():
    out = hecke_Tp(CoeffSeries((0, 1, 5, 0, 7)), 2, 2, TRIVIAL)
    assert out[1] == 5 and out[2] == 7 + 2 * 1
    assert hecke_Tp(CoeffSeries.zero(20), 3, 4, TRIVIAL) == CoeffSeries.zero(6)


@settings(max_examples=40)
@given(series_st, series_st, st.fractions(max_denominator=20), st.sampled_from([2, 3, 5]))
def test_hecke_is_linear(a, b, c, p):
    T = min(a.truncation, b.truncation)
    a, b = a.truncate(T), b.truncate(T)
    chi = CharacterSpec(-4)
    lhs = hecke_Tp(a + b.scale(c), p, 3, chi)
    assert lhs == hecke_Tp(a, p, 3, chi) + hecke_Tp(b, p, 3, chi).scale(c)


def test_operators_reject_bad_arguments():
    with pytest.raises(ValueError):
        op_U(P2, 0)
    with pytest.raises(ValueError):
        op_V(P2, 0)
    with pytest.raises(ValueError):
        op_sieve(P2, 0, 0)


def test_deligne_examples():
    assert deligne_bound_check(g2_coefficients(), G2_WEIGHT)
    assert deligne_bound_check(g1_coefficients(), G1_WEIGHT, norm=sqrt_minus3_norm)
    assert sqrt_minus3_norm(g1_coefficients()[2]) == 4
    assert deligne_bound_check(CoeffSeries.zero(30), 3)
    assert not deligne_bound_check([0, 1, 5], 3)


def test_modularity_metadata():
    m = ModularityData(Fraction(2), 16)
    assert m.after_V(4).level == 64
    assert m.after_sieve(2).level == 16
    assert m.after_U(2) == m
    with pytest.raises(ValueError):
        m.after_U(3)
