from fractions import Fraction
from math import gcd

import pytest

from etaq.arithmetic import is_fundamental_discriminant
from etaq.hurwitz import (
    HurwitzCache,
    fundamental_part,
    hurwitz,
    hurwitz_series,
    hurwitz_sieved,
    hurwitz_table12,
    reduced_forms,
    s_d_factor,
)
from etaq.operators import op_U, op_V


def brute_class_weight(D):
    """Weighted count of forms (a,b,c), b^2-4ac=-D, reduced, found by scanning a box."""
    total = Fraction(0)
    for a in range(1, D + 1):
        for b in range(-a + 1, a + 1):
            if (b * b + D) % (4 * a):
                continue
            c = (b * b + D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            w = Fraction(1, 3) if (a == b == c) else Fraction(1, 2) if (b == 0 and a == c) else 1
            total += w
    return total


@pytest.mark.parametrize("D,h", [(0, Fraction(-1, 12)), (3, Fraction(1, 3)), (4, Fraction(1, 2)), (23, 3),
                                 (7, 1), (8, 1), (11, 1), (12, Fraction(4, 3)), (15, 2), (16, Fraction(3, 2)),
                                 (20, 2), (27, Fraction(4, 3))])
def test_hurwitz_examples(D, h):
    assert hurwitz(D) == h


def test_forms_of_23():
    assert sorted(reduced_forms(23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_hurwitz_support_and_positivity():
    for D in range(1, 400):
        h = hurwitz(D)
        if D % 4 in (1, 2):
            assert h == 0
        else:
            assert h > 0
            assert h == brute_class_weight(D)
    assert hurwitz(Fraction(7, 3)) == 0 and hurwitz(-3) == 0


def test_table_matches_single_values():
    table = hurwitz_table12(3000)
    cache = HurwitzCache()
    for D in range(0, 3001, 13):
        assert Fraction(table[D], 12) == cache(D)


def test_series_examples():
    H = hurwitz_series(10)
    assert H[0] == Fraction(-1, 12) and H[1] == 0 and H[7] == 1


def test_s_d_factor_examples():
    assert s_d_factor(3, 1) == 1 and s_d_factor(11, 1) == 1
    assert s_d_factor(3, 2) == 4 and s_d_factor(11, 2) == 4
    assert hurwitz(12) == hurwitz(3) * s_d_factor(3, 2)
    with pytest.raises(ValueError):
        s_d_factor(12, 2)


def test_class_number_relation():
    for D in range(3, 101):
        if not is_fundamental_discriminant(-D):
            continue
        for f in range(1, 11):
            assert hurwitz(D * f * f) == hurwitz(D) * s_d_factor(D, f), (D, f)


def test_s_d_multiplicative():
    for D in (3, 4, 7, 8, 23):
        for f in range(1, 30):
            for g in range(1, 30):
                if gcd(f, g) == 1:
                    assert s_d_factor(D, f * g) == s_d_factor(D, f) * s_d_factor(D, g)


def test_fundamental_part():
    assert fundamental_part(12) == (3, 2)
    assert fundamental_part(99) == (11, 3)
    assert fundamental_part(4) == (4, 1)
    with pytest.raises(ValueError):
        fundamental_part(5)


def test_sieved_examples():
    h13 = hurwitz_sieved(1, 3, 10)
    assert h13[1] == Fraction(1, 3) and h13[3] == 0
    assert hurwitz_sieved(4, 3, 3)[0] == Fraction(1, 6)
    with pytest.raises(ValueError):
        hurwitz_sieved(3, 3, 5)


@pytest.mark.parametrize("l1,l2", [(1, 3), (4, 3), (2, 5), (1, 1)])
def test_sieved_matches_operator_composition(l1, l2):
    T = 300
    H = hurwitz_series(l1 * l2 * T)
    via_ops = op_U(H, l1 * l2) - op_V(op_U(H, l1), l2, cap=T).scale(l2)
    assert hurwitz_sieved(l1, l2, T) == via_ops
