"""Multiplicative number theory on small integers.

Everything here works on plain Python ints.  Factorizations are memoized,
which is safe under threads because ``functools.lru_cache`` is.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt, prod
from typing import Sequence

Factorization = tuple[tuple[int, int], ...]


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs."""
    if n <= 0:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n`` (``n`` nonzero)."""
    if n == 0:
        raise ValueError("ord_p(0) is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def split_prime_power(n: int, p: int) -> tuple[int, int]:
    """Write ``n = p**a * m`` with ``p`` not dividing ``m``; return ``(a, m)``."""
    a = ord_p(n, p)
    return a, n // p**a


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def sigma(n: int, k: int = 1) -> int:
    """Sum of ``d**k`` over the divisors of ``n``."""
    if k == 0:
        return num_divisors(n)
    return prod((p ** (k * (e + 1)) - 1) // (p**k - 1) for p, e in factorize(n))


def num_divisors(n: int) -> int:
    return prod(e + 1 for _, e in factorize(n))


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def is_squarefree(n: int) -> bool:
    return mobius(n) != 0


def _jacobi(a: int, n: int) -> int:
    # n odd and positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol ``(a/n)`` for arbitrary integers ``a`` and ``n``."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * _jacobi(a, n)


def is_discriminant(d: int) -> bool:
    return d % 4 in (0, 1)


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of quadratic fields (``1`` is excluded)."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


def sign(x) -> int:
    return (x > 0) - (x < 0)


def twisted_divisor_sum(n: int, D: int, k: int) -> int:
    """Sum over ``d | n`` of ``kronecker(D, d) * d**k``."""
    if n < 1:
        raise ValueError(f"twisted_divisor_sum needs n >= 1, got {n}")
    return sum(kronecker(D, d) * d**k for d in divisors(n))


def legendre_twisted_divisor_sum(n: int, p: int, k: int) -> int:
    """Sum over ``d | n`` of ``(d/p) * d**k``; the character sits on the top."""
    return sum(kronecker(d, p) * d**k for d in divisors(n))


def sign_of_twisted_sum(n: int, p: int, k: int) -> int:
    """Sign of ``sum_{d | n} (d/p) d**k`` computed by direct summation."""
    if k < 1:
        raise ValueError("k must be positive")
    return sign(legendre_twisted_divisor_sum(n, p, k))


def rep_count_quadratic(a: Sequence[int], n: int) -> int:
    """Number of ``x`` in ``Z^len(a)`` with ``sum(a_j * x_j**2) == n``.

    Plain recursive enumeration over ``|x_j| <= sqrt(n / a_j)``; the last
    coordinate is solved with an integer square root.
    """
    a = tuple(a)
    if not a or any(c <= 0 for c in a):
        raise ValueError("coefficients must be a nonempty list of positive integers")
    if n < 0:
        return 0

    def count(i: int, rest: int) -> int:
        c = a[i]
        if i == len(a) - 1:
            if rest % c:
                return 0
            q = rest // c
            r = isqrt(q)
            if r * r != q:
                return 0
            return 1 if r == 0 else 2
        total = 0
        for x in range(isqrt(rest // c) + 1):
            w = count(i + 1, rest - c * x * x)
            total += w if x == 0 else 2 * w
        return total

    return count(0, n)


def rep_count_table(a: Sequence[int], N: int) -> list[int]:
    """``rep_count_quadratic(a, n)`` for all ``0 <= n <= N`` at once.

    Convolves the one-variable counts ``#{x : c x^2 = n}`` coordinate by
    coordinate, which is the same enumeration organised as a table.
    """
    table = [0] * (N + 1)
    table[0] = 1
    for c in a:
        single = [(x, 1 if x == 0 else 2) for x in range(isqrt(N // c) + 1)]
        new = [0] * (N + 1)
        for x, w in single:
            shift = c * x * x
            for n in range(N + 1 - shift):
                if table[n]:
                    new[n + shift] += w * table[n]
        table = new
    return table


def triangular(m: int) -> int:
    return m * (m + 1) // 2


def is_triangular(t: int) -> bool:
    if t < 0:
        return False
    r = isqrt(8 * t + 1)
    return r * r == 8 * t + 1


def triangular_rep_count(n: int) -> int:
    """Number of ``(n1, n2, n3)`` in ``N_0^3`` with ``T(n1) + T(n2) + 2 T(n3) = n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    n3 = 0
    while 2 * triangular(n3) <= n:
        rest = n - 2 * triangular(n3)
        n1 = 0
        while triangular(n1) <= rest:
            if is_triangular(rest - triangular(n1)):
                total += 1
            n1 += 1
        n3 += 1
    return total
