"""Exact rational scalars, rising factorials, and prime enumeration.

Everything downstream (p-adic reduction, cyclotomic coefficients, series
summation) runs on ``fractions.Fraction``, which already maintains the
canonical form the rest of the package relies on: positive denominator,
numerator and denominator coprime.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Canonical exact scalar type.  Alias so call sites document intent.
BigRational = Fraction

factorial = math.factorial


def as_rational(x) -> Fraction:
    """Coerce an int or Fraction to Fraction.  Floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or int")
    return Fraction(x)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1), with the empty product 1 for n = 0.

    A nonpositive integer ``a`` legitimately yields 0 once the factors
    cross zero (terminating series); that is not an error.
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = as_rational(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def is_prime(n: int) -> bool:
    """Deterministic primality test; trial division is fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if lo > hi:
        raise ValueError("empty range: lo must not exceed hi")
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(hi) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]
