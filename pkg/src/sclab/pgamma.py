"""The Morita p-adic Gamma function mod p^k, with its classical toolkit.

At a nonnegative integer m the function is the signed partial product

    G_p(m) = (-1)^m  *  prod of j for 0 < j < m with p not dividing j,

and it extends continuously to all p-adic integers.  A rational argument x
with denominator prime to p is evaluated through its integer representative
m in [0, p^k): arguments congruent mod p^N have values congruent mod p^N,
so the representative determines the value to the working precision.  The
stability test in the suite pins that assumption.

Only odd p is supported; the sign conventions below are wrong at p = 2.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .padic import PadicContext, Residue, vp
from .rationals import as_rational, pochhammer


class OddPrimeRequiredError(ValueError):
    """The p-adic Gamma evaluator rejects p = 2."""


class NonPadicArgumentError(ValueError):
    """Argument is not a p-adic integer."""


class SpanHitsMultipleOfPError(ValueError):
    """Some a + j in the rising-factorial span lies in pZ_p."""


def ap(x, p: int) -> int:
    """The representative of x mod p in {1, ..., p}."""
    x = as_rational(x)
    if vp(x, p) < 0:
        raise NonPadicArgumentError(f"{x} is not a {p}-adic integer")
    value = x.numerator * pow(x.denominator, -1, p) % p
    return value if value else p


def _unit_range_product_naive(lo: int, hi: int, p: int, modulus: int) -> int:
    """Product of j in [lo, hi) coprime to p, one multiply per element.

    This is the defining computation; the blocked version below must agree
    with it (pinned by a test).
    """
    acc = 1
    for j in range(lo, hi):
        if j % p:
            acc = acc * j % modulus
    return acc


def _unit_range_product(lo: int, hi: int, p: int, modulus: int) -> int:
    """Blocked version of the same product: multiply each run between
    consecutive multiples of p with math.prod, one reduction per run."""
    acc = 1
    start = lo
    while start < hi:
        if start % p == 0:
            start += 1
            continue
        stop = min(start + (p - start % p), hi)
        acc = acc * math.prod(range(start, stop)) % modulus
        start = stop + 1
    return acc


@lru_cache(maxsize=512)
def _gamma_at_integer(m: int, p: int, modulus: int) -> int:
    sign = -1 if m % 2 else 1
    return sign * _unit_range_product(1, m, p, modulus) % modulus


def gamma_p_int(m: int, ctx: PadicContext) -> Residue:
    """Gamma value at a nonnegative integer representative m.

    m may exceed the modulus; representatives congruent mod p^k give
    residues congruent mod p^k, which the property suite checks.
    """
    if ctx.p == 2:
        raise OddPrimeRequiredError("p = 2 is outside the supported range")
    if m < 0:
        raise ValueError("integer representative must be nonnegative")
    return Residue(_gamma_at_integer(m, ctx.p, ctx.modulus), ctx)


def gamma_p(x, ctx: PadicContext) -> Residue:
    """Gamma of a p-adic integer rational, mod p^k."""
    if ctx.p == 2:
        raise OddPrimeRequiredError("p = 2 is outside the supported range")
    x = as_rational(x)
    if vp(x, ctx.p) < 0:
        raise NonPadicArgumentError(f"{x} is not a {ctx.p}-adic integer")
    return gamma_p_int(ctx.reduce(x).value, ctx)


def pochhammer_residue_via_gamma(a, n: int, ctx: PadicContext) -> Residue:
    """Residue of the rising factorial (a)_n computed through Gamma:
    (a)_n = (-1)^n G_p(a+n) / G_p(a), valid when no a + j (0 <= j < n)
    lies in pZ_p."""
    a = as_rational(a)
    for j in range(n):
        if vp(a + j, ctx.p) >= 1:
            raise SpanHitsMultipleOfPError(
                f"{a} + {j} is divisible by {ctx.p}; the Gamma quotient "
                "form does not apply"
            )
    num = gamma_p(a + n, ctx)
    den = gamma_p(a, ctx)
    out = num * den.inverse()
    if n % 2:
        out = Residue(-out.value % ctx.modulus, ctx)
    return out


def pochhammer_residue_direct(a, n: int, ctx: PadicContext) -> Residue:
    """Reference route: exact rising factorial, then one reduction."""
    return ctx.reduce(pochhammer(as_rational(a), n))
