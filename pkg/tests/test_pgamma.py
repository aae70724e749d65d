from fractions import Fraction

import pytest

from sclab.padic import PadicContext, vp
from sclab.pgamma import (
    NonPadicArgumentError,
    OddPrimeRequiredError,
    SpanHitsMultipleOfPError,
    _unit_range_product,
    _unit_range_product_naive,
    ap,
    gamma_p,
    gamma_p_int,
    pochhammer_residue_direct,
    pochhammer_residue_via_gamma,
)

from conftest import random_padic_rational

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_ap_examples():
    assert ap(2, 5) == 2
    assert ap(0, 5) == 5
    assert ap(Fraction(1, 4), 7) == 2


def test_ap_rejects_non_padic():
    with pytest.raises(NonPadicArgumentError):
        ap(Fraction(1, 5), 5)


def test_gamma_at_zero_and_one():
    for p in (3, 5, 7, 13):
        for k in (1, 2, 3):
            ctx = PadicContext(p, k)
            assert gamma_p(0, ctx).value == 1
            assert gamma_p(1, ctx).value == ctx.modulus - 1


def test_gamma_small_integer():
    # (-1)^4 * (1*2*3) from the defining product
    assert gamma_p(4, PadicContext(5, 2)).value == 6


def test_gamma_quarter_mod_27():
    # representative of 1/4 mod 27 is 7; signed product over units below 7
    assert gamma_p(Fraction(1, 4), PadicContext(3, 3)).value == 14


def test_gamma_rejects_p_two():
    with pytest.raises(OddPrimeRequiredError):
        gamma_p(1, PadicContext(2, 3))


def test_gamma_rejects_non_padic():
    with pytest.raises(NonPadicArgumentError):
        gamma_p(Fraction(1, 3), PadicContext(3, 2))


def test_blocked_product_matches_naive(rng):
    for _ in range(60):
        p = rng.choice(SMALL_PRIMES)
        modulus = p ** rng.randint(1, 4)
        m = rng.randint(0, 3000)
        assert _unit_range_product(1, m, p, modulus) == _unit_range_product_naive(
            1, m, p, modulus
        )


def test_reflection(rng):
    # gamma(x) * gamma(1 - x) = (-1)^(a_p(x))
    for _ in range(120):
        p = rng.choice(SMALL_PRIMES[:8])
        k = rng.randint(1, 4)
        ctx = PadicContext(p, k)
        x = random_padic_rational(rng, p)
        lhs = (gamma_p(x, ctx) * gamma_p(1 - x, ctx)).value
        rhs = (-1) ** ap(x, p) % ctx.modulus
        assert lhs == rhs


def test_translation(rng):
    # gamma(x+1)/gamma(x) is -x for unit x and -1 for x in pZ_p
    for _ in range(120):
        p = rng.choice(SMALL_PRIMES[:8])
        k = rng.randint(1, 3)
        ctx = PadicContext(p, k)
        x = random_padic_rational(rng, p)
        if rng.random() < 0.3:
            x = x * p  # exercise the positive-valuation branch
        ratio = gamma_p(x + 1, ctx) * gamma_p(x, ctx).inverse()
        if vp(x, p) == 0:
            assert ratio == ctx.reduce(-x)
        else:
            assert ratio.value == ctx.modulus - 1


def test_mod_p_continuity(rng):
    # x = y (mod p) forces gamma residues to agree mod p
    for _ in range(120):
        p = rng.choice(SMALL_PRIMES)
        ctx = PadicContext(p, 1)
        x = random_padic_rational(rng, p)
        y = x + p * rng.randint(1, 9)
        assert gamma_p(x, ctx) == gamma_p(y, ctx)


def test_representative_stability(rng):
    # representatives congruent mod p^k give values congruent mod p^k
    for _ in range(60):
        p = rng.choice([3, 5, 7, 11, 13])
        k = rng.randint(1, 3)
        ctx = PadicContext(p, k)
        m = rng.randrange(ctx.modulus)
        t = rng.randint(1, 5)
        assert gamma_p_int(m, ctx) == gamma_p_int(m + t * ctx.modulus, ctx)


def test_pochhammer_via_gamma_examples():
    # 15/8 mod 7: direct reduction gives 15 * 8^-1 = 1
    ctx = PadicContext(7, 1)
    res = pochhammer_residue_via_gamma(Fraction(1, 2), 3, ctx)
    assert res.value == 1
    assert res == pochhammer_residue_direct(Fraction(1, 2), 3, ctx)

    assert pochhammer_residue_via_gamma(1, 0, PadicContext(5, 3)).value == 1

    ctx2 = PadicContext(5, 2)
    assert pochhammer_residue_via_gamma(Fraction(1, 3), 2, ctx2) == ctx2.reduce(
        Fraction(4, 9)
    )


def test_pochhammer_via_gamma_precondition():
    # the span 1/3, 4/3 contains 5/3 only at j=... here 1/3 + 1 = 4/3 is fine,
    # but starting at 5/3 the very first factor is divisible by 5
    with pytest.raises(SpanHitsMultipleOfPError):
        pochhammer_residue_via_gamma(Fraction(5, 3), 2, PadicContext(5, 2))


def test_pochhammer_via_gamma_random(rng):
    for _ in range(120):
        p = rng.choice(SMALL_PRIMES[:8])
        k = rng.randint(1, 3)
        ctx = PadicContext(p, k)
        a = random_padic_rational(rng, p)
        n = rng.randint(0, 8)
        try:
            via_gamma = pochhammer_residue_via_gamma(a, n, ctx)
        except SpanHitsMultipleOfPError:
            continue
        assert via_gamma == pochhammer_residue_direct(a, n, ctx)
