from fractions import Fraction

import pytest

from sclab.claims import InadmissibleInstanceError
from sclab.qring import (
    LaurentPolynomial,
    NonUnitFactorError,
    QPolynomial,
    QRing,
    binomial_factor,
    cyclotomic_poly,
    q_integer,
    q_integer_laurent,
    q_pochhammer,
    q_pochhammer_laurent,
    verify_q_conjecture,
)
from sclab.rationals import pochhammer


def test_polynomial_canonical_form():
    assert QPolynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert QPolynomial([0, 0]).is_zero
    assert QPolynomial.zero().degree == -1


def test_polynomial_divmod_roundtrip(rng):
    for _ in range(60):
        u = QPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(0, 9))])
        v = QPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 6))])
        if v.is_zero:
            continue
        quo, rem = divmod(u, v)
        assert quo * v + rem == u
        assert rem.degree < v.degree


def test_cyclotomic_poly():
    assert cyclotomic_poly(5).coeffs == (Fraction(1),) * 5
    assert cyclotomic_poly(2).coeffs == (Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        cyclotomic_poly(6)


def test_q_integer_examples():
    ring = QRing(7)
    assert q_integer(1, ring) == ring.one
    assert q_integer(3, ring) == ring.from_coeffs([1, 1, 1])
    assert q_integer(0, ring).is_zero


def test_q_integer_negative():
    # [-2] * (1 - q) must equal 1 - q^-2
    ring = QRing(7)
    lhs = q_integer(-2, ring) * (ring.one - ring.q_power(1))
    rhs = ring.one - ring.q_power(-2)
    assert lhs == rhs


def test_q_power_inverse():
    ring = QRing(5)
    assert ring.q_power(-3) * ring.q_power(3) == ring.one


def test_q_pochhammer_examples():
    ring = QRing(7)
    assert q_pochhammer(1, 5, 0, ring) == ring.one
    assert q_pochhammer(1, 5, 1, ring) == ring.one - ring.q_power(1)
    # (q^5; q^5)_(p-1) is a unit: its inverse exists
    block = q_pochhammer(5, 5, 6, ring)
    assert block * block.inverse() == ring.one


def test_q_pochhammer_non_unit_factor():
    ring = QRing(7)
    with pytest.raises(NonUnitFactorError):
        q_pochhammer(7, 5, 1, ring)  # 1 - q^7 shares Phi_7 with the modulus


def test_ring_axioms(rng):
    ring = QRing(5)
    elems = [
        ring.from_coeffs([rng.randint(-4, 4) for _ in range(rng.randint(1, 10))])
        for _ in range(6)
    ]
    for u in elems:
        for v in elems:
            assert u * v == v * u
            for w in elems:
                assert (u * v) * w == u * (v * w)
                assert u * (v + w) == u * v + u * w


def test_lifted_inverse_matches_full_euclid(rng):
    # the Newton-lifted inverse agrees with extended Euclid run directly
    # against Phi_p^4 (tractable only at small p)
    for p in (2, 3, 5):
        ring = QRing(p)
        for _ in range(8):
            u = ring.from_coeffs(
                [rng.randint(-4, 4) for _ in range(rng.randint(1, 2 * p))]
            )
            try:
                lifted = u.inverse()
            except NonUnitFactorError:
                continue
            assert lifted == u._inverse_full_euclid()
            assert u * lifted == ring.one


def test_screened_q_pochhammer_is_invertible(rng):
    # any factor the screen lets through is a unit of the ring
    for _ in range(25):
        p = rng.choice([3, 7, 11])
        ring = QRing(p)
        k = rng.randint(0, 5)
        a = rng.randint(-6, 6)
        step = rng.choice([1, 5])
        try:
            value = q_pochhammer(a, step, k, ring)
        except NonUnitFactorError:
            continue
        assert value * value.inverse() == ring.one


def test_ring_inverse_of_non_unit_rejected():
    ring = QRing(5)
    phi_image = ring.element(cyclotomic_poly(5))
    with pytest.raises(NonUnitFactorError):
        phi_image.inverse()


def test_laurent_arithmetic():
    a = LaurentPolynomial.unit_minus_q_power(-2)
    b = LaurentPolynomial.unit_minus_q_power(3)
    product = a * b
    assert product.evaluate(Fraction(2)) == (1 - Fraction(2) ** -2) * (1 - 8)
    total = a + b
    assert total.evaluate(Fraction(3)) == (1 - Fraction(3) ** -2) + (1 - 27)


def test_q_integer_laurent_at_one():
    for n in [-7, -2, -1, 0, 1, 2, 9]:
        assert q_integer_laurent(n).evaluate(1) == n


def test_summand_specializes_to_rational_term():
    # rewriting a q-side summand through q-integers and sending q -> 1
    # reproduces the rational fifth-power summand exactly
    for p, r in [(7, 1), (13, -1)]:
        for k in range(4):
            value = Fraction(10 * k + r)
            for j in range(k):
                value *= (
                    q_integer_laurent(r + 5 * j).evaluate(1)
                    / q_integer_laurent(5 + 5 * j).evaluate(1)
                ) ** 5
            expected = (
                (10 * k + r)
                * pochhammer(Fraction(r, 5), k) ** 5
                / pochhammer(Fraction(1), k) ** 5
            )
            assert value == expected


def test_q_pochhammer_laurent_matches_ring():
    ring = QRing(7)
    for k in range(4):
        laurent = q_pochhammer_laurent(-1, 5, k)
        in_ring = ring.element(laurent.poly) * ring.q_power(laurent.shift)
        assert in_ring == q_pochhammer(-1, 5, k, ring)


def test_conjecture_holds_small_instances():
    for p, r in [(2, 1), (3, -1), (7, 1)]:
        report = verify_q_conjecture(p, r)
        assert report.ring_zero and report.division_zero
        assert report.methods_agree and report.zero


def test_conjecture_with_deeply_negative_r():
    # r = -9 pushes several q-shifted factors to negative exponents,
    # exercising the Laurent shift tracking on both routes
    report = verify_q_conjecture(7, -9)
    assert report.zero and report.methods_agree


def test_conjecture_negative_control():
    report = verify_q_conjecture(7, 1, exponent_twist=1)
    assert report.methods_agree
    assert not report.zero


def test_conjecture_rejects_inadmissible_pairs():
    with pytest.raises(InadmissibleInstanceError):
        verify_q_conjecture(11, -1)  # fails the mod-5 side condition
    with pytest.raises(InadmissibleInstanceError):
        verify_q_conjecture(3, 1)


def test_binomial_factor():
    assert binomial_factor(3).coeffs == (
        Fraction(1), Fraction(0), Fraction(0), Fraction(-1),
    )
    with pytest.raises(ValueError):
        binomial_factor(0)
