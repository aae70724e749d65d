"""Polynomial arithmetic over Q, the quotient ring Q[q]/(Phi_p(q)^4),
q-integers and q-shifted factorials, and the q-side analogue checker for
the fifth-power vanishing claim.

Divisibility by Phi_p^4 is tested over Q[q]; Phi_p is monic, so for
integer polynomials this coincides with divisibility over Z[q] and no
content bookkeeping is needed.  Negative powers of q are legal everywhere:
q is a unit in the quotient ring, and the polynomial route tracks a
Laurent shift that is a unit as well.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .rationals import as_rational, is_prime


class NonUnitFactorError(ValueError):
    """A q-shifted factorial factor is not invertible in the ring."""


class QPolynomial:
    """Dense polynomial over Q; zero is the empty coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        vec = [as_rational(c) for c in coeffs]
        while vec and vec[-1] == 0:
            vec.pop()
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "QPolynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((Fraction(0),) * degree + (as_rational(coefficient),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero or other.is_zero:
            return QPolynomial.zero()
        small, big = self.coeffs, other.coeffs
        if len(small) > len(big):
            small, big = big, small
        out = [Fraction(0)] * (len(small) + len(big) - 1)
        for i, a in enumerate(small):
            if a:
                for j, b in enumerate(big):
                    if b:
                        out[i + j] += a * b
        return QPolynomial(out)

    def scale(self, factor) -> "QPolynomial":
        factor = as_rational(factor)
        return QPolynomial([c * factor for c in self.coeffs])

    def shift(self, amount: int) -> "QPolynomial":
        """Multiply by q^amount (amount >= 0)."""
        if amount < 0:
            raise ValueError("use LaurentPolynomial for negative shifts")
        if self.is_zero:
            return self
        return QPolynomial((Fraction(0),) * amount + self.coeffs)

    def __divmod__(self, divisor: "QPolynomial"):
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) <= dv:
            return QPolynomial.zero(), QPolynomial(rem)
        # divisors here are often sparse (binomial powers); skip their zeros
        support = [(i, c) for i, c in enumerate(divisor.coeffs[:-1]) if c]
        quo = [Fraction(0)] * (len(rem) - dv)
        for top in range(len(rem) - 1, dv - 1, -1):
            c = rem[top]
            if not c:
                continue
            c /= lead
            quo[top - dv] = c
            rem[top] = Fraction(0)
            base = top - dv
            for i, dcoef in support:
                rem[base + i] -= c * dcoef
        return QPolynomial(quo), QPolynomial(rem)

    def __mod__(self, divisor: "QPolynomial") -> "QPolynomial":
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        quo, rem = divmod(self, divisor)
        if not rem.is_zero:
            raise ValueError("division is not exact")
        return quo

    def evaluate(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"


def cyclotomic_poly(p: int) -> QPolynomial:
    """Phi_p(q) = 1 + q + ... + q^(p-1) for prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return QPolynomial((Fraction(1),) * p)


def binomial_factor(exponent: int) -> QPolynomial:
    """The polynomial 1 - q^e for e >= 1."""
    if exponent < 1:
        raise ValueError("exponent must be positive")
    return QPolynomial(
        (Fraction(1),) + (Fraction(0),) * (exponent - 1) + (Fraction(-1),)
    )


# ---------------------------------------------------------------------------
# Laurent polynomials: q^shift * poly, for the clear-denominator route
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentPolynomial:
    poly: QPolynomial
    shift: int = 0

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(QPolynomial.one(), 0)

    @classmethod
    def q_power(cls, exponent: int) -> "LaurentPolynomial":
        return cls(QPolynomial.one(), exponent)

    @classmethod
    def unit_minus_q_power(cls, exponent: int) -> "LaurentPolynomial":
        """1 - q^e for any integer e (including e <= 0)."""
        if exponent == 0:
            return cls(QPolynomial.zero(), 0)
        if exponent > 0:
            return cls(binomial_factor(exponent), 0)
        # 1 - q^e = -q^e (1 - q^-e)
        return cls(-binomial_factor(-exponent), exponent)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial(self.poly * other.poly, self.shift + other.shift)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        lo = min(self.shift, other.shift)
        return LaurentPolynomial(
            self.poly.shift(self.shift - lo) + other.poly.shift(other.shift - lo),
            lo,
        )

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + LaurentPolynomial(-other.poly, other.shift)

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def evaluate(self, x) -> Fraction:
        x = as_rational(x)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        return self.poly.evaluate(x) * x ** self.shift


def q_integer_laurent(n: int) -> LaurentPolynomial:
    """[n] as a Laurent polynomial: 1 + q + ... + q^(n-1), and for n < 0
    the identity [n] = -q^n [-n].  Evaluates to n at q = 1."""
    if n == 0:
        return LaurentPolynomial(QPolynomial.zero(), 0)
    if n > 0:
        return LaurentPolynomial(QPolynomial((Fraction(1),) * n), 0)
    return LaurentPolynomial(-QPolynomial((Fraction(1),) * (-n)), n)


def q_pochhammer_laurent(a_exponent: int, step: int, k: int) -> LaurentPolynomial:
    """(q^a; q^step)_k as a Laurent polynomial."""
    out = LaurentPolynomial.one()
    for j in range(k):
        out = out * LaurentPolynomial.unit_minus_q_power(a_exponent + step * j)
    return out


# ---------------------------------------------------------------------------
# The quotient ring Q[q] / Phi_p(q)^4
# ---------------------------------------------------------------------------


class QRing:
    """Q[q] modulo the fourth power of the p-th cyclotomic polynomial."""

    def __init__(self, p: int, power: int = 4):
        if power < 1:
            raise ValueError("power must be positive")
        self.p = p
        self.power = power
        phi = cyclotomic_poly(p)
        modulus = QPolynomial.one()
        for _ in range(power):
            modulus = modulus * phi
        self.modulus = modulus
        self.degree_bound = modulus.degree
        # q is a unit: the modulus has constant term 1, so
        # q * (-(modulus - 1)/q) = 1 - modulus = 1 in the ring.
        inv_coeffs = [-c for c in modulus.coeffs[1:]]
        self._q_inverse = QRingElement(self, QPolynomial(inv_coeffs))

    def element(self, poly: QPolynomial) -> "QRingElement":
        return QRingElement(self, poly % self.modulus)

    def from_coeffs(self, coeffs) -> "QRingElement":
        return self.element(QPolynomial(coeffs))

    @property
    def zero(self) -> "QRingElement":
        return QRingElement(self, QPolynomial.zero())

    @property
    def one(self) -> "QRingElement":
        return QRingElement(self, QPolynomial.one())

    def q_power(self, exponent: int) -> "QRingElement":
        """q^e as a ring element, for any integer e."""
        if exponent >= 0:
            return self.element(QPolynomial.monomial(exponent))
        return self._q_inverse ** (-exponent)

    def __eq__(self, other):
        return (
            isinstance(other, QRing)
            and other.p == self.p
            and other.power == self.power
        )

    def __hash__(self):
        return hash((self.p, self.power))

    def __repr__(self):
        return f"QRing(p={self.p}, power={self.power})"


class QRingElement:
    __slots__ = ("ring", "residue")

    def __init__(self, ring: QRing, residue: QPolynomial):
        if residue.degree >= ring.degree_bound:
            residue = residue % ring.modulus
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "residue", residue)

    def __setattr__(self, name, value):
        raise AttributeError("QRingElement is immutable")

    def _wrap(self, other) -> "QRingElement":
        if isinstance(other, QRingElement):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        return self.ring.from_coeffs([as_rational(other)])

    def __add__(self, other):
        other = self._wrap(other)
        return QRingElement(self.ring, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self):
        return QRingElement(self.ring, -self.residue)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        return QRingElement(self.ring, (self.residue * other.residue) % self.ring.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.ring.one
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "QRingElement":
        """Inverse from extended Euclid against the radical Phi_p, lifted
        through the nilpotent part by Newton steps.

        An element is a unit mod Phi_p^e iff it is one mod Phi_p, and with
        x inverse mod Phi_p the error 1 - a*x squares with each update
        x <- x(2 - a*x), so ceil(log2(e)) steps reach the full modulus.
        Running Euclid on the degree p-1 radical instead of the full
        modulus sidesteps the rational coefficient blowup of long
        remainder sequences.
        """
        phi = cyclotomic_poly(self.ring.p)
        seed = _euclid_inverse(self.residue % phi, phi)
        x = QRingElement(self.ring, seed)
        for _ in range((self.ring.power - 1).bit_length()):
            x = x * (2 - self * x)
        return x

    def _inverse_full_euclid(self) -> "QRingElement":
        """Reference route: extended Euclid straight against Phi_p^e.
        Exponentially slower coefficient growth; kept to pin the lifted
        inverse in tests."""
        return QRingElement(
            self.ring, _euclid_inverse(self.residue, self.ring.modulus)
        )

    def __eq__(self, other):
        try:
            other = self._wrap(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        return hash((self.ring, self.residue))

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    def __repr__(self):
        return f"QRingElement({self.ring!r}, {self.residue!r})"


def _euclid_inverse(value: QPolynomial, modulus: QPolynomial) -> QPolynomial:
    """s with s*value = gcd (a nonzero constant) mod modulus, normalized;
    NonUnitFactorError when the gcd is not constant."""
    r0, s0 = modulus, QPolynomial.zero()
    r1, s1 = value, QPolynomial.one()
    while not r1.is_zero and r1.degree > 0:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r1.is_zero:
        raise NonUnitFactorError("element shares a factor with the ring modulus")
    return s1.scale(1 / r1.coeffs[0]) % modulus


def q_integer(n: int, ring: QRing) -> "QRingElement":
    """[n] = (1 - q^n)/(1 - q) in the ring; [n] = -q^n [-n] for n < 0."""
    if n >= 0:
        return ring.from_coeffs((Fraction(1),) * n)
    return -(ring.q_power(n) * q_integer(-n, ring))


def q_pochhammer(a_exponent: int, step: int, k: int, ring: QRing) -> "QRingElement":
    """(q^a; q^step)_k = prod_{j<k} (1 - q^(a + step*j)) in the ring.

    Each factor must be a unit, which for the Phi_p^4 modulus means p must
    not divide a + step*j; otherwise NonUnitFactorError is raised.
    """
    if k < 0:
        raise ValueError("length must be nonnegative")
    if step < 1:
        raise ValueError("step must be positive")
    out = ring.one
    for j in range(k):
        e = a_exponent + step * j
        if e % ring.p == 0:
            raise NonUnitFactorError(
                f"factor 1 - q^{e} is not a unit: {ring.p} divides {e}"
            )
        out = out * (ring.one - ring.q_power(e))
    return out


# ---------------------------------------------------------------------------
# The q-side analogue of the fifth-power vanishing claim
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QAnalogueReport:
    p: int
    r: int
    exponent_twist: int
    ring_zero: bool
    division_zero: bool
    elapsed_ms: float

    @property
    def methods_agree(self) -> bool:
        return self.ring_zero == self.division_zero

    @property
    def zero(self) -> bool:
        return self.ring_zero and self.division_zero


def verify_q_conjecture(p: int, r: int, exponent_twist: int = 0) -> QAnalogueReport:
    """Decide whether sum_{k<p} [10k+r] (q^r;q^5)_k^5 (q^5;q^5)_k^-5
    q^(5(3-r)k/2) vanishes in Q[q]/(Phi_p^4), by two independent routes:

    * directly in the quotient ring, and
    * clearing denominators to a Laurent polynomial and testing exact
      divisibility by Phi_p^4.

    ``exponent_twist`` adds twist*k to the power of q in term k; the honest
    statement is twist 0, and a nonzero twist is the built-in negative
    control (it must break the divisibility).
    """
    from .claims import InadmissibleInstanceError, admissible

    adm = admissible("thm1", p, r)
    if not adm:
        raise InadmissibleInstanceError(f"(q-analogue, p={p}, r={r}): {adm.reason}")
    if p == 5:
        raise InadmissibleInstanceError("p = 5 collides with the step of the q-shifted factorials")
    started = time.perf_counter()
    exponent_num = 5 * (3 - r)
    assert exponent_num % 2 == 0  # r is odd for admissible instances
    estep = exponent_num // 2

    # Route 1: the quotient ring.  (q^5;q^5)_k^-5 is rebuilt as the suffix
    # product (prod_{k<j<p} (1-q^(5j)))^5 times one global inverse, so the
    # extended Euclid runs once rather than once per term.
    ring = QRing(p)
    full_block = q_pochhammer(5, 5, p - 1, ring) ** 5
    global_inverse = full_block.inverse()
    suffix = [ring.one] * (p + 1)  # suffix[k] = prod_{j=k+1}^{p-1} (1-q^(5j))^5
    for k in range(p - 2, -1, -1):
        step_factor = (ring.one - ring.q_power(5 * (k + 1))) ** 5
        suffix[k] = suffix[k + 1] * step_factor
    total = ring.zero
    rising5 = ring.one  # (q^r; q^5)_k^5, maintained incrementally
    for k in range(p):
        if k:
            rising5 = rising5 * (ring.one - ring.q_power(r + 5 * (k - 1))) ** 5
        term = (
            q_integer(10 * k + r, ring)
            * ring.q_power(estep * k + exponent_twist * k)
            * rising5
            * suffix[k]
            * global_inverse
        )
        total = total + term
    ring_zero = total.is_zero

    # Route 2: clear denominators.  With U_k = (q^r;q^5)_k^5 S_k^5 (S_k the
    # polynomial suffix product) and [n] = (1-q^n)/(1-q), the sum vanishes
    # mod Phi_p^4 iff  T = sum_k (1-q^(10k+r)) U_k q^(estep*k)  does, since
    # 1-q, q and the cleared block are all units.  U_k is maintained by one
    # exact binomial division and one binomial multiplication per step.
    phi4 = ring.modulus  # Phi_p^4 over Q[q]
    u_poly = QPolynomial.one()
    for j in range(1, p):
        u_poly = _mul_binomial_power(u_poly, 5 * j, 5)
    u_shift = 0
    total_l = LaurentPolynomial(QPolynomial.zero(), 0)
    for k in range(p):
        if k:
            u_poly = u_poly.exact_div(_binomial_power(5 * k, 5))
            e = r + 5 * (k - 1)
            if e >= 0:
                u_poly = _mul_binomial_power(u_poly, e, 5)
            else:
                u_poly = _mul_binomial_power(u_poly, -e, 5).scale(-1)
                u_shift += 5 * e
        weight = LaurentPolynomial.unit_minus_q_power(10 * k + r)
        term_l = (
            weight
            * LaurentPolynomial(u_poly, u_shift)
            * LaurentPolynomial.q_power(estep * k + exponent_twist * k)
        )
        total_l = total_l + term_l
    division_zero = (total_l.poly % phi4).is_zero

    elapsed = (time.perf_counter() - started) * 1000.0
    return QAnalogueReport(
        p=p,
        r=r,
        exponent_twist=exponent_twist,
        ring_zero=ring_zero,
        division_zero=division_zero,
        elapsed_ms=elapsed,
    )


def _binomial_power(exponent: int, power: int) -> QPolynomial:
    out = QPolynomial.one()
    for _ in range(power):
        out = out * binomial_factor(exponent)
    return out


def _mul_binomial_power(poly: QPolynomial, exponent: int, power: int) -> QPolynomial:
    return poly * _binomial_power(exponent, power)
