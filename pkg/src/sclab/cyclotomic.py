"""Arithmetic in Q(zeta_n) for n in {1, 4, 5}, as Q[x] modulo the n-th
cyclotomic polynomial.

Order 4 supplies the square root of -1, order 5 a primitive fifth root of
unity; order 1 is plain Q kept in the same shape so generic series code
does not special-case it.  Elements are dense coefficient vectors of
length phi(n) over Fraction.  Only these three orders exist here; there is
no general number-field machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import as_rational

# Cyclotomic moduli, low degree first:  x-1,  x^2+1,  x^4+x^3+x^2+x+1.
_MODULUS = {
    1: (Fraction(-1), Fraction(1)),
    4: (Fraction(1), Fraction(0), Fraction(1)),
    5: (Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1)),
}
_DEGREE = {1: 1, 4: 2, 5: 4}

SUPPORTED_ORDERS = tuple(sorted(_MODULUS))


class OrderMismatchError(ValueError):
    """Raised when two elements from different cyclotomic orders are mixed."""


def _reduce(order: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    mod = _MODULUS[order]
    deg = _DEGREE[order]
    for i in range(len(coeffs) - 1, deg - 1, -1):
        lead = coeffs[i]
        if lead:
            coeffs[i] = Fraction(0)
            for j in range(deg):
                coeffs[i - deg + j] -= lead * mod[j]
    coeffs = coeffs[:deg] + [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs[:deg])


class CycElement:
    """An element of Q[x]/Phi_n(x), n in {1, 4, 5}."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order not in _MODULUS:
            raise ValueError(f"unsupported cyclotomic order {order}")
        object.__setattr__(self, "order", order)
        vec = [as_rational(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _reduce(order, vec))

    def __setattr__(self, name, value):  # immutable value type
        raise AttributeError("CycElement is immutable")

    @classmethod
    def from_rational(cls, order: int, value) -> "CycElement":
        return cls(order, [as_rational(value)])

    @classmethod
    def zeta(cls, order: int) -> "CycElement":
        """The residue class of x: i for order 4, a fifth root for order 5."""
        if order == 1:
            return cls(order, [Fraction(1)])
        return cls(order, [Fraction(0), Fraction(1)])

    @classmethod
    def zero(cls, order: int) -> "CycElement":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CycElement":
        return cls(order, [Fraction(1)])

    # -- coercion ---------------------------------------------------------

    def _wrap(self, other) -> "CycElement":
        if isinstance(other, CycElement):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot mix orders {self.order} and {other.order}"
                )
            return other
        return CycElement(self.order, [as_rational(other)])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        return CycElement(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return CycElement(self.order, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = CycElement.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "CycElement":
        """Multiplicative inverse via extended Euclid against Phi_n over Q."""
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        mod = list(_MODULUS[self.order])
        r0, s0 = mod, [Fraction(0)]
        r1, s1 = list(self.coeffs), [Fraction(1)]
        while _poly_degree(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # Phi_n is irreducible, so the gcd is a nonzero constant.
        g = r1[0]
        return CycElement(self.order, [c / g for c in s1])

    # -- predicates ---------------------------------------------------------

    def __eq__(self, other):
        try:
            other = self._wrap(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        """True when every coefficient beyond the constant term is zero."""
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"element is not rational: {self!r}")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycElement(order={self.order}, coeffs={self.coeffs})"


def cyc_mul(u: CycElement, v: CycElement) -> CycElement:
    """Product of two elements of the same order, reduced mod Phi_n."""
    return u * v


def cyc_inverse(u: CycElement) -> CycElement:
    """Inverse of a nonzero element; raises ZeroDivisionError on zero."""
    return u.inverse()


def root_power_sum_check(n: int) -> bool:
    """Check that 1 + x + x^2 + x^3 + x^4 vanishes in Q[x]/Phi_5.

    Only n = 5 is meaningful; other orders are rejected.
    """
    if n != 5:
        raise ValueError("the vanishing power sum is specific to order 5")
    total = CycElement.zero(5)
    z = CycElement.zeta(5)
    for e in range(5):
        total = total + z ** e
    return total.is_zero


# -- dense polynomial helpers over Fraction lists ---------------------------


def _poly_degree(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_mul(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(u) + len(v) - 1 if u and v else 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i + j] += a * b
    return out


def _poly_sub(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(u), len(v))
    for i, a in enumerate(u):
        out[i] += a
    for i, b in enumerate(v):
        out[i] -= b
    return out


def _poly_divmod(u: list[Fraction], v: list[Fraction]):
    dv = _poly_degree(v)
    if dv < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(u)
    du = _poly_degree(rem)
    quo = [Fraction(0)] * max(du - dv + 1, 1)
    while du >= dv:
        coef = rem[du] / v[dv]
        quo[du - dv] = coef
        for i in range(dv + 1):
            rem[du - dv + i] -= coef * v[i]
        du = _poly_degree(rem)
    return quo, rem
