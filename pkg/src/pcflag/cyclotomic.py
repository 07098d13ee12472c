"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1)
modulo the n-th cyclotomic polynomial, with Fraction coefficients.
No floating point is used anywhere.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd, lcm


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (low-to-high coefficients)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0, "non-exact integer polynomial division"
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low to high, monic of degree phi(n)."""
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by all Phi_d for proper divisors d of n
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert rem == [0]
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _top_power_row(n: int) -> tuple[int, ...]:
    """x^phi(n) mod Phi_n as an integer coefficient vector."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    return tuple(-c for c in mod[:phi])


def _reduce_mod_cyclotomic(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = euler_phi(n)
    if len(coeffs) <= phi:
        return tuple(coeffs) + (Fraction(0),) * (phi - len(coeffs))
    row = _top_power_row(n)
    work = list(coeffs)
    # substitute x^j = x^(j-phi) * (x^phi mod Phi_n), top degree first;
    # every contribution lands strictly below j, so one pass suffices
    for j in range(len(work) - 1, phi - 1, -1):
        c = work[j]
        if c:
            work[j] = Fraction(0)
            base = j - phi
            for i, t in enumerate(row):
                if t:
                    work[base + i] += c * t
    return tuple(work[:phi])


def _zeta_power_coords(n: int, k: int) -> tuple[Fraction, ...]:
    """Coordinates of zeta_n^k in the power basis."""
    k %= n
    return _reduce_mod_cyclotomic([Fraction(0)] * k + [Fraction(1)], n)


class CyclotomicNumber:
    """An element of Q(zeta_n), immutable and hashable.

    Hashing is per-conductor: equal values stored at different conductors
    hash differently, so dict keys must share a conductor (the group
    closure code guarantees this).
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs) -> None:
        phi = euler_phi(conductor)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = list(_reduce_mod_cyclotomic(cs, conductor))
        else:
            cs += [Fraction(0)] * (phi - len(cs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", hash((conductor, self.coeffs)))

    def __setattr__(self, *args):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(q, conductor: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(conductor, [Fraction(q)])

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(n, _zeta_power_coords(n, power))

    @staticmethod
    def zero(conductor: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(conductor, [])

    @staticmethod
    def one(conductor: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(conductor, [Fraction(1)])

    # -- conductor handling -------------------------------------------
    def promote(self, n: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_n); requires conductor | n."""
        if n == self.conductor:
            return self
        if n % self.conductor != 0:
            from .errors import ConductorMismatch

            raise ConductorMismatch(
                f"cannot promote conductor {self.conductor} into {n}"
            )
        step = n // self.conductor
        phi = euler_phi(n)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(_zeta_power_coords(n, i * step)):
                    out[j] += c * t
        return CyclotomicNumber(n, out)

    @staticmethod
    def _common(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        if a.conductor == b.conductor:
            return a, b
        n = lcm(a.conductor, b.conductor)
        return a.promote(n), b.promote(n)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.conductor, [Fraction(other)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        return CyclotomicNumber(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(self, other)
        n = a.conductor
        la, lb = a.coeffs, b.coeffs
        conv = [Fraction(0)] * (len(la) + len(lb) - 1)
        for i, x in enumerate(la):
            if x:
                for j, y in enumerate(lb):
                    if y:
                        conv[i + j] += x * y
        return CyclotomicNumber(n, _reduce_mod_cyclotomic(conv, n))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        n = self.conductor
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        inv = _poly_ext_gcd_inverse(list(self.coeffs), mod)
        return CyclotomicNumber(n, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.coeffs[0]

    def multiplicative_order(self, cap: int = 10000) -> int:
        """Order as a root of unity; raises if not finite within cap."""
        x = self
        one = CyclotomicNumber.one(self.conductor)
        for k in range(1, cap + 1):
            if x == one:
                return k
            x = x * self
        raise ValueError("element has no small multiplicative order")

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z{self.conductor}")
            else:
                terms.append(f"{c}*z{self.conductor}^{i}")
        return " + ".join(terms) if terms else "0"


def _poly_ext_gcd_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo mod over Q via extended Euclid."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def pdivmod(num, den):
        num = list(num)
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
        inv_lead = 1 / den[-1]
        for i in range(len(num) - len(den), -1, -1):
            c = num[i + len(den) - 1] * inv_lead
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
        return trim(q), trim(num)

    r0, r1 = trim(list(mod)), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = pdivmod(r0, r1)
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        s_new = [
            (s0[i] if i < len(s0) else Fraction(0))
            - (prod[i] if i < len(prod) else Fraction(0))
            for i in range(max(len(s0), len(prod), 1))
        ]
        r0, r1 = r1, r
        s0, s1 = s1, trim(s_new)
    # r0 is the gcd, a nonzero constant since mod is irreducible over Q
    assert len(r0) == 1 and r0[0] != 0
    return [c / r0[0] for c in s0]


# -- serialization ------------------------------------------------------

def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def cyclotomic_to_json(x: CyclotomicNumber) -> dict:
    return {"conductor": x.conductor, "coeffs": [format_rational(c) for c in x.coeffs]}


def cyclotomic_from_json(obj: dict) -> CyclotomicNumber:
    return CyclotomicNumber(obj["conductor"], [parse_rational(c) for c in obj["coeffs"]])
