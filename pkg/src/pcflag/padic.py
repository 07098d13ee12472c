"""Finite-precision arithmetic in unramified extensions of Z_p.

Cyclotomic polynomials are factored mod p (Cantor-Zassenhaus), factors
are Hensel-lifted to Z/p^k, and cyclotomic matrix entries are embedded
into the resulting quotient rings. An element lies in Z_p exactly when
all coordinates above index 0 vanish.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi
from .errors import ConductorMismatch, NoEmbedding
from .linalg import CycMatrix

DEFAULT_PRECISION = 8


# -- polynomial helpers over Z/m (coefficients low to high) -------------

def _ptrim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b, m):
    n = max(len(a), len(b))
    return _ptrim([
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
        for i in range(n)
    ])


def _psub(a, b, m):
    n = max(len(a), len(b))
    return _ptrim([
        ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
        for i in range(n)
    ])


def _pmul(a, b, m):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _ptrim(out)


def _pdivmod(num, den, m):
    """Division by a polynomial with unit leading coefficient, mod m."""
    num = list(num)
    if len(num) < len(den):
        return [0], _ptrim(num)
    inv_lead = pow(den[-1], -1, m)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = (num[i + len(den) - 1] * inv_lead) % m
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] = (num[i + j] - c * d) % m
    return _ptrim(q), _ptrim(num[: len(den) - 1] or [0])


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b != [0]:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    # make monic
    if a != [0]:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _ppowmod(base, exp, mod_poly, m):
    result = [1]
    base = _pdivmod(base, mod_poly, m)[1]
    while exp:
        if exp & 1:
            result = _pdivmod(_pmul(result, base, m), mod_poly, m)[1]
        base = _pdivmod(_pmul(base, base, m), mod_poly, m)[1]
        exp >>= 1
    return result


def _pext_gcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g (monic) over F_p."""
    r0, r1 = _ptrim(list(a)), _ptrim(list(b))
    s0, s1 = [1], [0]
    t0, t1 = [0], [1]
    while r1 != [0]:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    scale = lambda poly: _ptrim([(c * inv) % p for c in poly])
    return scale(r0), scale(s0), scale(t0)


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError("not a unit")
    x = a % n
    k = 1
    while x != 1:
        x = (x * a) % n
        k += 1
    return k


def factor_cyclotomic_mod_p(n: int, p: int) -> list[tuple[int, ...]]:
    """All monic irreducible factors of Phi_n over F_p, sorted.

    Requires gcd(n, p) = 1; the factors all have degree f = ord_n(p).
    """
    if gcd(n, p) != 1:
        raise ValueError("p must not divide the conductor")
    phi = [c % p for c in cyclotomic_polynomial(n)]
    f = multiplicative_order(p, n)
    degree = euler_phi(n)
    if f == degree:
        return [tuple(_ptrim(list(phi)))]
    factors = [phi]
    rng = random.Random(2024)  # deterministic factor ordering
    done: list[list[int]] = []
    q = p ** f
    while factors:
        poly = factors.pop()
        if len(poly) - 1 == f:
            done.append(poly)
            continue
        # equal-degree splitting
        while True:
            if p == 2:
                # trace map splitting over F_2
                a = [rng.randrange(2) for _ in range(len(poly) - 1)]
                a = _ptrim(a) if _ptrim(list(a)) != [0] else [1, 1]
                tr = [0]
                x = list(a)
                for _ in range(f):
                    tr = _padd(tr, x, 2)
                    x = _ppowmod(x, 2, poly, 2)
                g = _pgcd(poly, tr, 2)
            else:
                a = [rng.randrange(p) for _ in range(len(poly) - 1)]
                if _ptrim(list(a)) == [0]:
                    continue
                b = _ppowmod(a, (q - 1) // 2, poly, p)
                g = _pgcd(poly, _psub(b, [1], p), p)
            if g != [1] and len(g) < len(poly):
                other = _pdivmod(poly, g, p)[0]
                factors.append(g)
                factors.append(other)
                break
    return sorted(tuple(d) for d in done)


def hensel_lift_factor(g1, n: int, p: int, k: int) -> tuple[int, ...]:
    """Lift a factor g1 of Phi_n mod p to a factor of Phi_n mod p^k."""
    phi_poly = [c % p for c in cyclotomic_polynomial(n)]
    h1 = _pdivmod(phi_poly, list(g1), p)[0]
    if _ptrim(list(h1)) == [1]:
        # g1 is the whole polynomial: lift is Phi_n mod p^k itself
        return tuple(c % p ** k for c in cyclotomic_polynomial(n))
    _, s, t = _pext_gcd(list(g1), h1, p)
    g, h = list(g1), h1
    e = 1
    while e < k:
        e2 = min(2 * e, k)
        m2 = p ** e2
        f_mod = [c % m2 for c in cyclotomic_polynomial(n)]
        err = _psub(f_mod, _pmul(g, h, m2), m2)
        q, r = _pdivmod(_pmul(s, err, m2), h, m2)
        g = _padd(g, _padd(_pmul(t, err, m2), _pmul(q, g, m2), m2), m2)
        h = _padd(h, r, m2)
        # refresh Bezout data: b = s*g + t*h - 1
        b = _psub(_padd(_pmul(s, g, m2), _pmul(t, h, m2), m2), [1], m2)
        c, d = _pdivmod(_pmul(s, b, m2), h, m2)
        s = _psub(s, d, m2)
        t = _psub(t, _padd(_pmul(t, b, m2), _pmul(c, g, m2), m2), m2)
        e = e2
    mk = p ** k
    check = _psub([c % mk for c in cyclotomic_polynomial(n)], _pmul(g, h, mk), mk)
    assert check == [0], "Hensel lifting failed to converge"
    assert len(g) == len(g1) and g[-1] == 1, "lifted factor lost monicity"
    return tuple(g)


def lift_cyclotomic_factor(p: int, n: int, k: int) -> tuple[int, ...]:
    """One Hensel-lifted irreducible factor of Phi_n, mod p^k.

    Deterministic: the lexicographically first factor mod p is lifted.
    """
    if k < 1:
        raise ValueError("precision must be at least 1")
    g1 = factor_cyclotomic_mod_p(n, p)[0]
    if k == 1:
        return g1
    return hensel_lift_factor(g1, n, p, k)


# -- elements of the unramified extension -------------------------------

@dataclass(frozen=True)
class UnramifiedPadic:
    """Element of Z_p[x]/(g(x)) known modulo p^k."""

    p: int
    k: int
    modulus: tuple[int, ...]  # monic, degree f, coefficients mod p^k
    coords: tuple[int, ...]  # length f, each in [0, p^k)

    @property
    def residue_degree(self) -> int:
        return len(self.modulus) - 1

    def _check(self, other: "UnramifiedPadic"):
        if (self.p, self.k, self.modulus) != (other.p, other.k, other.modulus):
            raise ValueError("incompatible unramified elements")

    def __add__(self, other):
        self._check(other)
        m = self.p ** self.k
        return UnramifiedPadic(
            self.p, self.k, self.modulus,
            tuple((a + b) % m for a, b in zip(self.coords, other.coords)),
        )

    def __mul__(self, other):
        self._check(other)
        m = self.p ** self.k
        prod = _pmul(list(self.coords), list(other.coords), m)
        red = _pdivmod(prod, list(self.modulus), m)[1]
        red = red + [0] * (self.residue_degree - len(red))
        return UnramifiedPadic(self.p, self.k, self.modulus, tuple(red))

    def __neg__(self):
        m = self.p ** self.k
        return UnramifiedPadic(
            self.p, self.k, self.modulus,
            tuple((-a) % m for a in self.coords),
        )

    def in_zp(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def zp_value(self) -> int:
        if not self.in_zp():
            raise ValueError("element does not lie in Z_p")
        return self.coords[0]

    def reduce_precision(self, k2: int) -> "UnramifiedPadic":
        if k2 > self.k:
            raise ValueError("cannot raise precision")
        m = self.p ** k2
        return UnramifiedPadic(
            self.p, k2, tuple(c % m for c in self.modulus),
            tuple(c % m for c in self.coords),
        )


def embed_cyclotomic(
    x: CyclotomicNumber, modulus: tuple[int, ...], p: int, k: int
) -> UnramifiedPadic:
    """Embed via zeta |-> x in Z/p^k[x]/(modulus).

    Coefficient denominators must be prime to p; NoEmbedding otherwise.
    """
    m = p ** k
    f = len(modulus) - 1
    acc = [0] * f
    power = [1]  # x^i mod modulus
    for i, c in enumerate(x.coeffs):
        if c:
            if c.denominator % p == 0:
                raise NoEmbedding(
                    f"coefficient {c} is not p-integral at p={p}"
                )
            val = (c.numerator * pow(c.denominator, -1, m)) % m
            for j, t in enumerate(power):
                acc[j] = (acc[j] + val * t) % m
        if i + 1 < len(x.coeffs):
            power = _pdivmod(_pmul(power, [0, 1], m), list(modulus), m)[1]
    return UnramifiedPadic(p, k, modulus, tuple(acc))


@dataclass(frozen=True)
class EmbeddingResult:
    p: int
    k: int
    modulus: tuple[int, ...]
    matrices: tuple[tuple[tuple[int, ...], ...], ...]  # entries mod p^k


def embed_matrices(
    mats: list[CycMatrix], p: int, k: int = DEFAULT_PRECISION
) -> EmbeddingResult:
    """Embed all matrix entries into Z_p, trying every factor choice.

    Each irreducible factor of Phi_n mod p is one ring embedding of
    Q(zeta_n) into the unramified extension; success requires a single
    choice sending every entry of every matrix into Z_p.
    """
    conductors = {m.conductor for m in mats}
    if len(conductors) != 1:
        raise ConductorMismatch(f"matrices carry conductors {sorted(conductors)}")
    n = conductors.pop()
    if gcd(n, p) != 1:
        raise ConductorMismatch(f"conductor {n} not coprime to p={p}")
    failures = []
    for g1 in factor_cyclotomic_mod_p(n, p):
        modulus = hensel_lift_factor(g1, n, p, k) if k > 1 else g1
        embedded = [
            [[embed_cyclotomic(e, modulus, p, k) for e in row] for row in m.entries]
            for m in mats
        ]
        if all(e.in_zp() for m in embedded for row in m for e in row):
            return EmbeddingResult(
                p=p,
                k=k,
                modulus=modulus,
                matrices=tuple(
                    tuple(tuple(e.zp_value() for e in row) for row in m)
                    for m in embedded
                ),
            )
        failures.append(modulus)
    raise NoEmbedding(
        f"no factor of Phi_{n} mod {p} places all entries in Z_{p} "
        f"({len(failures)} embedding(s) tried)"
    )
