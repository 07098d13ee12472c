"""Diagonal operator algebra on the homology of the p-completed BS^1.

H_*(P) has one generator x_j in each even degree 2j, and every operator
in play (the root-of-unity action psi, the idempotents e_s, the two
transfer images) is diagonal. Operators are stored as coefficient
functions j -> c_j mod p^k; composition is pointwise multiplication, so
all identities are checked exactly at full precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidL, NotPrimitiveRoot
from .padic import DEFAULT_PRECISION
from .pcompact import GradedRanks


@dataclass(frozen=True)
class GradedOperator:
    p: int
    k: int  # values known mod p^k
    coeffs: tuple  # c_j for generators x_j in degree 2j, 0 <= j <= N

    @property
    def degree_bound(self) -> int:
        return 2 * (len(self.coeffs) - 1)

    def _check(self, other: "GradedOperator"):
        if (self.p, self.k, len(self.coeffs)) != (
            other.p,
            other.k,
            len(other.coeffs),
        ):
            raise ValueError("operator shapes differ")

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        m = self.p ** self.k
        return GradedOperator(
            self.p, self.k,
            tuple((a * b) % m for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        m = self.p ** self.k
        return GradedOperator(
            self.p, self.k,
            tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)),
        )

    def scale(self, c: int) -> "GradedOperator":
        m = self.p ** self.k
        return GradedOperator(
            self.p, self.k, tuple((c * a) % m for a in self.coeffs)
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_identity(self) -> bool:
        return all(c == 1 for c in self.coeffs)


def identity_operator(p: int, n_max: int, k: int = DEFAULT_PRECISION) -> GradedOperator:
    return GradedOperator(p, k, (1,) * (n_max + 1))


def zero_operator(p: int, n_max: int, k: int = DEFAULT_PRECISION) -> GradedOperator:
    return GradedOperator(p, k, (0,) * (n_max + 1))


def teichmuller(a: int, p: int, k: int = DEFAULT_PRECISION) -> int:
    """Teichmuller lift of a mod p to p^k: iterate x -> x^p to the fixpoint."""
    m = p ** k
    x = a % m
    for _ in range(k + 1):
        x = pow(x, p, m)
    assert pow(x, p, m) == x
    return x


def primitive_root_lift(p: int, k: int = DEFAULT_PRECISION) -> int:
    """A (p-1)st root of unity of exact order p-1 mod p^k."""
    for g in range(2, p):
        if _order_mod(g, p) == p - 1:
            return teichmuller(g, p, k)
    raise NotPrimitiveRoot(f"no primitive root mod {p}")


def _order_mod(a: int, p: int) -> int:
    x = a % p
    for k in range(1, p):
        if x == 1:
            return k
        x = (x * a) % p
    return 0


def psi(p: int, zeta: int, n_max: int, k: int = DEFAULT_PRECISION) -> GradedOperator:
    """Action of multiplication by zeta on H_*(P): x_j -> zeta^j x_j."""
    m = p ** k
    if pow(zeta, p - 1, m) != 1:
        raise NotPrimitiveRoot(f"{zeta} is not a (p-1)st root of unity mod {p}^{k}")
    for div in range(1, p - 1):
        if (p - 1) % div == 0 and div < p - 1 and pow(zeta, div, m) == 1:
            raise NotPrimitiveRoot(f"{zeta} has order < p-1 mod {p}^{k}")
    return GradedOperator(p, k, tuple(pow(zeta, j, m) for j in range(n_max + 1)))


def idempotent_e(s: int, psi_op: GradedOperator) -> GradedOperator:
    """e_s = 1/(p-1) * sum_{i=0}^{p-2} zeta^{-i s} psi^i.

    Acts as the indicator of j == s (mod p-1) on x_j.
    """
    p, k = psi_op.p, psi_op.k
    if p == 2:
        raise InvalidL("idempotents require an odd prime")
    m = p ** k
    zeta = psi_op.coeffs[1] if len(psi_op.coeffs) > 1 else 1
    zeta_inv = pow(zeta, -1, m)
    inv_pm1 = pow(p - 1, -1, m)
    coeffs = []
    for j in range(len(psi_op.coeffs)):
        acc = 0
        for i in range(p - 1):
            acc += pow(zeta_inv, (i * s) % (p - 1), m) * pow(psi_op.coeffs[j], i, m)
        coeffs.append((acc * inv_pm1) % m)
    return GradedOperator(p, k, tuple(coeffs))


def indicator_e(s: int, p: int, n_max: int, k: int = DEFAULT_PRECISION) -> GradedOperator:
    """Indicator description of e_s: x_j kept iff j == s (mod p-1)."""
    return GradedOperator(
        p, k, tuple(1 if j % (p - 1) == s % (p - 1) else 0 for j in range(n_max + 1))
    )


def _check_l(p: int, l: int):
    if l <= 1 or (p - 1) % l != 0:
        raise InvalidL(f"l={l} must divide p-1={p - 1} and exceed 1")


def transfer_image_bg(
    p: int, l: int, n_max: int, k: int = DEFAULT_PRECISION
) -> tuple[GradedOperator, GradedRanks]:
    """Homology image of the Becker-Gottlieb transfer for N = S x| C_l.

    The idempotent is e_0 + e_l + ... + e_{p-1-l}; it keeps x_j exactly
    for j == 0 (mod l). Also returns H_*(BN; Z_p), which is Z_p[z^l]
    with |z| = 2: rank one in degrees 0, 2l, 4l, ...
    """
    _check_l(p, l)
    op = GradedOperator(
        p, k, tuple(1 if j % l == 0 else 0 for j in range(n_max + 1))
    )
    ranks = GradedRanks(
        {2 * l * i: 1 for i in range(0, n_max // l + 1)}
    )
    return op, ranks


def umkehr_residues(p: int, l: int) -> list[int]:
    """Distinct residues s in {0,...,p-2} with s == -1 (mod l)."""
    return [s for s in range(p - 1) if s % l == l - 1]


def transfer_image_umkehr(
    p: int, l: int, n_max: int, k: int = DEFAULT_PRECISION
) -> tuple[GradedOperator, GradedRanks]:
    """Homology image of the stable Umkehr transfer: sum of e_s, s == -1 (mod l).

    Also returns the reduced homology pattern of the twisted Thom
    spectrum BN^nu: rank one in odd degrees 2m+1 with m == -1 (mod l).
    The invariant-theoretic computation gives only these odd degrees;
    that is strictly sparser than a bare congruence on the total degree.
    """
    _check_l(p, l)
    op = GradedOperator(
        p, k, tuple(1 if j % l == l - 1 else 0 for j in range(n_max + 1))
    )
    ranks = GradedRanks(
        {2 * m + 1: 1 for m in range(n_max + 1) if m % l == l - 1}
    )
    return op, ranks


def verify_framing_obstruction(
    p: int, l: int, n_max: int | None = None, k: int = DEFAULT_PRECISION
) -> dict:
    """Check e_0 . f = f . e_0 = 0 for the Umkehr image f, exactly.

    This is the homology-level mechanism that kills the flag-variety
    framing class for l > 2; l = 2 is rejected since that case is
    covered by the classical geometric argument.
    """
    if l == 2:
        raise InvalidL("l=2 is handled by the classical Pittie-Smith case")
    _check_l(p, l)
    if n_max is None:
        n_max = 3 * (p - 1)
    e0 = indicator_e(0, p, n_max, k)
    f, _ = transfer_image_umkehr(p, l, n_max, k)
    checks = {
        "e0_compose_f_zero": e0.compose(f).is_zero(),
        "f_compose_e0_zero": f.compose(e0).is_zero(),
        "f_idempotent": f.compose(f) == f,
    }
    return {
        "p": p,
        "l": l,
        "degreeBound": 2 * n_max,
        "residues": umkehr_residues(p, l),
        "checksPassed": [name for name, ok in checks.items() if ok],
        "ok": all(checks.values()),
    }
