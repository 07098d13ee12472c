from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcflag.catalog import g7_generators
from pcflag.cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from pcflag.errors import ConductorMismatch, NoEmbedding
from pcflag.linalg import CycMatrix
from pcflag.padic import (
    embed_cyclotomic,
    embed_matrices,
    factor_cyclotomic_mod_p,
    lift_cyclotomic_factor,
    multiplicative_order,
)


# -- tiny test-local F_p polynomial helpers (independent of pcflag.padic) --

def poly_mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_rem(num, den, p):
    num = list(num)
    inv = pow(den[-1], -1, p)
    for i in range(len(num) - len(den), -1, -1):
        c = (num[i + len(den) - 1] * inv) % p
        for j, d in enumerate(den):
            num[i + j] = (num[i + j] - c * d) % p
    rem = num[: len(den) - 1]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return rem or [0]


def brute_force_quadratic_factors(n, p):
    """All monic quadratic factors of Phi_n over F_p by exhaustive search."""
    phi = [c % p for c in cyclotomic_polynomial(n)]
    found = []
    for b in range(p):
        for c in range(p):
            g = [c, b, 1]
            if poly_rem(phi, g, p) == [0]:
                found.append(tuple(g))
    return sorted(found)


def test_lift_degree_matches_multiplicative_order():
    assert multiplicative_order(13, 12) == 1
    assert multiplicative_order(7, 12) == 2
    assert multiplicative_order(13, 24) == 2
    assert len(lift_cyclotomic_factor(13, 12, 1)) - 1 == 1
    assert len(lift_cyclotomic_factor(7, 12, 1)) - 1 == 2
    assert len(lift_cyclotomic_factor(13, 24, 1)) - 1 == 2


def test_phi12_mod7_factors_against_brute_force():
    oracle = brute_force_quadratic_factors(12, 7)
    assert factor_cyclotomic_mod_p(12, 7) == oracle
    assert len(oracle) == 2


def test_phi24_mod13_factors_against_brute_force():
    oracle = brute_force_quadratic_factors(24, 13)
    assert factor_cyclotomic_mod_p(24, 13) == oracle
    assert len(oracle) == 4


def test_hensel_lift_divides_cyclotomic():
    for (p, n, k) in [(13, 24, 6), (7, 12, 4), (5, 24, 8)]:
        g = lift_cyclotomic_factor(p, n, k)
        m = p ** k
        phi = [c % m for c in cyclotomic_polynomial(n)]
        assert poly_rem(phi, list(g), m) == [0]
        # reduces to a factor mod p
        base = tuple(c % p for c in g)
        assert base in factor_cyclotomic_mod_p(n, p)


def test_hensel_lift_precision_compatible():
    for k in (1, 2, 3, 5):
        lo = lift_cyclotomic_factor(13, 24, k)
        hi = lift_cyclotomic_factor(13, 24, k + 1)
        assert tuple(c % 13 ** k for c in hi) == lo


def test_embed_rational_matrices_any_prime():
    pm1 = CycMatrix.from_rational_rows([[-1]])
    result = embed_matrices([pm1], 5, 4)
    assert result.matrices == (((624,),),)


def test_embed_g7_at_13_succeeds():
    result = embed_matrices(g7_generators(), 13, 6)
    assert result.p == 13 and result.k == 6
    assert all(
        0 <= v < 13 ** 6 for m in result.matrices for row in m for v in row
    )


def test_embed_g7_at_13_is_homomorphism():
    gens = g7_generators()
    result = embed_matrices(gens, 13, 6)
    m = 13 ** 6

    def matmul(a, b):
        return tuple(
            tuple(
                sum(a[i][t] * b[t][j] for t in range(2)) % m for j in range(2)
            )
            for i in range(2)
        )

    for i in range(3):
        for j in range(3):
            product = gens[i] @ gens[j]
            expected = embed_matrices(gens + [product], 13, 6).matrices[3]
            assert matmul(result.matrices[i], result.matrices[j]) == expected


def test_embed_g7_at_7_fails_with_brute_force_oracle():
    gens = g7_generators()
    with pytest.raises(NoEmbedding):
        embed_matrices(gens, 7, 4)
    # independent oracle: try every quadratic factor of Phi_24 mod 7 by hand
    factors = brute_force_quadratic_factors(24, 7)
    assert len(factors) == 4
    for g in factors:
        images = []
        for mat in gens:
            for row in mat.entries:
                for entry in row:
                    coords = [0, 0]
                    power = [1]
                    for c in entry.coeffs:
                        if c:
                            val = (c.numerator * pow(c.denominator, -1, 7)) % 7
                            for idx, t in enumerate(power):
                                coords[idx] = (coords[idx] + val * t) % 7
                        power = poly_rem(poly_mul_mod(power, [0, 1], 7), list(g), 7)
                        power += [0] * (2 - len(power))
                    images.append(tuple(coords))
        assert any(v[1] != 0 for v in images), "oracle says this factor fails too"


def test_embed_precision_compatibility():
    gens = g7_generators()
    hi = embed_matrices(gens, 13, 7)
    lo = embed_matrices(gens, 13, 6)
    m = 13 ** 6
    assert tuple(
        tuple(tuple(v % m for v in row) for row in mat) for mat in hi.matrices
    ) == lo.matrices


def test_embed_conductor_mismatch():
    a = CycMatrix([[CyclotomicNumber.zeta(8)]])
    b = CycMatrix([[CyclotomicNumber.zeta(3)]])
    with pytest.raises(ConductorMismatch):
        embed_matrices([a, b], 5, 2)


def test_embed_rejects_p_in_denominator():
    half = CycMatrix.from_rational_rows([[Fraction(1, 5)]])
    with pytest.raises(NoEmbedding):
        embed_matrices([half], 5, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=23), st.integers(min_value=0, max_value=23))
def test_embedding_is_multiplicative_on_roots_of_unity(i, j):
    modulus = lift_cyclotomic_factor(13, 24, 5)
    z = CyclotomicNumber.zeta(24)
    a = embed_cyclotomic(z ** i, modulus, 13, 5)
    b = embed_cyclotomic(z ** j, modulus, 13, 5)
    ab = embed_cyclotomic(z ** (i + j), modulus, 13, 5)
    assert a * b == ab
