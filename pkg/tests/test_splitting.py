import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcflag.errors import InvalidL, NotPrimitiveRoot
from pcflag.splitting import (
    GradedOperator,
    idempotent_e,
    identity_operator,
    indicator_e,
    primitive_root_lift,
    psi,
    teichmuller,
    transfer_image_bg,
    transfer_image_umkehr,
    umkehr_residues,
    verify_framing_obstruction,
    zero_operator,
)

PRIMES = [3, 5, 7, 13]


def test_teichmuller_is_exact_root_of_unity():
    for p in PRIMES:
        m = p ** 8
        for a in range(1, p):
            t = teichmuller(a, p, 8)
            assert t % p == a
            assert pow(t, p - 1, m) == 1


def test_primitive_root_has_exact_order():
    for p in PRIMES:
        z = primitive_root_lift(p, 8)
        m = p ** 8
        assert pow(z, p - 1, m) == 1
        for d in range(1, p - 1):
            if (p - 1) % d == 0:
                assert pow(z, d, m) != 1


def test_psi_rejects_non_primitive_root():
    with pytest.raises(NotPrimitiveRoot):
        psi(13, 1, 10, 8)
    with pytest.raises(NotPrimitiveRoot):
        # teichmuller(5) has order 4 < 12 mod 13^8
        psi(13, teichmuller(5, 13, 8), 10, 8)


@pytest.mark.parametrize("p", PRIMES)
def test_idempotents_exact_identities(p):
    """e_s e_s = e_s, e_s e_t = 0 (s != t), sum e_s = 1, all mod p^8."""
    n_max = 3 * (p - 1)
    z = primitive_root_lift(p, 8)
    psi_op = psi(p, z, n_max, 8)
    es = [idempotent_e(s, psi_op) for s in range(p - 1)]
    total = zero_operator(p, n_max, 8)
    for s, e in enumerate(es):
        assert e.compose(e) == e
        total = total + e
        for t in range(s + 1, p - 1):
            assert e.compose(es[t]).is_zero()
    assert total == identity_operator(p, n_max, 8)


@pytest.mark.parametrize("p", PRIMES)
def test_idempotent_matches_indicator(p):
    n_max = 3 * (p - 1)
    psi_op = psi(p, primitive_root_lift(p, 8), n_max, 8)
    for s in range(p - 1):
        assert idempotent_e(s, psi_op) == indicator_e(s, p, n_max, 8)


def test_idempotent_rejects_p2():
    op = GradedOperator(2, 4, (1, 1, 1))
    with pytest.raises(InvalidL):
        idempotent_e(0, op)


def test_transfer_image_bg_p13_l3():
    op, bn = transfer_image_bg(13, 3, 12, 8)
    assert op.coeffs == tuple(1 if j % 3 == 0 else 0 for j in range(13))
    assert bn.ranks == {0: 1, 6: 1, 12: 1, 18: 1, 24: 1}
    # the image equals the sum of the idempotents e_0 + e_l + ... + e_{p-1-l}
    psi_op = psi(13, primitive_root_lift(13, 8), 12, 8)
    total = zero_operator(13, 12, 8)
    for s in range(0, 12, 3):
        total = total + idempotent_e(s, psi_op)
    assert total == op


def test_umkehr_residues_p13_l3():
    assert umkehr_residues(13, 3) == [2, 5, 8, 11]
    assert umkehr_residues(13, 4) == [3, 7, 11]
    assert umkehr_residues(7, 3) == [2, 5]


def test_transfer_image_umkehr_p13_l3():
    op, thom = transfer_image_umkehr(13, 3, 12, 8)
    assert op.coeffs == tuple(1 if j % 3 == 2 else 0 for j in range(13))
    # twisted Thom pattern: odd degrees 2m+1 with m == -1 (mod 3)
    assert thom.ranks == {5: 1, 11: 1, 17: 1, 23: 1}
    # equals the sum of e_s over the Umkehr residues
    psi_op = psi(13, primitive_root_lift(13, 8), 12, 8)
    total = zero_operator(13, 12, 8)
    for s in umkehr_residues(13, 3):
        total = total + idempotent_e(s, psi_op)
    assert total == op


@pytest.mark.parametrize(
    "p,l", [(7, 3), (13, 3), (13, 4), (13, 6), (13, 12), (5, 4), (31, 5)]
)
def test_framing_obstruction_holds(p, l):
    result = verify_framing_obstruction(p, l)
    assert result["ok"]
    assert set(result["checksPassed"]) == {
        "e0_compose_f_zero",
        "f_compose_e0_zero",
        "f_idempotent",
    }
    assert result["residues"] == umkehr_residues(p, l)


def test_framing_rejects_l2():
    with pytest.raises(InvalidL):
        verify_framing_obstruction(5, 2)


def test_invalid_l():
    with pytest.raises(InvalidL):
        transfer_image_bg(13, 5, 12)  # 5 does not divide 12
    with pytest.raises(InvalidL):
        transfer_image_umkehr(13, 1, 12)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(7, 2), (7, 3), (13, 3), (13, 4), (13, 6)]),
    st.integers(min_value=1, max_value=4),
)
def test_bg_image_is_idempotent_and_kills_umkehr_part(params, mult):
    p, l = params
    n_max = mult * (p - 1)
    bg, _ = transfer_image_bg(p, l, n_max, 8)
    um, _ = transfer_image_umkehr(p, l, n_max, 8)
    assert bg.compose(bg) == bg
    assert um.compose(um) == um
    if l > 2:
        assert bg.compose(um).is_zero()


def test_operator_degree_bound_and_scale():
    op = identity_operator(5, 4, 3)
    assert op.degree_bound == 8
    assert op.scale(5 ** 3).is_zero()
    assert op.scale(2).coeffs == (2,) * 5
    with pytest.raises(ValueError):
        op.compose(identity_operator(5, 5, 3))
