import pytest

from drinfeld_modpoly import upoly
from drinfeld_modpoly.drinfeld import DrinfeldModule
from drinfeld_modpoly.invariants import invariant_monoid_basis, lambda_twist
from drinfeld_modpoly.isogeny import gaussian_binomial
from drinfeld_modpoly.modular import (
    case_one_factor,
    extract_sep_from_s1,
    factor_evidence,
    format_in_invariants,
    full_modular_poly,
    kronecker_verify,
    modular_poly,
    special_poly_mod_p,
)
from drinfeld_modpoly.parsing import parse_upoly
from drinfeld_modpoly.polynomials import is_invariant, mpoly_mod_prime, poly_ring

from strategies import B22, B23, B32

T_ = (0, 1)
j2 = B22.g(1) ** 3
j3 = B32.g(1) ** 4
J12 = B23.g(1) * B23.g(2) ** 2

# computed independently by a straight-line prototype (explicit cubic tower, no shared code)
PROTOTYPE_CUBIC = (
    "X^3 + (T^4+T^3+T^2+T*g1^3+T+g1^6)*X^2"
    " + (T^8+T^6+T^5*g1^3+T^4+T^3*g1^3+T^2*g1^3+T^2+T*g1^6+g1^3)*X"
    " + (T^12+T^11+T^8*g1^3+T^6*g1^3+T^4*g1^6+T^4*g1^3+T^4+T^3*g1^6+T^3+T^2*g1^6+T^2*g1^3+T*g1^6+g1^9)"
)


def test_rank_two_cubic_matches_prototype():
    mp = modular_poly(j2, T_, 1)
    assert mp.coeffs == parse_upoly(PROTOTYPE_CUBIC, 2, 2)
    assert mp.degree == 3 and mp.coeffs[-1].is_one()


def test_s_zero_is_x_minus_j():
    mp = modular_poly(J12, T_, 0)
    assert mp.coeffs == [-J12, B23.one]
    assert str(mp) == "X + g1*g2^2"


@pytest.mark.parametrize(
    "J,P,s",
    [(j2, T_, 1), (j2, T_, 2), (j3, T_, 1), (j2, (1, 1, 1), 1), (J12, T_, 1), (J12, T_, 2), (J12, T_, 3)],
    ids=["q2", "q2s2", "q3", "q2P2", "r3s1", "r3s2", "r3s3"],
)
def test_degree_and_invariance(J, P, s):
    mp = modular_poly(J, P, s, check_distinct=True)
    v = J.ring.q ** (len(P) - 1)
    assert mp.degree == gaussian_binomial(J.ring.r, s, v) == mp.expected_degree
    assert mp.invariant
    assert all(is_invariant(c, "sweep") and is_invariant(c, "congruence") for c in mp.coeffs)
    assert all(c.den is None for c in mp.coeffs)


def test_full_polynomial_is_product_of_types():
    full = full_modular_poly(j2, T_)
    assert full.degree == 1 + 3 + 1
    parts = [modular_poly(j2, T_, s).coeffs for s in range(3)]
    assert full.coeffs == upoly.product(parts, B22.one)


def test_s_equal_r_is_x_minus_j():
    # the only kernel of dimension r is phi[P], whose codomain is phi itself
    assert modular_poly(j2, T_, 2).coeffs == [-j2, B22.one]


def test_lambda_twist_gives_the_same_polynomial():
    for B, J in [(B22, j2), (B23, J12)]:
        phi = DrinfeldModule.generic(B.q, B.r)
        psi = DrinfeldModule.from_coefficients(B, lambda_twist(phi, B.field.gen))
        assert modular_poly(J, T_, 1, phi=psi).coeffs == modular_poly(J, T_, 1).coeffs


def test_thread_count_does_not_change_output():
    a = modular_poly(J12, T_, 1)
    b = modular_poly(J12, T_, 1, threads=4)
    assert a.to_text() == b.to_text()


def test_separable_part_degrees_and_top_type():
    Bp = poly_ring(2, 3, T_)
    for s in (1, 2):
        sep = special_poly_mod_p(J12**2, T_, s)
        assert upoly.degree(sep) == gaussian_binomial(2, s, 2)
        assert all(is_invariant(c) for c in sep)
    # J^|P| at s = r - 1 gives X - J
    assert special_poly_mod_p(J12**2, T_, 2) == [mpoly_mod_prime(-J12, T_), Bp.one]
    assert special_poly_mod_p(j2**2, T_, 1) == [mpoly_mod_prime(-j2, T_), poly_ring(2, 2, T_).one]


def test_rank_two_congruences():
    for J, P in [(j2, T_), (j3, T_), (j2, (1, 1, 1))]:
        rep = kronecker_verify(J, P, 1)
        assert rep.passed
        assert upoly.is_zero(rep.residual_first) and upoly.is_zero(rep.residual_second)
        assert "result: PASS" in rep.to_text()


def test_corrupted_input_fails_cleanly():
    lhs = modular_poly(J12, T_, 1).coeffs
    bad = list(lhs)
    bad[3] = bad[3] + B23.T + B23.one
    rep = kronecker_verify(J12, T_, 1, lhs=bad)
    assert not rep.passed and not rep.first_holds and not rep.second_holds
    assert not upoly.is_zero(rep.residual_first)
    with pytest.raises(upoly.InexactDivision):
        extract_sep_from_s1(rep.lhs, J12, T_)


def test_three_routes_to_the_separable_cubic():
    direct = special_poly_mod_p(J12**2, T_, 1)
    s1 = modular_poly(J12, T_, 1).mod_p()
    s2 = modular_poly(J12, T_, 2).mod_p()
    assert extract_sep_from_s1(s1, J12, T_) == direct
    assert case_one_factor(s2, J12, T_, 2) == direct


def test_certificate_and_generator_form():
    mp = modular_poly(j2, T_, 1, check_distinct=True)
    cert = mp.certificate(invariant_monoid_basis(2, 2))
    for line in ["q: 2", "r: 2", "P: T", "s: 1", "degree: 3 (expected 3) ok", "invariant: ok", "distinct roots: yes"]:
        assert line in cert.splitlines()
    text = format_in_invariants(mp.coeffs, invariant_monoid_basis(2, 2))
    assert text.startswith("X^3 + (j^2 + T*j + (T^4 + T^3 + T^2 + T))*X^2")


def test_factor_evidence_runs_and_is_deterministic():
    sep = special_poly_mod_p(J12**2, T_, 1)
    a = factor_evidence(sep, 5, seed=1)
    b = factor_evidence(sep, 5, seed=1)
    assert [e.to_text() for e in a] == [e.to_text() for e in b]
    assert all(sum(e.degrees) == 3 for e in a)
    with pytest.raises(ValueError):
        factor_evidence(modular_poly(j2, T_, 1).coeffs)
