import itertools

import pytest

from drinfeld_modpoly.drinfeld import DrinfeldModule, torsion_basis
from drinfeld_modpoly.fields import a_degree, residue_field
from drinfeld_modpoly.isogeny import (
    brute_force_subspace_count,
    count_rref,
    enumerate_subspaces,
    frobenius_isogeny,
    gaussian_binomial,
    isogeny_of,
    kernel_generators,
    kernel_polynomial,
    pushforward,
)
from drinfeld_modpoly.polynomials import poly_ring

# a prime of each residue-field size, for sizes reachable with prime q
PRIMES = {
    2: (2, (0, 1)),
    3: (3, (0, 1)),
    4: (2, (1, 1, 1)),
    5: (5, (0, 1)),
    7: (7, (0, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
    16: (2, (1, 1, 0, 0, 1)),
}
SCOPED = [(2, 2, (0, 1)), (3, 2, (0, 1)), (2, 2, (1, 1, 1)), (2, 3, (0, 1))]
SCOPED_IDS = ["q2r2T", "q3r2T", "q2r2T2T1", "q2r3T"]


def all_cases():
    for v in PRIMES:
        r = 1
        while v**r <= 2**12:
            for s in range(r + 1):
                yield v, r, s
            r += 1


def pascal(n, k, v, memo={}):
    """q-Pascal recurrence, independent of the product formula."""
    if k == 0 or k == n:
        return 1
    if k < 0 or k > n:
        return 0
    key = (n, k, v)
    if key not in memo:
        memo[key] = pascal(n - 1, k - 1, v) + v**k * pascal(n - 1, k, v)
    return memo[key]


def brute_force_cost(r, s, v):
    return sum(gaussian_binomial(r, k, v) * v**r * v ** (k + 1) for k in range(s))


def test_counting_laws_for_all_small_cases():
    brute = 0
    for v, r, s in all_cases():
        expected = pascal(r, s, v)
        assert gaussian_binomial(r, s, v) == expected
        assert count_rref(r, s, v) == expected
        # special matrices: last column zero
        assert count_rref(r - 1, s, v) == pascal(r - 1, s, v)
        if brute_force_cost(r, s, v) <= 10**6:
            q, P = PRIMES[v]
            assert brute_force_subspace_count(r, s, P, q) == expected, (v, r, s)
            brute += 1
    assert brute >= 100


@pytest.mark.parametrize("v", sorted(PRIMES))
def test_enumeration_matches_counts(v):
    q, P = PRIMES[v]
    for r in range(1, 5):
        for s in range(r + 1):
            if gaussian_binomial(r, s, v) > 5000:
                continue
            ms = enumerate_subspaces(r, s, P, q)
            assert len(ms) == gaussian_binomial(r, s, v)
            assert sum(m.is_special() for m in ms) == gaussian_binomial(r - 1, s, v)


def span(m, P, q):
    F = residue_field(P, q)
    rows = [[F(list(x) + [0] * (F.n - len(x))) for x in row] for row in m.rows]
    out = set()
    for cs in itertools.product(list(F.elements()), repeat=len(rows)):
        vec = [F.zero] * m.r
        for c, row in zip(cs, rows):
            vec = [a + c * b for a, b in zip(vec, row)]
        out.add(tuple(x.to_int() for x in vec))
    return frozenset(out)


@pytest.mark.parametrize("v,r", [(2, 3), (2, 4), (3, 3), (4, 2), (4, 3), (5, 2)])
def test_rref_matrices_give_distinct_subspaces(v, r):
    q, P = PRIMES[v]
    for s in range(r + 1):
        spans = [span(m, P, q) for m in enumerate_subspaces(r, s, P, q)]
        assert len(set(spans)) == len(spans)
        assert all(len(sp) == v**s for sp in spans)


def test_rank_three_example_counts():
    ms = enumerate_subspaces(3, 1, (0, 1), 2)
    assert len(ms) == 7
    assert sum(m.is_special() for m in ms) == 3
    assert str(ms[0]) == "[1 0 0]"
    assert [m.pivots for m in ms[:4]] == [(0,), (0,), (0,), (0,)]


def test_gaussian_binomial_edges():
    assert gaussian_binomial(3, 4, 2) == 0
    assert gaussian_binomial(0, 0, 5) == 1
    assert gaussian_binomial(2, 1, 4) == 5


@pytest.mark.parametrize("q,r,P", SCOPED, ids=SCOPED_IDS)
def test_frobenius_isogeny_reduces_to_tau_power(q, r, P):
    wb = torsion_basis(DrinfeldModule.generic(q, r), P)
    iso = frobenius_isogeny(wb)
    d = a_degree(P)
    assert iso.f.degree == d
    Fbar = wb.reduce_twisted(iso.f)
    assert Fbar.degree == d and Fbar.is_monic()
    assert all(c.is_zero() for c in Fbar.coeffs[:-1])
    # codomain mod P is T + g_1^|P| tau + ... + tau^r
    cod = wb.reduce_twisted(iso.codomain.phi_T)
    Bp = poly_ring(q, r, P)
    expected = [Bp.T] + [Bp.g(i) ** (q**d) for i in range(1, r)] + [Bp.one]
    assert list(cod.coeffs) == expected
    assert iso.check((0, 1)) and iso.check((1, 1, 1))


@pytest.mark.parametrize("q,r,P", SCOPED[:2] + SCOPED[3:], ids=["q2r2T", "q3r2T", "q2r3T"])
def test_every_kernel_gives_an_isogeny(q, r, P):
    wb = torsion_basis(DrinfeldModule.generic(q, r), P)
    for s in range(1, r + 1):
        for m in enumerate_subspaces(r, s, P, q):
            f = kernel_polynomial(m, wb)
            assert f.is_monic() and f.degree == s * a_degree(P)
            for eta in kernel_generators(m, wb):
                assert f(eta).is_zero()
            iso = isogeny_of(m, wb)
            assert iso.codomain.rank == r
            assert iso.check((0, 1))
    # s = r gives phi_P itself, whose codomain is phi
    full = enumerate_subspaces(r, r, P, q)[0]
    assert kernel_polynomial(full, wb) == wb.module.phi_a(P)
    assert pushforward(wb.module.phi_a(P), wb.module) == wb.module


def test_brute_force_agrees_with_formula_on_example():
    assert brute_force_subspace_count(3, 1, (0, 1), 2) == 7
    assert brute_force_subspace_count(2, 1, (1, 1, 1), 2) == 5
