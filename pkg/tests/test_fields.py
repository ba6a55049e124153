import pytest
from hypothesis import given
from hypothesis import strategies as st

from drinfeld_modpoly.fields import (
    PINNED_MODULI,
    FieldCtx,
    a_add,
    a_degree,
    a_divmod,
    a_enumerate,
    a_is_irreducible,
    a_is_monic_prime,
    a_mul,
    a_to_str,
    a_trim,
    ff_frobenius,
    fp_to_apoly,
    is_prime,
    residue_field,
)

from strategies import apolys, ff_elems

F4 = FieldCtx.pinned(2, 2)
F8 = FieldCtx.pinned(2, 3)
F9 = FieldCtx.pinned(3, 2)
FIELDS = [F4, F8, F9, FieldCtx.pinned(2, 4)]


def test_pinned_moduli_are_irreducible_and_used():
    for (p, n), m in PINNED_MODULI.items():
        assert a_is_irreducible(m, p)
        assert FieldCtx.pinned(p, n).modulus == m


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (1, 0, 1))
    with pytest.raises(ValueError):
        FieldCtx(4, 1)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_element_count_and_order():
    for F in FIELDS:
        elems = list(F.elements())
        assert len(set(elems)) == F.order
        assert [x.to_int() for x in elems] == list(range(F.order))


def test_unit_group_generator_has_full_order():
    for F in FIELDS:
        g = F.unit_group_generator()
        powers = {(g**k).to_int() for k in range(F.order - 1)}
        assert len(powers) == F.order - 1


def test_printing_of_field_elements():
    assert str(F8.gen) == "u"
    assert str(F8.gen**3) == "u+1"
    assert str(F8.zero) == "0"
    assert str(F9.from_int(5)) == "u+2"


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"F{F.order}")
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(ff_elems(F)) for _ in range(3))
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if not a.is_zero():
        assert a * a.inverse() == F.one
        assert (b / a) * a == b
    assert a ** F.order == a


@given(ff_elems(F8), ff_elems(F8))
def test_frobenius_is_additive_and_multiplicative(a, b):
    assert ff_frobenius(a + b, 1) == ff_frobenius(a, 1) + ff_frobenius(b, 1)
    assert ff_frobenius(a * b, 1) == ff_frobenius(a, 1) * ff_frobenius(b, 1)
    assert ff_frobenius(a, 3) == a


@given(apolys(3), apolys(3), apolys(3, 3))
def test_apoly_ring_laws(a, b, c):
    q = 3
    assert a_mul(a, a_add(b, c, q), q) == a_add(a_mul(a, b, q), a_mul(a, c, q), q)
    if a_trim(c, q):
        quo, rem = a_divmod(a, c, q)
        assert a_add(a_mul(quo, c, q), rem, q) == a_trim(a, q)
        assert a_degree(rem) < a_degree(a_trim(c, q))


def test_apoly_helpers():
    assert a_to_str((1, 1, 1)) == "T^2 + T + 1"
    assert a_to_str((0, 2), "T") == "2*T"
    assert a_to_str(()) == "0"
    assert list(a_enumerate(2, 1)) == [(), (1,), (0, 1), (1, 1)]
    assert a_is_monic_prime((1, 1, 1), 2)
    assert not a_is_monic_prime((0, 0, 1), 2)
    assert not a_is_monic_prime((1, 0, 1), 2)  # (T+1)^2
    assert not a_is_monic_prime((0, 2), 3)


def test_irreducible_counts_match_necklace_formula():
    # number of monic irreducibles of degree d over F_q
    def necklace(q, d):
        from math import gcd

        mob = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1}
        return sum(mob[k] * q ** (d // k) for k in range(1, d + 1) if d % k == 0) // d

    for q, d in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (2, 6)]:
        count = sum(1 for a in a_enumerate(q, d, monic=True) if a_degree(a) == d and a_is_irreducible(a, q))
        assert count == necklace(q, d)


def test_residue_field():
    F = residue_field((1, 1, 1), 2)
    assert F.order == 4
    x = F.gen
    assert x * x + x + F.one == F.zero
    assert fp_to_apoly(x) == (0, 1)
    assert residue_field((0, 1), 3).order == 3
