import pytest
from hypothesis import given
from hypothesis import strategies as st

from drinfeld_modpoly import upoly
from drinfeld_modpoly.twisted import (
    NonAdditiveExponent,
    TwistedPoly,
    additive_compose,
    from_additive,
    to_additive,
    tw_div_right,
    tw_mul,
)

from strategies import B22, B32, twisted_polys

RINGS = [B22, B32]
IDS = ["q2", "q3"]


def test_commutation_rule():
    T = B22.T
    tau = TwistedPoly.tau(B22)
    a = TwistedPoly(B22, [T])
    assert tau * a == TwistedPoly(B22, [B22.zero, T**2])
    assert str(tau * a) == "T^2*t"


@pytest.mark.parametrize("R", RINGS, ids=IDS)
@given(data=st.data())
def test_ore_composition_law(R, data):
    f = data.draw(twisted_polys(R))
    g = data.draw(twisted_polys(R))
    assert to_additive(tw_mul(f, g)) == additive_compose(to_additive(f), to_additive(g))


@pytest.mark.parametrize("R", RINGS, ids=IDS)
@given(data=st.data())
def test_multiplication_is_associative_and_distributive(R, data):
    f, g, h = (data.draw(twisted_polys(R, max_degree=2)) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@pytest.mark.parametrize("R", RINGS, ids=IDS)
@given(data=st.data())
def test_right_division_round_trip(R, data):
    f = data.draw(twisted_polys(R, max_degree=4))
    g = data.draw(twisted_polys(R, max_degree=2, monic=True))
    quo, rem = tw_div_right(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


@given(twisted_polys(B22))
def test_evaluation_matches_additive_form(f):
    x = B22.T + B22.g(1)
    assert f(x) == upoly.evaluate(to_additive(f), x)


def test_additive_round_trip_and_errors():
    f = TwistedPoly(B22, [B22.T, B22.g(1), B22.one])
    assert from_additive(to_additive(f)) == f
    with pytest.raises(NonAdditiveExponent):
        from_additive([B22.zero, B22.zero, B22.zero, B22.one])
    with pytest.raises(ValueError):
        tw_div_right(f, TwistedPoly(B22, [B22.one, B22.T]))
