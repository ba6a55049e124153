import pytest

from drinfeld_modpoly import upoly
from drinfeld_modpoly.tower import NothingToAdjoin, SplitDetected, adjoin_root, lowest_factor, tower_extend

from strategies import B22


def level(*coeffs):
    return [B22(c) for c in coeffs]


def test_cubic_level_and_inverse():
    T, g1 = B22.T, B22.g(1)
    t = tower_extend(B22, [T, g1, B22.zero, B22.one], "w")
    w = t.gen("w")
    assert w**3 == g1 * w + T  # characteristic 2
    assert t.degree == 3
    x = w**2 + T
    assert x * x.inverse() == t.one
    assert t.describe().splitlines()[1] == "w: w^3 + g1*w + T"


def test_two_levels():
    T, g1 = B22.T, B22.g(1)
    t = tower_extend(B22, [T, g1, B22.zero, B22.one], "w2")
    w2 = t.gen("w2")
    t = tower_extend(t, [w2**2 + g1, w2, t.one], "w1")
    w1, w2 = t.gen("w1"), t.gen("w2")
    assert t.degree == 6
    assert w1**2 + w2 * w1 + w2**2 + g1 == t.zero
    assert (w1 + w2).inverse() * (w1 + w2) == t.one
    assert t.minimal_polynomial("w1")[1] == w2


def test_split_is_detected():
    # z^2 + 1 = (z + 1)^2 over F_2
    t = tower_extend(B22, level(1, 0, 1), "z")
    z = t.gen("z")
    with pytest.raises(SplitDetected) as info:
        (z + 1).inverse()
    assert info.value.level == "z"
    factor = lowest_factor(info.value, t)
    assert upoly.degree(factor) == 1
    assert factor[0] == B22.one


def test_adjoin_root_cases():
    T = B22.T
    f = [B22.zero, T, B22.one]  # X^2 + T X = X (X + T)
    t, root = adjoin_root(B22, f, [B22.zero], "y")
    assert t is B22 and root == T
    with pytest.raises(NothingToAdjoin):
        adjoin_root(B22, f, [B22.zero, T], "y")
    with pytest.raises(ValueError):
        tower_extend(B22, [T, T], "y")
    with pytest.raises(ValueError):
        tower_extend(B22, [T, B22.one, T], "y")
