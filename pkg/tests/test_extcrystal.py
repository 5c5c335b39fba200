import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcrystal import binf
from braidcrystal.cartan import Weight, build_cartan
from braidcrystal.extcrystal import (
    ExtElt,
    ball,
    eps_hat,
    ext_E,
    ext_F,
    ext_weight,
    ext_zeta,
    from_path,
    one,
    shift,
    to_highest,
)
from braidcrystal.multiseg import ms_to_binf, parse_multisegment

from conftest import ext_elements

A2 = build_cartan("A2")


def ext(comps, n=2):
    c = build_cartan(f"A{n}")
    return ExtElt.from_map(c, {k: ms_to_binf(parse_multisegment(t, n)) for k, t in comps.items()})


EX2 = ext({1: "2[2]+3[12]+4[1]", 0: "[2]+[12]+2[1]", -1: "3[2]+2[12]+[1]"})


def test_normal_form():
    x = ExtElt.from_map(A2, {0: binf.highest(A2), 3: binf.f(1, binf.highest(A2))})
    assert x.support() == [3]
    assert x[0] == binf.highest(A2)
    assert one(A2).is_one()
    assert x == ext({3: "[1]"})


def test_weight():
    assert ext_weight(one(A2)).is_zero()
    assert ext_weight(ext({0: "[1]"})) == Weight((-1, 0))
    assert ext_weight(ext({1: "[1]"})) == Weight((1, 0))
    # m_1 = 2[2]+3[12]+4[1] has weight -(7,5); m_0 -(3,2); m_{-1} -(3,5)
    assert ext_weight(EX2) == Weight((7, 5)) - Weight((3, 2)) + Weight((3, 5))


def test_eps_hat():
    assert eps_hat(1, 0, one(A2)) == 0
    assert eps_hat(2, 0, ext_F(2, 0, one(A2))) == 1
    assert eps_hat(1, 0, EX2) == 2 - binf.epsilon_star(1, EX2[1])


def test_operator_examples():
    x = ext_F(2, 0, one(A2))
    assert x == ext({0: "[2]"})
    assert ext_E(1, 4, one(A2)) == ExtElt.from_map(A2, {5: binf.f(1, binf.highest(A2))})
    assert ext_E(2, 0, x).is_one()


def test_shift_examples():
    x = ext_F(2, 0, one(A2))
    assert shift(0, x) == x
    assert shift(1, x) == ext_F(2, 1, one(A2))


def test_zeta_examples():
    assert ext_zeta(one(A2)).is_one()
    assert ext_zeta(ext({0: "[2]"})) == ext({0: "[1]"})


def test_to_highest_examples():
    assert to_highest(one(A2)) == []
    assert to_highest(ext_F(2, 0, one(A2))) == [(2, 0)]
    path = to_highest(EX2)
    assert len(path) == EX2.size() == 12 + 5 + 8
    assert from_path(A2, path) == EX2


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
@given(data=st.data())
def test_inverse_pairs_and_weight(name, data):
    x = data.draw(ext_elements(name))
    c = x.cartan
    i = data.draw(st.sampled_from(c.indices))
    k = data.draw(st.integers(-4, 4))
    fx = ext_F(i, k, x)
    assert ext_E(i, k, fx) == x
    assert ext_F(i, k, ext_E(i, k, x)) == x
    sign = 1 if k % 2 == 0 else -1
    assert ext_weight(fx) == ext_weight(x) - c.simple_root(i) * sign


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
@given(data=st.data())
def test_shift_properties(name, data):
    x = data.draw(ext_elements(name))
    c = x.cartan
    i = data.draw(st.sampled_from(c.indices))
    k, p = data.draw(st.integers(-4, 4)), data.draw(st.integers(-3, 3))
    assert shift(p, ext_F(i, k, x)) == ext_F(i, k + p, shift(p, x))
    assert shift(-p, shift(p, x)) == x
    assert ext_weight(shift(p, x)) == ext_weight(x) * (-1) ** (p % 2)
    assert ext_zeta(ext_zeta(x)) == x


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
@given(data=st.data())
def test_to_highest_round_trip(name, data):
    x = data.draw(ext_elements(name, max_len=12))
    path = to_highest(x)
    assert len(path) == x.size()
    y = x
    for i, k in path:
        y = ext_E(i, k, y)
    assert y.is_one()
    assert from_path(x.cartan, path) == x


def test_ball_a1():
    c = build_cartan("A1")
    assert ball(c, 0, (0, 1)) == [one(c)]
    assert len(ball(c, 1, (0, 1))) == 3


def _bfs_ball(c, radius, window):
    lo, hi = window
    seen = {one(c)}
    frontier = [one(c)]
    while frontier:
        nxt = []
        for x in frontier:
            for i in c.indices:
                for k in range(lo, hi + 1):
                    for y in (ext_F(i, k, x), ext_E(i, k, x)):
                        if y.size() <= radius and all(lo <= kk <= hi for kk in y.support()) and y not in seen:
                            seen.add(y)
                            nxt.append(y)
        frontier = nxt
    return seen


def test_ball_matches_bfs():
    c = build_cartan("A2")
    assert set(ball(c, 2, (-1, 1))) == _bfs_ball(c, 2, (-1, 1))
    assert len(ball(c, 2, (-1, 1))) == len(_bfs_ball(c, 2, (-1, 1)))


def test_random_elements_are_deterministic():
    from braidcrystal.extcrystal import random_ext

    a = [random_ext(A2, random.Random(9), 10) for _ in range(2)]
    assert a[0] == a[1]
