import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcrystal import binf
from braidcrystal.cartan import Weight, build_cartan
from braidcrystal.multiseg import (
    Multisegment,
    ParseError,
    binf_to_ms,
    bridge_word,
    enumerate_multisegments,
    ms_e,
    ms_e_star,
    ms_epsilon,
    ms_f,
    ms_f_star,
    ms_kashiwara,
    ms_local_data,
    ms_saito,
    ms_to_binf,
    ms_weight,
    parse_multisegment,
)
from braidcrystal.verify import kostant_count, oracle_agreement


def P(text, n=2):
    return parse_multisegment(text, n)


def test_parse_and_print():
    m = P("4[1] + 3[1,2] + 2[2]")
    assert str(m) == "2[2]+3[1,2]+4[1]"
    assert P("2[2]+3[12]+4[1]") == m
    assert P(str(m)) == m
    assert P("[1]+[1]") == P("2[1]")
    assert P("0").is_empty() and P("").is_empty() and P("∅").is_empty()
    assert str(Multisegment(3)) == "0"
    assert str(P("[2,3]+[1]", 3)) == "1[2,3]+1[1]"


@pytest.mark.parametrize(
    "text,pos",
    [("2[2]+[3]", 5), ("2[2]x", 4), ("[1,", 0), ("2[2]+", 5), ("[2,1]", 0)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.position == pos


def test_example_epsilons_and_e_max():
    assert ms_epsilon(1, P("2[2]+3[12]+4[1]")) == 5
    assert ms_epsilon(1, P("[2]+[12]+2[1]")) == 2
    assert ms_epsilon(1, P("3[2]+2[12]+[1]")) == 2
    assert ms_epsilon(2, Multisegment(2)) == 0
    assert ms_kashiwara(1, P("2[2]+3[12]+4[1]"), "e_max") == P("5[2]+2[1]")
    assert ms_kashiwara(1, P("[2]+[12]+2[1]"), "e_max") == P("2[2]+[1]")
    assert ms_kashiwara(1, P("3[2]+2[12]+[1]"), "e_max") == P("5[2]+[1]")


def test_saito_examples():
    assert ms_saito(1, P("2[2]+3[12]+4[1]")) == P("2[2]+3[12]")
    assert ms_saito(1, P("[2]+[12]+2[1]")) == P("[2]+[12]")
    assert ms_saito(1, P("3[2]+2[12]+[1]")) == P("[2]+4[12]")


def test_operators_on_empty():
    empty = Multisegment(3)
    for i in (1, 2, 3):
        assert ms_f(i, empty) == P(f"[{i}]", 3)
        assert ms_f_star(i, empty) == P(f"[{i}]", 3)
        assert ms_e(i, empty) is None and ms_e_star(i, empty) is None
    with pytest.raises(ValueError):
        ms_f(4, empty)
    with pytest.raises(ValueError):
        ms_kashiwara(1, empty, "nope")


def test_box_moves():
    assert ms_f(1, P("[2,3]", 3)) == P("[1,3]", 3)
    assert ms_f_star(3, P("[1,2]", 3)) == P("[1,3]", 3)
    assert ms_e(1, P("[1]", 3)) == Multisegment(3)
    assert ms_e_star(2, P("[1,2]", 3)) == P("[1]", 3)


def test_weight():
    assert ms_weight(Multisegment(2)) == Weight((0, 0))
    assert ms_weight(P("[12]")) == Weight((-1, -1))
    assert ms_weight(P("[2]+[12]+2[1]")) == Weight((-3, -2))


def test_bridge():
    c = build_cartan("A3")
    assert bridge_word(2) == (2, 1, 2)
    assert bridge_word(3) == (3, 2, 1, 3, 2, 3)
    assert ms_to_binf(Multisegment(3)) == binf.highest(c)
    for i in c.indices:
        assert ms_to_binf(P(f"[{i}]", 3)) == binf.f(i, binf.highest(c))
    with pytest.raises(ValueError):
        binf_to_ms(binf.highest(build_cartan("D4")))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bridge_bijective_by_size(n):
    c = build_cartan(f"A{n}")
    for size, layer in binf.elements_by_depth(c, 4):
        mss = enumerate_multisegments(n, size)
        assert {binf_to_ms(b) for b in layer} == set(mss)
        assert all(binf_to_ms(ms_to_binf(m)) == m for m in mss)


def test_enumeration_counts():
    # multisegments with a given weight are counted by Kostant partitions
    c = build_cartan("A3")
    by_weight = {}
    for m in enumerate_multisegments(3, 5):
        by_weight[m] = ms_weight(m)
    weights = set(by_weight.values())
    for w in weights:
        beta = tuple(-x for x in w.coords)
        assert sum(1 for v in by_weight.values() if v == w) == kostant_count(c, beta)


OPS = {"f": (binf.f, ms_f), "e": (binf.e, ms_e), "f_star": (binf.f_star, ms_f_star), "e_star": (binf.e_star, ms_e_star)}


@pytest.mark.parametrize("n", [2, 3, 4])
@given(st.lists(st.tuples(st.sampled_from(sorted(OPS)), st.integers(1, 4)), max_size=14))
def test_realizations_intertwine(n, word):
    c = build_cartan(f"A{n}")
    b, m = binf.highest(c), Multisegment(n)
    for op, i in word:
        if i > n:
            continue
        fb, fm = OPS[op]
        b2, m2 = fb(i, b), fm(i, m)
        assert (b2 is None) == (m2 is None)
        if b2 is None:
            continue
        b, m = b2, m2
        assert binf_to_ms(b) == m
        for j in c.indices:
            assert binf.local_data(j, b) == ms_local_data(j, m)
        assert binf.weight(b) == ms_weight(m)


def test_oracle_suite():
    assert oracle_agreement(build_cartan("A3"), 100, seed=11).ok


def test_saito_matches_binf():
    rng = random.Random(4)
    c = build_cartan("A3")
    for _ in range(100):
        b = binf.random_element(c, rng, rng.randint(0, 10))
        i = rng.choice(c.indices)
        m = binf_to_ms(b)
        assert ms_saito(i, m) == binf_to_ms(binf.saito(i, b))
        assert ms_saito(i, m, star=True) == binf_to_ms(binf.saito(i, b, star=True))
