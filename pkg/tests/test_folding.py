import random

import pytest

from braidcrystal import binf
from braidcrystal.cartan import build_cartan
from braidcrystal.extcrystal import ExtElt, ext_F, ext_weight, one, random_ext
from braidcrystal.folding import (
    check_folded_relation,
    check_folding,
    fold_cartan,
    fold_E,
    fold_F,
    fold_R,
    folded_reflect,
    invariance_check,
    parse_sigma,
    random_fixed,
    sigma_ext,
    standard_folding,
)
from braidcrystal.multiseg import ParseError

A3 = build_cartan("A3")


def test_a3_to_b2():
    fd = fold_cartan("A3", "1:3,3:1,2:2")
    assert fd.name == "B2"
    assert fd.orbits == ((1, 3), (2,))
    assert fd.matrix == ((2, -1), (-2, 2))
    assert fd.m(1, 2) == 4


def test_d4_to_g2():
    fd = fold_cartan("D4", {1: 3, 3: 4, 4: 1})
    assert fd.name == "G2"
    assert fd.m(1, 2) == 6
    assert sorted(sum(fd.orbits, ())) == [1, 2, 3, 4]


@pytest.mark.parametrize("name,folded", [("E6", "F4"), ("D5", "C4"), ("A5", "B3"), ("D4", "G2")])
def test_standard_foldings(name, folded):
    fd = standard_folding(name)
    assert fd.name == folded
    # folded matrix is a finite Cartan matrix of the named family: one double or triple bond
    products = sorted(fd.matrix[a][b] * fd.matrix[b][a] for a in range(fd.rank) for b in range(a + 1, fd.rank))
    assert products[-1] == (3 if folded == "G2" else 2)


def test_identity_folding():
    fd = fold_cartan("A3", (1, 2, 3))
    assert fd.matrix == A3.matrix
    assert fd.name == "A3"


def test_invalid_automorphisms():
    with pytest.raises(ValueError):
        fold_cartan("A3", (2, 1, 3))
    with pytest.raises(ValueError):
        fold_cartan("A2", (2, 1))  # adjacent nodes in one orbit
    with pytest.raises(ValueError):
        fold_cartan("A3", (1, 1, 3))
    with pytest.raises(ParseError):
        parse_sigma("1-3", 3)
    with pytest.raises(ValueError):
        standard_folding("A2")


def test_sigma_examples():
    fd = fold_cartan("A3", "1:3,3:1")
    assert sigma_ext(fd, one(A3)).is_one()
    x = ext_F(1, 0, one(A3))
    assert sigma_ext(fd, x) == ext_F(3, 0, one(A3))
    assert not invariance_check(fd, x)
    assert invariance_check(fd, one(A3))


def test_triality_order():
    fd = standard_folding("D4")
    rng = random.Random(1)
    for _ in range(200):
        x = random_ext(fd.source, rng, rng.randint(0, 8))
        assert sigma_ext(fd, sigma_ext(fd, sigma_ext(fd, x))) == x


def test_fold_operators():
    fd = fold_cartan("A3", "1:3,3:1")
    x = fold_F(fd, 1, 2, one(A3))
    assert x == ExtElt.from_map(A3, {2: binf.f(1, binf.f(3, binf.highest(A3)))})
    assert fold_F(fd, 2, 0, one(A3)) == ext_F(2, 0, one(A3))
    assert fold_R(fd, 1, one(A3)).is_one()
    rng = random.Random(3)
    for _ in range(300):
        y = random_fixed(fd, rng, rng.randint(0, 8))
        j, k = rng.choice(fd.indices), rng.randint(-3, 3)
        assert invariance_check(fd, y)
        assert fold_E(fd, j, k, fold_F(fd, j, k, y)) == y
        assert invariance_check(fd, fold_F(fd, j, k, y))
        assert invariance_check(fd, fold_R(fd, j, y))
        assert ext_weight(fold_R(fd, j, y)) == folded_reflect(fd, j, ext_weight(y))


def test_folded_relations():
    fd = fold_cartan("A3", "1:3,3:1")
    assert check_folded_relation(fd, 1, 2, 100, seed=2).ok
    g2 = standard_folding("D4")
    assert check_folded_relation(g2, 1, 2, 20, seed=2).ok


def test_folding_compatibility_reports():
    for name in ("A3", "D4", "D5"):
        assert check_folding(standard_folding(name), 20, seed=4).ok
