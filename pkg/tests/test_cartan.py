import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcrystal.cartan import (
    CartanType,
    Move,
    Weight,
    apply_moves,
    braid_move_path,
    build_cartan,
    dual_word,
    initial_word,
    is_longest,
    is_reduced,
    longest_word,
    roots_along,
    rotate_word,
    rotate_word_back,
    weyl_matrix,
)


def w(*xs):
    return Weight(tuple(xs))


def test_a2_datum():
    c = build_cartan("A2")
    assert c.matrix == ((2, -1), (-1, 2))
    assert c.star == (2, 1)
    assert c.m(1, 2) == 3


def test_a1_datum():
    c = build_cartan("A1")
    assert c.matrix == ((2,),)
    assert c.star == (1,)


def test_d4_datum():
    c = build_cartan("D4")
    assert c.star == (1, 2, 3, 4)
    assert [c.m(2, j) for j in (1, 3, 4)] == [3, 3, 3]
    assert c.m(1, 3) == c.m(1, 4) == c.m(3, 4) == 2
    assert c.ell == 12


def _closure_root_count(c):
    # independent count: orbit of the simple roots under the Weyl group, positive half
    seen = set()
    frontier = [tuple(1 if k == i else 0 for k in range(c.rank)) for i in range(c.rank)]
    while frontier:
        r = frontier.pop()
        if r in seen:
            continue
        seen.add(r)
        for i in c.indices:
            frontier.append(c.reflect(i, Weight(r)).coords)
    return sum(1 for r in seen if all(x >= 0 for x in r))


@pytest.mark.parametrize("name,ell", [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("D4", 12), ("D5", 20), ("E6", 36)])
def test_number_of_positive_roots(name, ell):
    c = build_cartan(name)
    assert c.ell == ell == _closure_root_count(c)
    assert len(longest_word(c)) == ell


@pytest.mark.parametrize("name,star", [("A3", (3, 2, 1)), ("D5", (1, 2, 3, 5, 4)), ("E6", (6, 2, 5, 4, 3, 1)), ("E7", tuple(range(1, 8)))])
def test_star(name, star):
    c = build_cartan(name)
    assert c.star == star
    for i, j in itertools.product(c.indices, repeat=2):
        assert c.a(i, j) == c.a(c.star_of(i), c.star_of(j))
        assert c.star_of(c.star_of(i)) == i


def test_type_parsing_and_bounds():
    assert CartanType.parse("d4") == CartanType("D", 4)
    assert str(CartanType.parse(" e6 ")) == "E6"
    for bad in ("A0", "D3", "E9", "B2", "X"):
        with pytest.raises(ValueError):
            build_cartan(bad)


def test_reflect():
    c = build_cartan("A2")
    assert c.reflect(1, w(1, 0)) == w(-1, 0)
    assert c.reflect(1, w(0, 1)) == w(1, 1)
    assert c.reflect(2, w(0, 0)) == w(0, 0)


@given(st.sampled_from(["A2", "A3", "D4"]), st.data())
def test_reflect_involution(name, data):
    c = build_cartan(name)
    v = Weight(tuple(data.draw(st.integers(-5, 5)) for _ in c.indices))
    i = data.draw(st.sampled_from(c.indices))
    assert c.reflect(i, c.reflect(i, v)) == v


def test_roots_along():
    c = build_cartan("A2")
    assert roots_along(c, (1, 2, 1)) == [w(1, 0), w(1, 1), w(0, 1)]
    assert roots_along(c, (2, 1, 2)) == [w(0, 1), w(1, 1), w(1, 0)]
    assert roots_along(build_cartan("A1"), (1,)) == [w(1)]
    with pytest.raises(ValueError):
        roots_along(c, (1, 1))


def test_is_reduced():
    c = build_cartan("A2")
    assert not is_reduced(c, (1, 1))
    assert is_reduced(c, (1, 2, 1))
    assert not is_reduced(c, (1, 2, 1, 2))


def test_longest_word():
    assert longest_word(build_cartan("A2")) == (1, 2, 1)
    assert longest_word(build_cartan("A1")) == (1,)
    c = build_cartan("A3")
    word = longest_word(c)
    assert len(word) == 6
    assert sorted(r.coords for r in roots_along(c, word)) == sorted(c.positive_roots)


def _all_longest_words(c):
    return [p for p in itertools.product(c.indices, repeat=c.ell) if is_longest(c, p)]


def test_longest_word_is_lex_least():
    for name in ("A2", "A3"):
        c = build_cartan(name)
        assert longest_word(c) == min(_all_longest_words(c))


def test_rotate_word():
    assert rotate_word(build_cartan("A2"), (1, 2, 1)) == (2, 1, 2)
    assert rotate_word(build_cartan("A1"), (1,)) == (1,)
    c = build_cartan("A3")
    assert rotate_word(c, (1, 2, 1, 3, 2, 1)) == (2, 1, 3, 2, 1, 3)
    assert is_reduced(c, (2, 1, 3, 2, 1, 3))
    with pytest.raises(ValueError):
        rotate_word(c, (1, 2, 1))


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "D4", "D5", "E6"])
def test_full_rotation_is_star(name):
    c = build_cartan(name)
    word = longest_word(c)
    rotated = word
    for _ in range(c.ell):
        rotated = rotate_word(c, rotated)
    assert rotated == tuple(c.star_of(i) for i in word)
    assert rotate_word_back(c, rotate_word(c, word)) == word
    assert is_longest(c, dual_word(c, word))


def test_braid_move_path_examples():
    c = build_cartan("A2")
    assert braid_move_path(c, (1, 2, 1), (2, 1, 2)) == (Move(0, 3),)
    assert braid_move_path(c, (1, 2, 1), (1, 2, 1)) == ()
    c3 = build_cartan("A3")
    assert braid_move_path(c3, (1, 3), (3, 1)) == (Move(0, 2),)
    with pytest.raises(ValueError):
        braid_move_path(c3, (1, 2), (2, 1))
    with pytest.raises(ValueError):
        braid_move_path(c3, (1, 1), (1, 1))


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_braid_move_paths_between_all_words(name):
    c = build_cartan(name)
    if name == "A3":
        words = _all_longest_words(c)
    else:
        words = sorted({initial_word(c, (i,)) for i in c.indices} | {longest_word(c)})
        words += [rotate_word(c, x) for x in words] + [dual_word(c, x) for x in words]
    assert len(words) > 4
    for a in words[:12]:
        for b in words[:12]:
            there = braid_move_path(c, a, b)
            assert apply_moves(a, there) == b
            assert apply_moves(apply_moves(a, there), braid_move_path(c, b, a)) == a


def test_e8_longest_word():
    c = build_cartan("E8")
    word = longest_word(c)
    assert len(word) == 120
    assert is_longest(c, word)
    assert weyl_matrix(c, word) == tuple(tuple(-x for x in row) for row in weyl_matrix(c, ()))
