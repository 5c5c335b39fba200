"""The crystal B(infinity) of a simply-laced finite type, realized by Lusztig data.

An element is stored as its Lusztig datum (convention +1) relative to the
reference word ``longest_word(c)``.  Changing to another reduced word of
``w_0`` runs the piecewise-linear transition maps along a chain of braid moves.

Operational rules used below, for the +1 convention:

* in a word starting with ``i`` the first entry is ``eps_i`` and
  ``f_i`` / ``e_i`` shift it by one, leaving the tail alone;
* in a word ending with ``i*`` the last entry is ``eps*_i`` and
  ``f*_i`` / ``e*_i`` act on it;
* the Saito reflection drops the first entry and rotates the word,
  ``(n_1, ..., n_l)`` on ``(i, i_2, ..., i_l)`` becoming ``(n_2, ..., n_l, 0)``
  on ``(i_2, ..., i_l, i*)``.

The -1 convention is stored letter by letter as well: entry ``t`` pairs with
letter ``i_t``.  It equals the reversed +1 datum on the dual word
``(i_l*, ..., i_1*)``.
"""

from __future__ import annotations

import dataclasses
import functools
import random
from typing import Iterator, Sequence

from .cartan import (
    Cartan,
    Move,
    Weight,
    _check_longest,
    braid_move_path,
    build_cartan,
    dual_word,
    initial_word,
    longest_word,
    roots_along,
    rotate_word,
)

OPS = ("e", "f", "e_max", "e_star", "f_star", "e_star_max")


def transition_rank2(coords: Sequence[int], m: int) -> tuple[int, ...]:
    """Lusztig datum change for one braid move of length ``m``.

    ``m = 2`` swaps the two entries.  ``m = 3`` maps data on ``(i, j, i)`` to
    data on ``(j, i, j)`` (and back; the map is an involution).
    """
    if m == 2:
        a, b = coords
        return (b, a)
    if m == 3:
        a, b, c = coords
        p = min(a, c)
        return (b + c - p, p, a + b - p)
    raise ValueError(f"no native transition map for m = {m}")


def _transport(coords: tuple[int, ...], moves: Sequence[Move]) -> tuple[int, ...]:
    if not moves:
        return coords
    x = list(coords)
    for mv in moves:
        p = mv.position
        if mv.m == 2:
            x[p], x[p + 1] = x[p + 1], x[p]
        else:
            a, b, c = x[p], x[p + 1], x[p + 2]
            q = a if a < c else c
            x[p], x[p + 1], x[p + 2] = b + c - q, q, a + b - q
    return tuple(x)


def _convert(c: Cartan, coords: tuple[int, ...], src: tuple[int, ...], dst: tuple[int, ...]) -> tuple[int, ...]:
    if src == dst:
        return coords
    return _transport(coords, braid_move_path(c, src, dst))


@dataclasses.dataclass(frozen=True)
class LusztigDatum:
    word: tuple[int, ...]
    coords: tuple[int, ...]
    convention: int = 1

    def __post_init__(self):
        if self.convention not in (1, -1):
            raise ValueError("convention must be +1 or -1")
        if len(self.word) != len(self.coords):
            raise ValueError("word and coords have different lengths")
        if any(x < 0 for x in self.coords):
            raise ValueError("Lusztig data are nonnegative")


@dataclasses.dataclass(frozen=True)
class BinfElt:
    """Element of B(infinity): +1 Lusztig datum on the reference word."""

    cartan: Cartan
    coords: tuple[int, ...]

    def is_highest(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"BinfElt({self.cartan.name}, {self.coords})"

    def __str__(self):
        if self.cartan.type.family == "A":
            from .multiseg import binf_to_ms

            return str(binf_to_ms(self))
        return f"{self.coords}"


def reference_word(c: Cartan) -> tuple[int, ...]:
    return longest_word(c)


@functools.lru_cache(maxsize=None)
def _words(c: Cartan, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # (word starting with i, its rotation which ends with i*)
    w = initial_word(c, (i,))
    return w, rotate_word(c, w)


def i_initial_word(c: Cartan, i: int) -> tuple[int, ...]:
    return _words(c, c.check_index(i))[0]


def highest(c: Cartan | str) -> BinfElt:
    if isinstance(c, str):
        c = build_cartan(c)
    return BinfElt(c, (0,) * c.ell)


def change_word(c: Cartan, d: LusztigDatum, target: Sequence[int]) -> LusztigDatum:
    """Rewrite a Lusztig datum relative to another reduced word of ``w_0``."""
    target = _check_longest(c, target)
    word = _check_longest(c, d.word)
    if d.convention == 1:
        return LusztigDatum(target, _convert(c, d.coords, word, target), 1)
    src = dual_word(c, word)
    dst = dual_word(c, target)
    rev = _convert(c, d.coords[::-1], src, dst)
    return LusztigDatum(target, rev[::-1], -1)


def datum(b: BinfElt, word: Sequence[int] | None = None, convention: int = 1) -> LusztigDatum:
    c = b.cartan
    ref = reference_word(c)
    word = ref if word is None else _check_longest(c, word)
    if convention == 1:
        return LusztigDatum(word, _convert(c, b.coords, ref, word), 1)
    if convention == -1:
        plus = _convert(c, b.coords, ref, dual_word(c, word))
        return LusztigDatum(word, plus[::-1], -1)
    raise ValueError("convention must be +1 or -1")


def from_datum(c: Cartan, d: LusztigDatum) -> BinfElt:
    ref = reference_word(c)
    return BinfElt(c, change_word(c, d, ref).coords)


def element(c: Cartan | str, word: Sequence[int], coords: Sequence[int], convention: int = 1) -> BinfElt:
    if isinstance(c, str):
        c = build_cartan(c)
    return from_datum(c, LusztigDatum(tuple(word), tuple(coords), convention))


def weight(b: BinfElt) -> Weight:
    c = b.cartan
    total = c.zero()
    for n, beta in zip(b.coords, _ref_roots(c)):
        if n:
            total = total - beta * n
    return total


@functools.lru_cache(maxsize=None)
def _ref_roots(c: Cartan) -> tuple[Weight, ...]:
    return tuple(roots_along(c, reference_word(c)))


def _head(b: BinfElt, i: int) -> tuple[int, ...]:
    c = b.cartan
    return _convert(c, b.coords, reference_word(c), _words(c, i)[0])


def _tail(b: BinfElt, i: int) -> tuple[int, ...]:
    c = b.cartan
    return _convert(c, b.coords, reference_word(c), _words(c, i)[1])


def _from_head(c: Cartan, i: int, coords: tuple[int, ...]) -> BinfElt:
    return BinfElt(c, _convert(c, coords, _words(c, i)[0], reference_word(c)))


def _from_tail(c: Cartan, i: int, coords: tuple[int, ...]) -> BinfElt:
    return BinfElt(c, _convert(c, coords, _words(c, i)[1], reference_word(c)))


def epsilon(i: int, b: BinfElt) -> int:
    return _head(b, b.cartan.check_index(i))[0]


def epsilon_star(i: int, b: BinfElt) -> int:
    return _tail(b, b.cartan.check_index(i))[-1]


def phi(i: int, b: BinfElt) -> int:
    return epsilon(i, b) + b.cartan.pair(i, weight(b))


def phi_star(i: int, b: BinfElt) -> int:
    return epsilon_star(i, b) + b.cartan.pair(i, weight(b))


def local_data(i: int, b: BinfElt) -> tuple[int, int, int, int]:
    """``(eps_i, phi_i, eps*_i, phi*_i)``."""
    c = b.cartan
    c.check_index(i)
    h = c.pair(i, weight(b))
    eps = epsilon(i, b)
    eps_star = epsilon_star(i, b)
    return eps, eps + h, eps_star, eps_star + h


def f(i: int, b: BinfElt, k: int = 1) -> BinfElt:
    """``f_i^k(b)``."""
    c = b.cartan
    n = _head(b, c.check_index(i))
    return _from_head(c, i, (n[0] + k,) + n[1:])


def e(i: int, b: BinfElt, k: int = 1) -> BinfElt | None:
    """``e_i^k(b)``, or ``None`` when it vanishes."""
    c = b.cartan
    n = _head(b, c.check_index(i))
    if n[0] < k:
        return None
    return _from_head(c, i, (n[0] - k,) + n[1:])


def e_max(i: int, b: BinfElt) -> BinfElt:
    c = b.cartan
    n = _head(b, c.check_index(i))
    return _from_head(c, i, (0,) + n[1:]) if n[0] else b


def f_star(i: int, b: BinfElt, k: int = 1) -> BinfElt:
    c = b.cartan
    n = _tail(b, c.check_index(i))
    return _from_tail(c, i, n[:-1] + (n[-1] + k,))


def e_star(i: int, b: BinfElt, k: int = 1) -> BinfElt | None:
    c = b.cartan
    n = _tail(b, c.check_index(i))
    if n[-1] < k:
        return None
    return _from_tail(c, i, n[:-1] + (n[-1] - k,))


def e_star_max(i: int, b: BinfElt) -> BinfElt:
    c = b.cartan
    n = _tail(b, c.check_index(i))
    return _from_tail(c, i, n[:-1] + (0,)) if n[-1] else b


def kashiwara(i: int, b: BinfElt, op: str) -> BinfElt | None:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; expected one of {OPS}") from None
    return fn(i, b)


_OPS = {
    "e": e,
    "f": f,
    "e_max": e_max,
    "e_star": e_star,
    "f_star": f_star,
    "e_star_max": e_star_max,
}


def saito(i: int, b: BinfElt, star: bool = False, method: str = "rotation") -> BinfElt:
    """Saito reflection composed with the projection: ``T~_i(b)`` or ``T~*_i(b)``.

    ``method="rotation"`` rotates the Lusztig datum; ``method="kashiwara"``
    evaluates ``f_i^{phi*_i} e*_i^{eps*_i}`` (resp. the starred mirror) after
    the projection, using only the crystal operators.
    """
    c = b.cartan
    c.check_index(i)
    if method == "rotation":
        if not star:
            n = _head(b, i)
            return _from_tail(c, i, n[1:] + (0,))
        n = _tail(b, i)
        return _from_head(c, i, (0,) + n[:-1])
    if method != "kashiwara":
        raise ValueError(f"unknown method {method!r}")
    if not star:
        b0 = e_max(i, b)
        s = epsilon_star(i, b0)
        b1 = e_star(i, b0, s) if s else b0
        return f(i, b1, phi_star(i, b0)) if phi_star(i, b0) else b1
    b0 = e_star_max(i, b)
    s = epsilon(i, b0)
    b1 = e(i, b0, s) if s else b0
    p = phi(i, b0)
    return f_star(i, b1, p) if p else b1


def relabel(b: BinfElt, perm: Sequence[int]) -> BinfElt:
    """Image under the diagram automorphism ``i -> perm[i-1]``."""
    c = b.cartan
    ref = reference_word(c)
    word = tuple(perm[i - 1] for i in ref)
    return BinfElt(c, _convert(c, b.coords, word, ref))


def zeta_b(b: BinfElt) -> BinfElt:
    """The involution induced by ``i -> i*``."""
    return relabel(b, b.cartan.star)


def random_element(c: Cartan, rng: random.Random, length: int) -> BinfElt:
    """Apply a uniformly random string of ``length`` lowering operators to 1."""
    b = highest(c)
    for _ in range(length):
        b = f(rng.choice(c.indices), b)
    return b


def elements_by_depth(c: Cartan, depth: int) -> Iterator[tuple[int, set[BinfElt]]]:
    """All elements of height ``0, 1, ..., depth``, generated by lowering operators."""
    layer = {highest(c)}
    yield 0, layer
    for h in range(1, depth + 1):
        layer = {f(i, b) for b in layer for i in c.indices}
        yield h, layer
