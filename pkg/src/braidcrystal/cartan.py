"""Finite simply-laced root data, reduced words of the longest element and braid moves.

Indices are 1-based throughout, following the usual Dynkin labelling
(Kac for A and D, Bourbaki for E).  Reduced words are plain tuples of indices.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from typing import Iterable, Sequence

_TYPE_RE = re.compile(r"^\s*([ADEade])\s*(\d+)\s*$")


@dataclasses.dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper()
        object.__setattr__(self, "family", family)
        if family == "A" and self.rank >= 1:
            return
        if family == "D" and self.rank >= 4:
            return
        if family == "E" and self.rank in (6, 7, 8):
            return
        raise ValueError(f"unsupported Cartan type {family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings like ``"A2"``, ``"d4"`` or ``"E6"``."""
        match = _TYPE_RE.match(text)
        if match is None:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclasses.dataclass(frozen=True)
class Weight:
    """Element of the root lattice, written in the basis of simple roots."""

    coords: tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def simple(cls, rank: int, i: int) -> "Weight":
        v = [0] * rank
        v[i - 1] = 1
        return cls(tuple(v))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def height(self) -> int:
        return sum(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c:
                terms.append(f"{c}a{i}" if c != 1 else f"a{i}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclasses.dataclass(frozen=True)
class Move:
    """A braid move on a reduced word: ``m`` letters starting at ``position`` (0-based)."""

    position: int
    m: int


def _dynkin_edges(ct: CartanType) -> list[tuple[int, int]]:
    n = ct.rank
    if ct.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if ct.family == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)]
        edges.append((n - 2, n))
        return edges
    # Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, n)]
    return edges


def _expected_star(ct: CartanType) -> tuple[int, ...]:
    n = ct.rank
    star = list(range(1, n + 1))
    if ct.family == "A":
        star = [n + 1 - i for i in range(1, n + 1)]
    elif ct.family == "D" and n % 2 == 1:
        star[n - 2], star[n - 1] = n, n - 1
    elif ct.family == "E" and n == 6:
        star = [6, 2, 5, 4, 3, 1]
    return tuple(star)


class Cartan:
    """Cartan datum of a finite simply-laced type.

    Instances are cached per type by :func:`build_cartan`; equality and hashing
    go through the type so elements carrying a datum stay cheap to compare.
    """

    def __init__(self, ct: CartanType, matrix: Sequence[Sequence[int]]):
        self.type = ct
        self.rank = ct.rank
        self.matrix = tuple(tuple(row) for row in matrix)
        self.indices = tuple(range(1, self.rank + 1))
        self.positive_roots = _positive_roots(self.matrix)
        self.ell = len(self.positive_roots)
        self.star = self._compute_star()

    @property
    def name(self) -> str:
        return str(self.type)

    def __repr__(self):
        return f"Cartan({self.name})"

    def __eq__(self, other):
        return isinstance(other, Cartan) and self.type == other.type

    def __hash__(self):
        return hash(("Cartan", self.type))

    def __reduce__(self):
        return (build_cartan, (self.type,))

    def a(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def m(self, i: int, j: int) -> int:
        """Order of ``s_i s_j``; 2 for commuting nodes, 3 for adjacent ones."""
        if i == j:
            return 1
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.a(i, j) * self.a(j, i)]

    def star_of(self, i: int) -> int:
        return self.star[i - 1]

    def pair(self, i: int, w: Weight) -> int:
        """``<h_i, w>``."""
        row = self.matrix[i - 1]
        return sum(a * x for a, x in zip(row, w.coords))

    def reflect(self, i: int, w: Weight) -> Weight:
        return w - Weight.simple(self.rank, i) * self.pair(i, w)

    def simple_root(self, i: int) -> Weight:
        return Weight.simple(self.rank, i)

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise ValueError(f"index {i!r} out of range for {self.name}")
        return i

    def _compute_star(self) -> tuple[int, ...]:
        w0 = weyl_matrix(self, longest_word(self))
        star = []
        for i in self.indices:
            img = tuple(-x for x in w0[i - 1])
            j = img.index(1) + 1
            star.append(j)
        return tuple(star)


def _positive_roots(matrix) -> tuple[tuple[int, ...], ...]:
    n = len(matrix)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                p = sum(matrix[i][k] * r[k] for k in range(n))
                s = list(r)
                s[i] -= p
                s = tuple(s)
                if all(x >= 0 for x in s) and s not in roots:
                    roots.add(s)
                    new.append(s)
        frontier = new
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@functools.lru_cache(maxsize=None)
def build_cartan(ct: CartanType | str) -> Cartan:
    """Tabulate the Cartan datum of a finite simply-laced type."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    n = ct.rank
    matrix = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(ct):
        matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = -1
    c = Cartan(ct, matrix)
    assert c.star == _expected_star(ct), (c.star, _expected_star(ct))
    return c


# ---------------------------------------------------------------------------
# Weyl group words


def weyl_matrix(c: Cartan, letters: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Images ``w(alpha_j)`` of the simple roots under ``w = s_{i_1} ... s_{i_t}``.

    Returned as a tuple indexed by ``j - 1``; hashable, so it doubles as a
    faithful key for the Weyl group element.
    """
    n = c.rank
    cols = [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    for i in letters:
        row = c.matrix[i - 1]
        ci = cols[i - 1]
        new = []
        for j in range(n):
            a = row[j]
            if a:
                new.append([x - a * y for x, y in zip(cols[j], ci)])
            else:
                new.append(cols[j])
        cols = new
    return tuple(tuple(col) for col in cols)


def _roots_along(c: Cartan, letters: Sequence[int]) -> list[tuple[int, ...]]:
    n = c.rank
    cols = [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    out = []
    for i in letters:
        ci = cols[i - 1]
        out.append(tuple(ci))
        row = c.matrix[i - 1]
        cols = [[x - row[j] * y for x, y in zip(cols[j], ci)] if row[j] else cols[j] for j in range(n)]
    return out


def is_reduced(c: Cartan, letters: Sequence[int]) -> bool:
    for beta in _roots_along(c, letters):
        if any(x < 0 for x in beta):
            return False
    return True


def roots_along(c: Cartan, word: Sequence[int]) -> list[Weight]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`` for a reduced word."""
    roots = _roots_along(c, word)
    if any(any(x < 0 for x in beta) for beta in roots):
        raise ValueError(f"word {tuple(word)} is not reduced")
    return [Weight(beta) for beta in roots]


def is_longest(c: Cartan, letters: Sequence[int]) -> bool:
    return len(letters) == c.ell and is_reduced(c, letters)


def _check_longest(c: Cartan, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    for i in word:
        c.check_index(i)
    if not is_longest(c, word):
        raise ValueError(f"{word} is not a reduced word of the longest element of {c.name}")
    return word


@functools.lru_cache(maxsize=None)
def initial_word(c: Cartan, prefix: tuple[int, ...] = ()) -> tuple[int, ...]:
    """Lexicographically least reduced word of ``w_0`` starting with ``prefix``."""
    if not is_reduced(c, prefix):
        raise ValueError(f"prefix {prefix} is not reduced")
    word = list(prefix)
    w = weyl_matrix(c, word)
    while True:
        for i in c.indices:
            if all(x >= 0 for x in w[i - 1]):
                word.append(i)
                w = weyl_matrix(c, word)
                break
        else:
            return tuple(word)


def longest_word(c: Cartan) -> tuple[int, ...]:
    return initial_word(c, ())


def rotate_word(c: Cartan, word: Sequence[int]) -> tuple[int, ...]:
    """``(i_1, ..., i_l) -> (i_2, ..., i_l, i_1*)``."""
    word = _check_longest(c, word)
    return word[1:] + (c.star_of(word[0]),)


def rotate_word_back(c: Cartan, word: Sequence[int]) -> tuple[int, ...]:
    """``(i_1, ..., i_l) -> (i_l*, i_1, ..., i_{l-1})``; inverse of :func:`rotate_word`."""
    word = _check_longest(c, word)
    return (c.star_of(word[-1]),) + word[:-1]


def dual_word(c: Cartan, word: Sequence[int]) -> tuple[int, ...]:
    """``(i_1, ..., i_l) -> (i_l*, ..., i_1*)``."""
    return tuple(c.star_of(i) for i in reversed(tuple(word)))


# ---------------------------------------------------------------------------
# braid moves


def apply_move(word: list[int], move: Move) -> None:
    p, m = move.position, move.m
    a, b = word[p], word[p + 1]
    if m == 2:
        word[p], word[p + 1] = b, a
        return
    block = word[p:p + m]
    if block != [a if k % 2 == 0 else b for k in range(m)]:
        raise ValueError(f"no braid move of length {m} at position {p} in {word}")
    word[p:p + m] = [b if k % 2 == 0 else a for k in range(m)]


def apply_moves(word: Sequence[int], moves: Iterable[Move]) -> tuple[int, ...]:
    out = list(word)
    for mv in moves:
        apply_move(out, mv)
    return tuple(out)


def _bring_to_front(c: Cartan, word: list[int], start: int, s: int, moves: list[Move]) -> None:
    # s must be a left descent of the element spelled by word[start:]
    t = word[start]
    if t == s:
        return
    m = c.m(s, t)
    for k in range(m - 1):
        _bring_to_front(c, word, start + 1 + k, s if k % 2 == 0 else t, moves)
    mv = Move(start, m)
    apply_move(word, mv)
    moves.append(mv)


@functools.lru_cache(maxsize=8192)
def _path(c: Cartan, src: tuple[int, ...], dst: tuple[int, ...]) -> tuple[Move, ...]:
    for i in src + dst:
        c.check_index(i)
    if not (is_reduced(c, src) and is_reduced(c, dst)):
        raise ValueError("braid_move_path needs reduced words")
    if len(src) != len(dst) or weyl_matrix(c, src) != weyl_matrix(c, dst):
        raise ValueError(f"{src} and {dst} represent different Weyl group elements")
    word = list(src)
    moves: list[Move] = []
    for p, s in enumerate(dst):
        _bring_to_front(c, word, p, s, moves)
    assert tuple(word) == dst
    return tuple(moves)


def braid_move_path(c: Cartan, src: Sequence[int], dst: Sequence[int]) -> tuple[Move, ...]:
    """Braid moves turning the reduced word ``src`` into ``dst``.

    Built letter by letter: each letter of ``dst`` is pulled to the front of the
    remaining suffix by recursively exposing the alternating ``s t s ...`` prefix
    first.  Paths are not minimal but are deterministic and cached.
    """
    return _path(c, tuple(src), tuple(dst))
