"""Multisegment realization of B(infinity) in type A_n.

A segment ``[a, b]`` (``1 <= a <= b <= n``) stands for the positive root
``alpha_a + ... + alpha_b``.  ``f_i`` adds a box on the left of a segment
(``[i+1, b] -> [i, b]`` or a new ``[i]``), ``f*_i`` adds one on the right
(``[a, i-1] -> [a, i]`` or a new ``[i]``).  The segment acted on is picked by
the signature rule:

* unstarred: segments with left end ``i`` carry ``-``, left end ``i+1`` carry
  ``+``; read them by right end descending, ``-`` before ``+`` on ties;
* starred: segments with right end ``i`` carry ``-``, right end ``i-1`` carry
  ``+``; read them by left end ascending, ``-`` before ``+`` on ties.

Adjacent ``+-`` pairs cancel.  ``eps`` counts the surviving ``-``; ``e`` acts on
the rightmost surviving ``-`` and ``f`` on the leftmost surviving ``+``.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from collections import Counter
from typing import Iterable, Mapping

from . import binf
from .binf import BinfElt
from .cartan import Cartan, CartanType, Weight, build_cartan

Segment = tuple[int, int]


class ParseError(ValueError):
    """Malformed text input; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _canonical_key(seg: Segment):
    a, b = seg
    return (-b, -a)


@dataclasses.dataclass(frozen=True)
class Multisegment:
    n: int
    segments: tuple[tuple[Segment, int], ...] = ()

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[Segment, int] | Iterable[Segment]) -> "Multisegment":
        if not isinstance(counts, Mapping):
            counts = Counter(counts)
        items = []
        for (a, b), mult in counts.items():
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            if not 1 <= a <= b <= n:
                raise ValueError(f"segment [{a},{b}] outside 1..{n}")
            items.append(((a, b), mult))
        items.sort(key=lambda t: _canonical_key(t[0]))
        return cls(n, tuple(items))

    @classmethod
    def parse(cls, text: str, n: int) -> "Multisegment":
        return parse_multisegment(text, n)

    def counts(self) -> dict[Segment, int]:
        return dict(self.segments)

    def is_empty(self) -> bool:
        return not self.segments

    def size(self) -> int:
        """Number of boxes, i.e. the height of ``-wt``."""
        return sum((b - a + 1) * mult for (a, b), mult in self.segments)

    def __str__(self):
        if not self.segments:
            return "0"
        parts = []
        for (a, b), mult in self.segments:
            seg = f"[{a}]" if a == b else f"[{a},{b}]"
            parts.append(f"{mult}{seg}")
        return "+".join(parts)

    def __repr__(self):
        return f"Multisegment({self.n}, {str(self)!r})"


_TOKEN = re.compile(r"(\d*)\[(\d+)(?:,(\d+))?\]")


def parse_multisegment(text: str, n: int) -> Multisegment:
    """Parse ``"2[2]+3[1,2]+4[1]"``; ``"0"``, ``"∅"`` and ``""`` are the empty multisegment.

    A two-digit segment without a comma, such as ``[12]``, reads as ``[1,2]``
    whenever the number itself exceeds the rank.
    """
    stripped = "".join(text.split())
    if stripped in ("", "0", "∅"):
        return Multisegment(n)
    counts: Counter = Counter()
    pos = 0
    while True:
        match = _TOKEN.match(stripped, pos)
        if match is None:
            raise ParseError("expected a term like 2[1,3]", stripped, pos)
        mult = int(match.group(1)) if match.group(1) else 1
        a = int(match.group(2))
        b = int(match.group(3)) if match.group(3) else a
        if match.group(3) is None and len(match.group(2)) == 2 and a > n:
            # compact form [12] for [1,2] when the rank leaves no ambiguity
            a, b = int(match.group(2)[0]), int(match.group(2)[1])
        if not 1 <= a <= b <= n:
            raise ParseError(f"segment [{a},{b}] is not inside [1,{n}]", stripped, pos)
        counts[(a, b)] += mult
        pos = match.end()
        if pos == len(stripped):
            break
        if stripped[pos] != "+":
            raise ParseError("expected '+'", stripped, pos)
        pos += 1
    return Multisegment.from_counts(n, counts)


def _signature(i: int, m: Multisegment, star: bool) -> tuple[list[Segment], list[Segment]]:
    entries = []
    for (a, b), mult in m.segments:
        if not star:
            if a == i:
                entries.extend([((-b, 0), -1, (a, b))] * mult)
            elif a == i + 1:
                entries.extend([((-b, 1), 1, (a, b))] * mult)
        else:
            if b == i:
                entries.extend([((a, 0), -1, (a, b))] * mult)
            elif b == i - 1:
                entries.extend([((a, 1), 1, (a, b))] * mult)
    entries.sort(key=lambda t: t[0])
    plus: list[Segment] = []
    minus: list[Segment] = []
    for _, sign, seg in entries:
        if sign > 0:
            plus.append(seg)
        elif plus:
            plus.pop()
        else:
            minus.append(seg)
    return minus, plus


def _check(i: int, m: Multisegment) -> None:
    if not 1 <= i <= m.n:
        raise ValueError(f"index {i} out of range for A{m.n}")


def ms_epsilon(i: int, m: Multisegment) -> int:
    _check(i, m)
    return len(_signature(i, m, False)[0])


def ms_epsilon_star(i: int, m: Multisegment) -> int:
    _check(i, m)
    return len(_signature(i, m, True)[0])


def ms_weight(m: Multisegment) -> Weight:
    v = [0] * m.n
    for (a, b), mult in m.segments:
        for k in range(a, b + 1):
            v[k - 1] -= mult
    return Weight(tuple(v))


def _pair(i: int, w: Weight) -> int:
    v = w.coords
    out = 2 * v[i - 1]
    if i > 1:
        out -= v[i - 2]
    if i < len(v):
        out -= v[i]
    return out


def ms_local_data(i: int, m: Multisegment) -> tuple[int, int, int, int]:
    """``(eps_i, phi_i, eps*_i, phi*_i)``."""
    _check(i, m)
    h = _pair(i, ms_weight(m))
    eps = ms_epsilon(i, m)
    eps_star = ms_epsilon_star(i, m)
    return eps, eps + h, eps_star, eps_star + h


def _replace(m: Multisegment, old: Segment | None, new: Segment | None) -> Multisegment:
    counts = m.counts()
    if old is not None:
        counts[old] -= 1
    if new is not None and new[0] <= new[1]:
        counts[new] = counts.get(new, 0) + 1
    return Multisegment.from_counts(m.n, counts)


def ms_f(i: int, m: Multisegment) -> Multisegment:
    _check(i, m)
    _, plus = _signature(i, m, False)
    if not plus:
        return _replace(m, None, (i, i))
    a, b = plus[0]
    return _replace(m, (a, b), (i, b))


def ms_e(i: int, m: Multisegment) -> Multisegment | None:
    _check(i, m)
    minus, _ = _signature(i, m, False)
    if not minus:
        return None
    a, b = minus[-1]
    return _replace(m, (a, b), (i + 1, b))


def ms_f_star(i: int, m: Multisegment) -> Multisegment:
    _check(i, m)
    _, plus = _signature(i, m, True)
    if not plus:
        return _replace(m, None, (i, i))
    a, b = plus[0]
    return _replace(m, (a, b), (a, i))


def ms_e_star(i: int, m: Multisegment) -> Multisegment | None:
    _check(i, m)
    minus, _ = _signature(i, m, True)
    if not minus:
        return None
    a, b = minus[-1]
    return _replace(m, (a, b), (a, i - 1))


def _iterate_max(op, i, m):
    while True:
        nxt = op(i, m)
        if nxt is None:
            return m
        m = nxt


def ms_kashiwara(i: int, m: Multisegment, op: str) -> Multisegment | None:
    if op == "e":
        return ms_e(i, m)
    if op == "f":
        return ms_f(i, m)
    if op == "e_star":
        return ms_e_star(i, m)
    if op == "f_star":
        return ms_f_star(i, m)
    if op == "e_max":
        return _iterate_max(ms_e, i, m)
    if op == "e_star_max":
        return _iterate_max(ms_e_star, i, m)
    raise ValueError(f"unknown operator {op!r}")


def ms_saito(i: int, m: Multisegment, star: bool = False) -> Multisegment:
    """``T~_i`` (or ``T~*_i``) computed with the multisegment operators alone."""
    if not star:
        m = ms_kashiwara(i, m, "e_max")
        _, _, s, p = ms_local_data(i, m)
        for _ in range(s):
            m = ms_e_star(i, m)
        for _ in range(p):
            m = ms_f(i, m)
        return m
    m = ms_kashiwara(i, m, "e_star_max")
    s, p, _, _ = ms_local_data(i, m)
    for _ in range(s):
        m = ms_e(i, m)
    for _ in range(p):
        m = ms_f_star(i, m)
    return m


# ---------------------------------------------------------------------------
# bridge to Lusztig data


@functools.lru_cache(maxsize=None)
def bridge_word(n: int) -> tuple[int, ...]:
    """``(n, n-1, ..., 1, n, ..., 2, ..., n)``.

    Its roots enumerate the segments in canonical order (right end
    descending, then left end descending), so multiplicities are the Lusztig
    datum on this word.
    """
    word = []
    for r in range(1, n + 1):
        word.extend(range(n, r - 1, -1))
    return tuple(word)


@functools.lru_cache(maxsize=None)
def _bridge_segments(n: int) -> tuple[Segment, ...]:
    from .cartan import roots_along

    c = build_cartan(CartanType("A", n))
    segs = []
    for beta in roots_along(c, bridge_word(n)):
        support = [k + 1 for k, x in enumerate(beta.coords) if x]
        segs.append((support[0], support[-1]))
    return tuple(segs)


def _type_a(c: Cartan) -> int:
    if c.type.family != "A":
        raise ValueError(f"multisegments only realize type A, not {c.name}")
    return c.rank


def ms_to_binf(m: Multisegment) -> BinfElt:
    c = build_cartan(CartanType("A", m.n))
    counts = m.counts()
    coords = tuple(counts.get(seg, 0) for seg in _bridge_segments(m.n))
    return binf.element(c, bridge_word(m.n), coords)


def binf_to_ms(b: BinfElt) -> Multisegment:
    n = _type_a(b.cartan)
    d = binf.datum(b, bridge_word(n))
    return Multisegment.from_counts(n, dict(zip(_bridge_segments(n), d.coords)))


def enumerate_multisegments(n: int, size: int) -> list[Multisegment]:
    """All multisegments with exactly ``size`` boxes."""
    segs = sorted(((a, b) for a in range(1, n + 1) for b in range(a, n + 1)), key=_canonical_key)
    out: list[Multisegment] = []

    def rec(k: int, left: int, acc: dict):
        if left == 0:
            out.append(Multisegment.from_counts(n, acc))
            return
        if k == len(segs):
            return
        a, b = segs[k]
        length = b - a + 1
        for mult in range(left // length + 1):
            if mult:
                acc[segs[k]] = mult
            rec(k + 1, left - mult * length, acc)
            acc.pop(segs[k], None)

    rec(0, size, {})
    return out
