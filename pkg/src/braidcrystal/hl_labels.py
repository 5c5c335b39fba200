"""Affine highest-weight labels for extended multisegments of type A2.

A label is a finite multiset of pairs ``(i, a)`` with ``i in {1, 2}`` and
``a - i`` odd, written ``2(2,5)+3(1,4)+4(2,3)``.  The component at position
``k`` of an extended multisegment is labelled through the dual shift
``cdual^k``.
"""

from __future__ import annotations

import dataclasses
import re
from collections import Counter
from typing import Iterable, Mapping

from .braid import BraidWord, braid_apply
from .cartan import build_cartan
from .extcrystal import ExtElt, ext_F, one
from .multiseg import ParseError, binf_to_ms

Pair = tuple[int, int]


def _check_pair(pair: Pair) -> Pair:
    i, a = pair
    if i not in (1, 2) or (a - i) % 2 != 1:
        raise ValueError(f"({i},{a}) is not a valid label: need i in {{1,2}} and a - i odd")
    return (i, a)


@dataclasses.dataclass(frozen=True)
class AffineLabel:
    """Multiset of pairs, stored sorted by ``a`` descending."""

    items: tuple[tuple[Pair, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[Pair, int] | Iterable[Pair]) -> "AffineLabel":
        if not isinstance(counts, Mapping):
            counts = Counter(counts)
        items = []
        for pair, mult in counts.items():
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                items.append((_check_pair(pair), mult))
        items.sort(key=lambda t: (-t[0][1], t[0][0]))
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> "AffineLabel":
        stripped = "".join(text.split())
        if stripped in ("", "0"):
            return cls()
        counts: Counter = Counter()
        pos = 0
        term = re.compile(r"(\d*)\((\d+),(-?\d+)\)")
        while True:
            m = term.match(stripped, pos)
            if m is None:
                raise ParseError("expected a term like 2(1,4)", stripped, pos)
            pair = (int(m.group(2)), int(m.group(3)))
            try:
                _check_pair(pair)
            except ValueError as exc:
                raise ParseError(str(exc), stripped, pos) from None
            counts[pair] += int(m.group(1)) if m.group(1) else 1
            pos = m.end()
            if pos == len(stripped):
                break
            if stripped[pos] != "+":
                raise ParseError("expected '+'", stripped, pos)
            pos += 1
        return cls.from_counts(counts)

    def counts(self) -> Counter:
        return Counter(dict(self.items))

    def __add__(self, other: "AffineLabel") -> "AffineLabel":
        return AffineLabel.from_counts(self.counts() + other.counts())

    def __len__(self):
        return sum(m for _, m in self.items)

    def __str__(self):
        if not self.items:
            return "0"
        return "+".join(f"{m if m > 1 else ''}({i},{a})" for (i, a), m in self.items)

    def to_json(self) -> list[list[int]]:
        return [[i, a, m] for (i, a), m in self.items]

    @classmethod
    def from_json(cls, data: list) -> "AffineLabel":
        return cls.from_counts({(int(i), int(a)): int(m) for i, a, m in data})

    def map(self, fn) -> "AffineLabel":
        out: Counter = Counter()
        for pair, m in self.items:
            out[fn(pair)] += m
        return AffineLabel.from_counts(out)


def cdual(k: int, pair: Pair) -> Pair:
    i, a = _check_pair(pair)
    if k % 2 == 0:
        return (i, a + 3 * k)
    return (3 - i, a + 3 * k)


_BASE = {(2, 2): (1, 2), (1, 2): (2, 1), (1, 1): (1, 0)}


def gamma_k(k: int, counts: Mapping[tuple[int, int], int]) -> AffineLabel:
    """``a[2] + b[12] + c[1] -> a cdual^k(1,2) + b cdual^k(2,1) + c cdual^k(1,0)``."""
    out: Counter = Counter()
    for seg, mult in counts.items():
        out[cdual(k, _BASE[seg])] += mult
    return AffineLabel.from_counts(out)


def _check_a2(x: ExtElt) -> None:
    if x.cartan != build_cartan("A2"):
        raise ValueError(f"labels are defined for type A2 only, got {x.cartan.name}")


def gamma_components(x: ExtElt) -> dict[int, AffineLabel]:
    _check_a2(x)
    return {k: gamma_k(k, binf_to_ms(b).counts()) for k, b in x.components}


def gamma(x: ExtElt) -> AffineLabel:
    total = AffineLabel()
    for lab in gamma_components(x).values():
        total = total + lab
    return total


def fundamental_orbit(count: int) -> list[AffineLabel]:
    """Labels of ``R_{i_1} ... R_{i_{k-1}} F~_{i_k,0}(1)`` for ``i = (1, 2, 1, 2, ...)``, ``k = 1..count``."""
    c = build_cartan("A2")
    word = [1 if t % 2 == 0 else 2 for t in range(count)]
    out = []
    for k in range(1, count + 1):
        x = ext_F(word[k - 1], 0, one(c))
        x = braid_apply(BraidWord.positive(word[: k - 1]), x)
        out.append(gamma(x))
    return out


def in_fundamental_pattern(pair: Pair) -> bool:
    """``(1, a)`` with ``a`` even and nonnegative, or ``(2, b)`` with ``b`` odd and positive."""
    i, a = pair
    return (i == 1 and a >= 0 and a % 2 == 0) or (i == 2 and a >= 1 and a % 2 == 1)
