"""Braid group action on the extended crystal."""

from __future__ import annotations

import dataclasses
import random
import re
from typing import Sequence

from . import binf
from .binf import _convert, _words, reference_word
from .cartan import Cartan, _check_longest
from .extcrystal import ExtElt, ext_zeta, random_ext, shift


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """Word in ``r_i^{+-1}``; ``letters[t] = (i, sign)``."""

    letters: tuple[tuple[int, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """``"1 2 1'"``: a trailing prime (or ``^-1``) marks an inverse generator."""
        letters = []
        for pos, token in _tokens(text):
            match = re.fullmatch(r"(\d+)('|\^-1)?", token)
            if match is None:
                from .multiseg import ParseError

                raise ParseError(f"bad braid letter {token!r}", text, pos)
            letters.append((int(match.group(1)), -1 if match.group(2) else 1))
        return cls(tuple(letters))

    @classmethod
    def positive(cls, word: Sequence[int]) -> "BraidWord":
        return cls(tuple((i, 1) for i in word))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"{i}'" if s < 0 else str(i) for i, s in self.letters)


def _tokens(text: str):
    for match in re.finditer(r"\S+", text.replace(",", " ")):
        yield match.start(), match.group(0)


def braid_R(i: int, x: ExtElt, sign: int = 1, method: str = "fast") -> ExtElt:
    """``R_i`` (``sign=+1``) or ``R*_i`` (``sign=-1``).

    ``method="fast"`` shifts Lusztig data: on an ``i``-initial word the datum
    ``(n_{k,1}, ..., n_{k,l})`` of ``b_k`` becomes ``(n_{k,2}, ..., n_{k,l},
    n_{k-1,1})`` on the rotated word.  ``method="literal"`` applies
    ``f*_i^{eps_i(b_{k-1})}`` after the Saito reflection of ``b_k``, the
    reflection being evaluated with Kashiwara operators only.
    """
    c = x.cartan
    c.check_index(i)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not x.components:
        return x
    if method == "literal":
        return _braid_R_literal(i, x, sign)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    ref = reference_word(c)
    head, tail = _words(c, i)
    support = x.support()
    out = []
    if sign == 1:
        data = {k: _convert(c, b.coords, ref, head) for k, b in x.components}
        for k in sorted(set(support) | {k + 1 for k in support}):
            n = data.get(k)
            prev = data.get(k - 1)
            carry = prev[0] if prev is not None else 0
            new = (n[1:] if n is not None else (0,) * (c.ell - 1)) + (carry,)
            if any(new):
                out.append((k, binf.BinfElt(c, _convert(c, new, tail, ref))))
    else:
        data = {k: _convert(c, b.coords, ref, tail) for k, b in x.components}
        for k in sorted(set(support) | {k - 1 for k in support}):
            a = data.get(k)
            nxt = data.get(k + 1)
            carry = nxt[-1] if nxt is not None else 0
            new = (carry,) + (a[:-1] if a is not None else (0,) * (c.ell - 1))
            if any(new):
                out.append((k, binf.BinfElt(c, _convert(c, new, head, ref))))
    return ExtElt(c, tuple(out))


def _braid_R_literal(i: int, x: ExtElt, sign: int) -> ExtElt:
    support = x.support()
    comps = {}
    if sign == 1:
        for k in set(support) | {k + 1 for k in support}:
            t = binf.saito(i, x[k], method="kashiwara")
            p = binf.epsilon(i, x[k - 1])
            comps[k] = binf.f_star(i, t, p) if p else t
    else:
        for k in set(support) | {k - 1 for k in support}:
            t = binf.saito(i, x[k], star=True, method="kashiwara")
            p = binf.epsilon_star(i, x[k + 1])
            comps[k] = binf.f(i, t, p) if p else t
    return ExtElt.from_map(x.cartan, comps)


def braid_apply(w: BraidWord | str, x: ExtElt, method: str = "fast") -> ExtElt:
    """``R_w(x)``; the rightmost letter acts first."""
    if isinstance(w, str):
        w = BraidWord.parse(w)
    for i, s in reversed(w.letters):
        x = braid_R(i, x, s, method=method)
    return x


def relation_words(c: Cartan, i: int, j: int) -> tuple[BraidWord, BraidWord]:
    """Both sides ``r_i r_j r_i ...`` and ``r_j r_i r_j ...`` with ``m(i, j)`` factors."""
    m = c.m(i, j)
    lhs = tuple(i if t % 2 == 0 else j for t in range(m))
    rhs = tuple(j if t % 2 == 0 else i for t in range(m))
    return BraidWord.positive(lhs), BraidWord.positive(rhs)


@dataclasses.dataclass
class Report:
    name: str
    cases: int = 0
    failures: list = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, detail=None) -> None:
        self.cases += 1
        if not passed:
            self.failures.append(detail)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": len(self.failures),
            "examples": [str(f) for f in self.failures[:5]],
            "ok": self.ok,
        }


def check_relation(
    c: Cartan, i: int, j: int, samples: int, seed: int = 0, max_length: int = 12, inverse: bool = False
) -> Report:
    """Compare both sides of the ``(i, j)`` braid relation on seeded random elements."""
    if i == j:
        raise ValueError("braid relation needs i != j")
    lhs, rhs = relation_words(c, i, j)
    if inverse:
        lhs, rhs = lhs.inverse(), rhs.inverse()
    rng = random.Random(seed)
    report = Report(f"{c.name} braid relation ({i},{j}) m={c.m(i, j)}{' inverse' if inverse else ''}")
    for _ in range(samples):
        x = random_ext(c, rng, rng.randint(0, max_length))
        a, b = braid_apply(lhs, x), braid_apply(rhs, x)
        report.record(a == b, x)
    return report


def longest_R(word: Sequence[int], x: ExtElt, star: bool = False) -> ExtElt:
    """``R_w`` for a reduced word of ``w_0`` (or ``R*_w`` when ``star``)."""
    word = _check_longest(x.cartan, word)
    return braid_apply(BraidWord(tuple((i, -1 if star else 1) for i in word)), x)


def expected_longest(x: ExtElt, star: bool = False) -> ExtElt:
    """``D o zeta`` (or ``D^{-1} o zeta``)."""
    return shift(-1 if star else 1, ext_zeta(x))


def faithfulness_experiment(c: Cartan, words: Sequence[BraidWord], samples: int, seed: int = 0) -> dict[str, bool]:
    """For each braid word, whether it moved some sampled element.

    Purely exploratory: a word acting trivially on the samples may still act
    nontrivially elsewhere.
    """
    rng = random.Random(seed)
    pool = [random_ext(c, rng, rng.randint(1, 12)) for _ in range(samples)]
    return {str(w): any(braid_apply(w, x) != x for x in pool) for w in words}
