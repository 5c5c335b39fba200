"""Folding by a Dynkin diagram automorphism.

A non-simply-laced extended crystal is modelled as the set of points of the
simply-laced one fixed by ``sigma``, with folded operators

    F^sigma_{j,k} = prod_{i in orbit(j)} F~_{i,k},     r^sigma_j = prod_{i in orbit(j)} r_i.

Orbit members are pairwise orthogonal, so the products do not depend on the
order; ascending source index is used throughout.
"""

from __future__ import annotations

import dataclasses
import random
import re
from typing import Mapping, Sequence

from . import binf
from .braid import Report, braid_R
from .cartan import Cartan, CartanType, Weight, build_cartan
from .extcrystal import ExtElt, componentwise, ext_E, ext_F, ext_weight, one, random_ext


@dataclasses.dataclass(frozen=True)
class FoldingDatum:
    source: Cartan
    sigma: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    name: str

    @property
    def rank(self) -> int:
        return len(self.orbits)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def orbit(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.rank:
            raise ValueError(f"folded index {j!r} out of range 1..{self.rank}")
        return self.orbits[j - 1]

    def m(self, j: int, jj: int) -> int:
        if j == jj:
            return 1
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.matrix[j - 1][jj - 1] * self.matrix[jj - 1][j - 1]]

    def folded_of(self, i: int) -> int:
        for j, orb in enumerate(self.orbits, start=1):
            if i in orb:
                return j
        raise ValueError(f"index {i} not in any orbit")

    def describe(self) -> dict:
        return {
            "source": self.source.name,
            "sigma": list(self.sigma),
            "orbits": [list(o) for o in self.orbits],
            "folded": self.name,
            "matrix": [list(r) for r in self.matrix],
        }


def parse_sigma(text: str, rank: int) -> tuple[int, ...]:
    """``"1:3,3:1,2:2"``; indices left out are fixed."""
    from .multiseg import ParseError

    perm = list(range(1, rank + 1))
    for match in re.finditer(r"[^,\s]+", text):
        m = re.fullmatch(r"(\d+):(\d+)", match.group(0))
        if m is None:
            raise ParseError("expected i:j", text, match.start())
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= rank and 1 <= j <= rank):
            raise ParseError(f"index out of range 1..{rank}", text, match.start())
        perm[i - 1] = j
    return tuple(perm)


def _orbits(sigma: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    out = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        orb = []
        i = start
        while i not in orb:
            orb.append(i)
            i = sigma[i - 1]
        seen.update(orb)
        out.append(tuple(sorted(orb)))
    return tuple(out)


def _folded_name(c: Cartan, sigma: tuple[int, ...], rank: int) -> str:
    ct = c.type
    if sigma == tuple(c.indices):
        return c.name
    n = ct.rank
    if ct.family == "A" and n % 2 == 1 and sigma == tuple(n + 1 - i for i in c.indices):
        return f"B{(n + 1) // 2}"
    if ct.family == "D":
        if rank == n - 1:
            return f"C{n - 1}"
        if n == 4 and rank == 2:
            return "G2"
    if ct.family == "E" and n == 6 and rank == 4:
        return "F4"
    return f"{c.name}/sigma"


def fold_cartan(source: CartanType | Cartan | str, sigma: Sequence[int] | Mapping[int, int] | str) -> FoldingDatum:
    """Orbit data and folded Cartan matrix ``c_{jj'} = sum_{i' in orbit(j')} a_{i i'}``."""
    c = source if isinstance(source, Cartan) else build_cartan(source)
    if isinstance(sigma, str):
        sigma = parse_sigma(sigma, c.rank)
    elif isinstance(sigma, Mapping):
        sigma = tuple(sigma.get(i, i) for i in c.indices)
    sigma = tuple(sigma)
    if sorted(sigma) != list(c.indices):
        raise ValueError(f"{sigma} is not a permutation of {c.indices}")
    for i in c.indices:
        for j in c.indices:
            if c.a(sigma[i - 1], sigma[j - 1]) != c.a(i, j):
                raise ValueError(f"{sigma} is not a diagram automorphism of {c.name}")
    orbits = _orbits(sigma)
    for orb in orbits:
        for i in orb:
            for ii in orb:
                if i != ii and c.a(i, ii) != 0:
                    raise ValueError(f"orbit {orb} contains adjacent nodes {i}, {ii}")
    orbits = tuple(sorted(orbits))
    matrix = tuple(
        tuple(sum(c.a(orb[0], ii) for ii in other) for other in orbits) for orb in orbits
    )
    return FoldingDatum(c, sigma, orbits, matrix, _folded_name(c, sigma, len(orbits)))


def standard_folding(c: Cartan | str) -> FoldingDatum:
    """The registered nontrivial automorphism: ``i -> i*`` when that is nontrivial, triality on D4."""
    if isinstance(c, str):
        c = build_cartan(c)
    if c.type.family == "D" and c.rank == 4:
        return fold_cartan(c, (3, 2, 4, 1))
    if c.type.family == "D":
        n = c.rank
        return fold_cartan(c, tuple(range(1, n - 1)) + (n, n - 1))
    if tuple(c.star) != c.indices and not (c.type.family == "A" and c.rank % 2 == 0):
        return fold_cartan(c, c.star)
    raise ValueError(f"no registered folding of {c.name}")


def sigma_b(fd: FoldingDatum, b: binf.BinfElt) -> binf.BinfElt:
    return binf.relabel(b, fd.sigma)


def sigma_ext(fd: FoldingDatum, x: ExtElt) -> ExtElt:
    return componentwise(x, lambda b: sigma_b(fd, b))


def invariance_check(fd: FoldingDatum, x: ExtElt) -> bool:
    return sigma_ext(fd, x) == x


def fold_F(fd: FoldingDatum, j: int, k: int, x: ExtElt) -> ExtElt:
    for i in fd.orbit(j):
        x = ext_F(i, k, x)
    return x


def fold_E(fd: FoldingDatum, j: int, k: int, x: ExtElt) -> ExtElt:
    for i in reversed(fd.orbit(j)):
        x = ext_E(i, k, x)
    return x


def fold_R(fd: FoldingDatum, j: int, x: ExtElt, sign: int = 1) -> ExtElt:
    for i in fd.orbit(j):
        x = braid_R(i, x, sign)
    return x


def folded_reflect(fd: FoldingDatum, j: int, w: Weight) -> Weight:
    """Product of the source reflections over ``orbit(j)``."""
    for i in fd.orbit(j):
        w = fd.source.reflect(i, w)
    return w


def random_fixed(fd: FoldingDatum, rng: random.Random, length: int, window: tuple[int, int] = (-3, 3)) -> ExtElt:
    """Random sigma-fixed element: a random folded F-word applied to the highest element."""
    x = one(fd.source)
    lo, hi = window
    for _ in range(length):
        x = fold_F(fd, rng.choice(fd.indices), rng.randint(lo, hi), x)
    return x


def check_folded_relation(fd: FoldingDatum, j: int, jj: int, samples: int, seed: int = 0, max_length: int = 6) -> Report:
    m = fd.m(j, jj)
    lhs = [j if t % 2 == 0 else jj for t in range(m)]
    rhs = [jj if t % 2 == 0 else j for t in range(m)]
    rng = random.Random(seed)
    report = Report(f"{fd.source.name}->{fd.name} folded relation ({j},{jj}) m={m}")
    for _ in range(samples):
        x = random_fixed(fd, rng, rng.randint(0, max_length))
        a, b = x, x
        for t in reversed(lhs):
            a = fold_R(fd, t, a)
        for t in reversed(rhs):
            b = fold_R(fd, t, b)
        report.record(a == b, x)
    return report


def check_folding(fd: FoldingDatum, samples: int, seed: int = 0, max_length: int = 6) -> Report:
    """Fixed points stay fixed; folded operators commute with sigma; folded weights reflect correctly."""
    rng = random.Random(seed)
    report = Report(f"{fd.source.name}->{fd.name} folding compatibility")
    for _ in range(samples):
        x = random_fixed(fd, rng, rng.randint(0, max_length))
        report.record(invariance_check(fd, x), ("fixed", x))
        y = random_ext(fd.source, rng, rng.randint(0, 8))
        for j in fd.indices:
            k = rng.randint(-2, 2)
            fx = fold_F(fd, j, k, x)
            report.record(invariance_check(fd, fx), ("F", j, k, x))
            report.record(fold_E(fd, j, k, fx) == x, ("EF", j, k, x))
            ex = fold_E(fd, j, k, x)
            report.record(invariance_check(fd, ex), ("E", j, k, x))
            rx = fold_R(fd, j, x)
            report.record(invariance_check(fd, rx), ("R", j, x))
            report.record(ext_weight(rx) == folded_reflect(fd, j, ext_weight(x)), ("wt", j, x))
            report.record(fold_R(fd, j, rx, -1) == x, ("R*R", j, x))
            report.record(
                sigma_ext(fd, fold_F(fd, j, k, y)) == fold_F(fd, j, k, sigma_ext(fd, y)), ("sigma F", j, k, y)
            )
            report.record(sigma_ext(fd, fold_R(fd, j, y)) == fold_R(fd, j, sigma_ext(fd, y)), ("sigma R", j, y))
        for orb in fd.orbits:
            for a in orb:
                for b in orb:
                    if a < b:
                        k = rng.randint(-2, 2)
                        report.record(ext_F(a, k, ext_F(b, k, y)) == ext_F(b, k, ext_F(a, k, y)), ("commute", a, b, y))
    return report

