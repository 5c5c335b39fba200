"""The extended crystal: finitely supported Z-indexed sequences of B(infinity) elements."""

from __future__ import annotations

import dataclasses
import random
from typing import Iterable, Mapping

from . import binf
from .binf import BinfElt
from .cartan import Cartan, Weight, build_cartan


@dataclasses.dataclass(frozen=True)
class ExtElt:
    """``(b_k)_k`` with every unlisted component equal to the highest element.

    ``components`` holds ``(k, b_k)`` pairs sorted by ``k`` with no highest
    entries, so equality is plain tuple equality.
    """

    cartan: Cartan
    components: tuple[tuple[int, BinfElt], ...] = ()

    @classmethod
    def from_map(cls, c: Cartan, comps: Mapping[int, BinfElt]) -> "ExtElt":
        items = []
        for k, b in comps.items():
            if b.cartan != c:
                raise ValueError("component from a different Cartan datum")
            if not b.is_highest():
                items.append((int(k), b))
        items.sort(key=lambda t: t[0])
        return cls(c, tuple(items))

    def as_dict(self) -> dict[int, BinfElt]:
        return dict(self.components)

    def __getitem__(self, k: int) -> BinfElt:
        for kk, b in self.components:
            if kk == k:
                return b
        return binf.highest(self.cartan)

    def support(self) -> list[int]:
        return [k for k, _ in self.components]

    def is_one(self) -> bool:
        return not self.components

    def with_component(self, k: int, b: BinfElt) -> "ExtElt":
        d = self.as_dict()
        d[k] = b
        return ExtElt.from_map(self.cartan, d)

    def size(self) -> int:
        """Total number of boxes ``sum_k ht(-wt(b_k))``."""
        return sum(-binf.weight(b).height() for _, b in self.components)

    def __str__(self):
        if not self.components:
            return "1"
        return ", ".join(f"{k}: {b}" for k, b in reversed(self.components))


def one(c: Cartan | str) -> ExtElt:
    if isinstance(c, str):
        c = build_cartan(c)
    return ExtElt(c)


def ext_weight(x: ExtElt) -> Weight:
    total = x.cartan.zero()
    for k, b in x.components:
        w = binf.weight(b)
        total = total + (w if k % 2 == 0 else -w)
    return total


def eps_hat(i: int, k: int, x: ExtElt) -> int:
    return binf.epsilon(i, x[k]) - binf.epsilon_star(i, x[k + 1])


def ext_F(i: int, k: int, x: ExtElt) -> ExtElt:
    if eps_hat(i, k, x) >= 0:
        return x.with_component(k, binf.f(i, x[k]))
    b = binf.e_star(i, x[k + 1])
    assert b is not None, "e*_i branch of F~ vanished"
    return x.with_component(k + 1, b)


def ext_E(i: int, k: int, x: ExtElt) -> ExtElt:
    if eps_hat(i, k, x) > 0:
        b = binf.e(i, x[k])
        assert b is not None, "e_i branch of E~ vanished"
        return x.with_component(k, b)
    return x.with_component(k + 1, binf.f_star(i, x[k + 1]))


def shift(p: int, x: ExtElt) -> ExtElt:
    """``D^p``: the component at ``k`` moves to ``k + p``."""
    return ExtElt(x.cartan, tuple((k + p, b) for k, b in x.components))


def ext_zeta(x: ExtElt) -> ExtElt:
    return ExtElt.from_map(x.cartan, {k: binf.zeta_b(b) for k, b in x.components})


def componentwise(x: ExtElt, fn) -> ExtElt:
    return ExtElt.from_map(x.cartan, {k: fn(b) for k, b in x.components})


def to_highest(x: ExtElt) -> list[tuple[int, int]]:
    """Colors ``(i, k)`` of E~ steps carrying ``x`` to the highest element.

    Always lowers the top occupied position ``k`` with the smallest ``i`` having
    ``eps_i(b_k) > 0``; position ``k + 1`` is empty there so ``eps_hat > 0`` and
    each step removes one box.
    """
    path = []
    c = x.cartan
    while x.components:
        k, b = x.components[-1]
        for i in c.indices:
            if binf.epsilon(i, b) > 0:
                break
        else:  # pragma: no cover - a non-highest element always has some eps_i > 0
            raise AssertionError(f"no raising operator applies to {b!r}")
        x = ext_E(i, k, x)
        path.append((i, k))
    return path


def from_path(c: Cartan, path: Iterable[tuple[int, int]]) -> ExtElt:
    """Replay F~ along ``reversed(path)`` starting at the highest element."""
    x = one(c)
    for i, k in reversed(list(path)):
        x = ext_F(i, k, x)
    return x


def random_ext(c: Cartan, rng: random.Random, length: int, window: tuple[int, int] = (-3, 3)) -> ExtElt:
    """Uniformly random F~-word of the given length, positions drawn from ``window``."""
    x = one(c)
    lo, hi = window
    for _ in range(length):
        x = ext_F(rng.choice(c.indices), rng.randint(lo, hi), x)
    return x


def ball(c: Cartan, radius: int, window: tuple[int, int]) -> list[ExtElt]:
    """Elements supported in ``window`` with at most ``radius`` boxes in total."""
    lo, hi = window
    layers = [sorted(layer, key=lambda b: b.coords) for _, layer in binf.elements_by_depth(c, radius)]
    out = []

    def rec(k: int, left: int, acc: dict):
        if k > hi:
            out.append(ExtElt.from_map(c, acc))
            return
        for h in range(left + 1):
            for b in layers[h]:
                if h:
                    acc[k] = b
                rec(k + 1, left - h, acc)
                acc.pop(k, None)

    rec(lo, radius, {})
    return out
