"""Randomized verification suites.

Every suite takes a Cartan datum, a sample count and a seed and returns a list
of :class:`~braidcrystal.braid.Report`.  Runs are deterministic for a fixed seed.
"""

from __future__ import annotations

import functools
import random
from collections import Counter
from typing import Callable

from . import binf
from .braid import Report, braid_R, check_relation, expected_longest, longest_R
from .cartan import Cartan, dual_word, initial_word, longest_word, rotate_word
from .extcrystal import (
    ExtElt,
    ext_E,
    ext_F,
    ext_weight,
    ext_zeta,
    from_path,
    random_ext,
    shift,
    to_highest,
)
from .folding import check_folded_relation, check_folding, standard_folding

SUITES = (
    "crystal-axioms",
    "inverse-pairs",
    "braid-relations",
    "longest-word",
    "oracle-agreement",
    "folding",
    "two-ld",
)


def _sample(c: Cartan, rng: random.Random, depth: int) -> ExtElt:
    return random_ext(c, rng, rng.randint(0, depth))


# ---------------------------------------------------------------------------
# B(infinity) and extended crystal axioms


def binf_axioms(c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> Report:
    rng = random.Random(seed)
    rep = Report(f"{c.name} B(inf) axioms")
    for _ in range(samples):
        b = binf.random_element(c, rng, rng.randint(0, depth))
        wt = binf.weight(b)
        for i in c.indices:
            eps, phi, eps_s, phi_s = binf.local_data(i, b)
            fb, fsb = binf.f(i, b), binf.f_star(i, b)
            rep.record(binf.epsilon(i, fb) == eps + 1, ("eps f", i, b))
            rep.record(binf.weight(fb) == wt - c.simple_root(i), ("wt f", i, b))
            rep.record(binf.e(i, fb) == b, ("e f", i, b))
            rep.record(binf.epsilon_star(i, fsb) == eps_s + 1, ("eps* f*", i, b))
            rep.record(binf.weight(fsb) == wt - c.simple_root(i), ("wt f*", i, b))
            rep.record(binf.e_star(i, fsb) == b, ("e* f*", i, b))
            eb = binf.e(i, b)
            rep.record((eb is None) == (eps == 0), ("e vanishes", i, b))
            if eb is not None:
                rep.record(binf.f(i, eb) == b, ("f e", i, b))
            esb = binf.e_star(i, b)
            rep.record((esb is None) == (eps_s == 0), ("e* vanishes", i, b))
            if esb is not None:
                rep.record(binf.f_star(i, esb) == b, ("f* e*", i, b))
            # bicrystal compatibility of the two structures
            kappa = eps + phi_s
            rep.record(kappa >= 0, ("kappa", i, b))
            if kappa == 0:
                rep.record(fb == fsb, ("kappa=0", i, b))
            if kappa >= 1:
                rep.record(binf.epsilon_star(i, fb) == eps_s, ("kappa>=1 eps*", i, b))
                rep.record(binf.epsilon(i, fsb) == eps, ("kappa>=1 eps", i, b))
            if kappa >= 2:
                rep.record(binf.f_star(i, fb) == binf.f(i, fsb), ("kappa>=2", i, b))
            for j in c.indices:
                if j != i:
                    rep.record(binf.f_star(j, fb) == binf.f(i, binf.f_star(j, b)), ("f f* commute", i, j, b))
            zi = c.star_of(i)
            rep.record(binf.f(i, binf.zeta_b(b)) == binf.zeta_b(binf.f(zi, b)), ("zeta f", i, b))
            rep.record(
                binf.saito(i, binf.zeta_b(b)) == binf.zeta_b(binf.saito(zi, b)), ("zeta T", i, b)
            )
            t = binf.saito(i, b)
            rep.record(binf.saito(i, t, star=True) == binf.e_max(i, b), ("T* T", i, b))
            rep.record(binf.saito(i, b, method="kashiwara") == t, ("T rotation = kashiwara", i, b))
            rep.record(
                binf.saito(i, b, star=True, method="kashiwara") == binf.saito(i, b, star=True),
                ("T* rotation = kashiwara", i, b),
            )
        rep.record(binf.zeta_b(binf.zeta_b(b)) == b, ("zeta^2", b))
    return rep


def ext_axioms(c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> Report:
    rng = random.Random(seed)
    rep = Report(f"{c.name} extended crystal axioms")
    for _ in range(samples):
        x = _sample(c, rng, depth)
        wt = ext_weight(x)
        for i in c.indices:
            k = rng.randint(-4, 4)
            p = rng.randint(-3, 3)
            fx = ext_F(i, k, x)
            sign = 1 if k % 2 == 0 else -1
            rep.record(ext_E(i, k, fx) == x, ("E F", i, k, x))
            rep.record(ext_F(i, k, ext_E(i, k, x)) == x, ("F E", i, k, x))
            rep.record(ext_weight(fx) == wt - c.simple_root(i) * sign, ("wt F", i, k, x))
            rep.record(shift(p, fx) == ext_F(i, k + p, shift(p, x)), ("D F", i, k, p, x))
        rep.record(ext_weight(shift(1, x)) == -wt, ("wt D", x))
        rep.record(shift(-1, shift(1, x)) == x, ("D^-1 D", x))
        rep.record(ext_zeta(ext_zeta(x)) == x, ("zeta^2", x))
        path = to_highest(x)
        rep.record(len(path) == x.size() and from_path(c, path) == x, ("to_highest", x))
    return rep


# ---------------------------------------------------------------------------
# braid action


def inverse_pairs(c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> Report:
    rng = random.Random(seed)
    rep = Report(f"{c.name} R/R* inverse pairs, D and weight compatibility")
    for _ in range(samples):
        x = _sample(c, rng, depth)
        wt = ext_weight(x)
        for i in c.indices:
            r = braid_R(i, x)
            rs = braid_R(i, x, -1)
            rep.record(braid_R(i, r, -1) == x, ("R* R", i, x))
            rep.record(braid_R(i, rs) == x, ("R R*", i, x))
            rep.record(braid_R(i, shift(1, x)) == shift(1, r), ("R D", i, x))
            rep.record(braid_R(i, shift(1, x), -1) == shift(1, rs), ("R* D", i, x))
            rep.record(ext_weight(r) == c.reflect(i, wt), ("wt R", i, x))
            rep.record(ext_weight(rs) == c.reflect(i, wt), ("wt R*", i, x))
            rep.record(braid_R(i, x, method="literal") == r, ("R fast = literal", i, x))
            rep.record(braid_R(i, x, -1, method="literal") == rs, ("R* fast = literal", i, x))
            rep.record(braid_R(i, ext_zeta(x)) == ext_zeta(braid_R(c.star_of(i), x)), ("R zeta", i, x))
    return rep


def braid_relations(c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> list[Report]:
    reports = []
    for i in c.indices:
        for j in c.indices:
            if i < j:
                sub = seed * 1_000_003 + i * 101 + j
                reports.append(check_relation(c, i, j, samples, seed=sub, max_length=depth))
                reports.append(check_relation(c, i, j, max(1, samples // 5), seed=sub + 7, max_length=depth, inverse=True))
    return reports


def longest_words(c: Cartan, count: int = 4) -> list[tuple[int, ...]]:
    """Distinct reduced words of ``w_0``: the reference word, ``i``-initial words, their rotations and duals."""
    found: list[tuple[int, ...]] = []
    candidates = [longest_word(c)]
    for i in c.indices:
        candidates.append(initial_word(c, (i,)))
    candidates += [rotate_word(c, w) for w in list(candidates)]
    candidates += [dual_word(c, w) for w in list(candidates)]
    for w in candidates:
        if w not in found:
            found.append(w)
        if len(found) >= count:
            break
    return found


def longest_word_check(c: Cartan, samples: int, seed: int = 0, depth: int = 12, words: int = 4) -> list[Report]:
    reports = []
    for n, w in enumerate(longest_words(c, words)):
        rng = random.Random(seed * 31 + n)
        rep = Report(f"{c.name} R_w = D zeta for w = {''.join(map(str, w)) if c.rank < 10 else w}")
        for _ in range(samples):
            x = _sample(c, rng, depth)
            rep.record(longest_R(w, x) == expected_longest(x), ("R_w", x))
            rep.record(longest_R(w, x, star=True) == expected_longest(x, star=True), ("R*_w", x))
        reports.append(rep)
    return reports


# ---------------------------------------------------------------------------
# realizations


def _profile(c: Cartan, b: binf.BinfElt) -> tuple:
    return tuple(binf.local_data(i, b) for i in c.indices) + (binf.weight(b),)


def _ms_profile(c: Cartan, m) -> tuple:
    from .multiseg import ms_local_data, ms_weight

    return tuple(ms_local_data(i, m) for i in c.indices) + (ms_weight(m),)


def oracle_agreement(c: Cartan, samples: int, seed: int = 0, depth: int = 12, star_ops: bool = True) -> Report:
    """Lusztig-data and multisegment realizations along random lowering strings.

    Unstarred strings are always checked.  With ``star_ops`` a second batch of
    strings mixing all four operators runs as well.
    """
    from .multiseg import Multisegment, binf_to_ms, ms_e, ms_e_star, ms_f, ms_f_star

    if c.type.family != "A":
        raise ValueError(f"the multisegment oracle needs type A, got {c.name}")
    rng = random.Random(seed)
    rep = Report(f"{c.name} multisegment oracle agreement")
    binf_ops: dict[str, Callable] = {"f": binf.f, "e": binf.e, "f_star": binf.f_star, "e_star": binf.e_star}
    ms_ops: dict[str, Callable] = {"f": ms_f, "e": ms_e, "f_star": ms_f_star, "e_star": ms_e_star}
    batches = [("f",)] + ([("f", "e", "f_star", "e_star")] if star_ops else [])
    for ops in batches:
        for _ in range(samples):
            b = binf.highest(c)
            m = Multisegment(c.rank)
            trail = []
            for _ in range(rng.randint(0, depth)):
                op, i = rng.choice(ops), rng.choice(c.indices)
                b2, m2 = binf_ops[op](i, b), ms_ops[op](i, m)
                trail.append((op, i))
                if (b2 is None) != (m2 is None):
                    rep.record(False, tuple(trail))
                    break
                if b2 is None:
                    continue
                b, m = b2, m2
                rep.record(_profile(c, b) == _ms_profile(c, m) and binf_to_ms(b) == m, tuple(trail))
    return rep


def _definitional_datum(b: binf.BinfElt, word, convention: int) -> tuple[int, ...]:
    """Lusztig datum computed only from eps / eps* and Saito reflections."""
    out = []
    for i in word:
        if convention == 1:
            out.append(binf.epsilon(i, b))
            b = binf.saito(i, b, method="kashiwara")
        else:
            out.append(binf.epsilon_star(i, b))
            b = binf.saito(i, b, star=True, method="kashiwara")
    return tuple(out) if convention == 1 else tuple(reversed(out))


def two_ld(c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> Report:
    """The -1 datum on ``i`` equals the +1 datum on ``(i_l*, ..., i_1*)``.

    Both sides are evaluated from the iterative definition; the stored data
    (via transition maps) are compared against them as well.
    """
    rng = random.Random(seed)
    words = longest_words(c, 24)
    rep = Report(f"{c.name} two Lusztig data")
    for _ in range(samples):
        b = binf.random_element(c, rng, rng.randint(0, depth))
        w = rng.choice(words)
        minus = _definitional_datum(b, w, -1)
        plus_dual = _definitional_datum(b, dual_word(c, w), 1)
        stored_minus = binf.datum(b, w, -1).coords[::-1]
        stored_plus = binf.datum(b, w, 1).coords
        rep.record(
            minus == plus_dual == stored_minus and stored_plus == _definitional_datum(b, w, 1), (b, w)
        )
    return rep


# ---------------------------------------------------------------------------
# Kostant partition counts


def kostant_count(c: Cartan, beta: tuple[int, ...]) -> int:
    """Ways to write ``beta`` as a sum of positive roots (brute force)."""
    roots = c.positive_roots

    @functools.lru_cache(maxsize=None)
    def count(rest: tuple[int, ...], start: int) -> int:
        if not any(rest):
            return 1
        total = 0
        for t in range(start, len(roots)):
            r = roots[t]
            if all(x >= y for x, y in zip(rest, r)):
                total += count(tuple(x - y for x, y in zip(rest, r)), t)
        return total

    return count(tuple(beta), 0)


def kostant_check(c: Cartan, height: int) -> Report:
    rep = Report(f"{c.name} Kostant counts up to height {height}")
    for h, layer in binf.elements_by_depth(c, height):
        by_weight = Counter(binf.weight(b).coords for b in layer)
        for w, n in sorted(by_weight.items()):
            beta = tuple(-x for x in w)
            rep.record(kostant_count(c, beta) == n, (beta, n))
        # every weight of this height with a nonzero partition count must appear
        for beta in _weights_of_height(c.rank, h):
            if tuple(-x for x in beta) not in by_weight:
                rep.record(kostant_count(c, beta) == 0, (beta, 0))
    return rep


def _weights_of_height(rank: int, h: int):
    if rank == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _weights_of_height(rank - 1, h - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------


def run_suite(name: str, c: Cartan, samples: int, seed: int = 0, depth: int = 12) -> list[Report]:
    if name == "crystal-axioms":
        return [binf_axioms(c, samples, seed, depth), ext_axioms(c, samples, seed + 1, depth)]
    if name == "inverse-pairs":
        return [inverse_pairs(c, samples, seed, depth)]
    if name == "braid-relations":
        return braid_relations(c, samples, seed, depth)
    if name == "longest-word":
        return longest_word_check(c, samples, seed, depth)
    if name == "oracle-agreement":
        return [oracle_agreement(c, samples, seed, depth)]
    if name == "folding":
        fd = standard_folding(c)
        reports = []
        for j in fd.indices:
            for jj in fd.indices:
                if j < jj:
                    reports.append(check_folded_relation(fd, j, jj, samples, seed + 13 * j + jj))
        reports.append(check_folding(fd, samples, seed))
        return reports
    if name == "two-ld":
        return [two_ld(c, samples, seed, depth)]
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")

