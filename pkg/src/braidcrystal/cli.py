"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from pathlib import Path

from . import io
from .braid import BraidWord, braid_apply, braid_R, faithfulness_experiment
from .cartan import build_cartan
from .extcrystal import ExtElt, ext_E, ext_F, ext_weight, ext_zeta, one, random_ext, shift
from .folding import check_folded_relation, check_folding, fold_cartan
from .hl_labels import fundamental_orbit, gamma, gamma_components, in_fundamental_pattern
from .multiseg import ParseError
from .verify import SUITES, run_suite

DEFAULT_SEED = 20240917


class UsageError(Exception):
    pass


def _cartan(args):
    try:
        return build_cartan(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_element(args, c) -> ExtElt:
    text = args.elem
    if text is None:
        return one(c)
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        text = Path(text[1:]).read_text()
    x = io.loads(text, default_type=c.name)
    if x.cartan != c:
        raise UsageError(f"element has type {x.cartan.name} but --type is {c.name}")
    return x


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


_OP_RE = re.compile(r"\s*(F|E|D|zeta|R\*|R'|R)(?=\s|$)\s*(-?\d+)?\s*(-?\d+)?\s*$")


def parse_op(text: str):
    """``"F 2 0"``, ``"E 1 -1"``, ``"D 1"``, ``"zeta"``, ``"R 1"``, ``"R* 1"``."""
    m = _OP_RE.match(text)
    if m is None:
        raise ParseError("unknown operator", text, len(text) - len(text.lstrip()))
    name, a, b = m.group(1), m.group(2), m.group(3)
    need = {"F": 2, "E": 2, "D": 1, "zeta": 0, "R": 1, "R*": 1, "R'": 1}[name]
    got = sum(v is not None for v in (a, b))
    if got != need:
        pos = m.end(got + 1) if got else m.end(1)
        raise ParseError(f"{name} takes {need} integer argument(s)", text, pos)
    return (name,) + tuple(int(v) for v in (a, b) if v is not None)


def apply_op(op, x: ExtElt) -> ExtElt:
    c = x.cartan
    name = op[0]
    if name in ("F", "E", "R", "R*", "R'"):
        try:
            c.check_index(op[1])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if name == "F":
        return ext_F(op[1], op[2], x)
    if name == "E":
        return ext_E(op[1], op[2], x)
    if name == "D":
        return shift(op[1], x)
    if name == "zeta":
        return ext_zeta(x)
    if name == "R":
        return braid_R(op[1], x)
    return braid_R(op[1], x, -1)


def _split_ops(items):
    for item in items:
        for part in item.split(";"):
            if part.strip():
                yield part


# ---------------------------------------------------------------------------
# subcommands


def cmd_elem(args) -> int:
    c = _cartan(args)
    if args.elem is None:
        seed = DEFAULT_SEED if args.seed is None else args.seed
        print(f"# seed {seed}", file=sys.stderr)
        x = random_ext(c, random.Random(seed), args.depth)
    else:
        x = _read_element(args, c)
    if args.verbose:
        print(f"# {x}", file=sys.stderr)
        print(f"# weight {ext_weight(x)}, boxes {x.size()}", file=sys.stderr)
    _emit(args, io.dumps(x))
    return 0


def cmd_apply(args) -> int:
    c = _cartan(args)
    x = _read_element(args, c)
    ops = [parse_op(t) for t in _split_ops(args.ops)]
    for op in ops:
        x = apply_op(op, x)
    _emit(args, io.dumps(x))
    return 0


def cmd_braid(args) -> int:
    c = _cartan(args)
    if args.relation:
        i, j = args.relation
        for k in (i, j):
            c.check_index(k)
        from .braid import check_relation

        seed = DEFAULT_SEED if args.seed is None else args.seed
        rep = check_relation(c, i, j, args.samples, seed=seed, max_length=args.depth)
        print(f"seed {seed}")
        print(rep.summary())
        return 0 if rep.ok else 1
    if args.word is None:
        raise UsageError("braid needs --word or --relation")
    w = BraidWord.parse(args.word)
    for i, _ in w.letters:
        c.check_index(i)
    if args.faithful:
        seed = DEFAULT_SEED if args.seed is None else args.seed
        result = faithfulness_experiment(c, [w], args.samples, seed)
        print(f"seed {seed}")
        print(f"{w}: {'moves some sample' if result[str(w)] else 'fixed every sample'}")
        return 0
    x = _read_element(args, c)
    _emit(args, io.dumps(braid_apply(w, x)))
    return 0


def cmd_verify(args) -> int:
    c = _cartan(args)
    suites = list(SUITES) if "all" in args.suite else args.suite
    for s in suites:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; expected one of {', '.join(SUITES)} or all")
    seed = DEFAULT_SEED if args.seed is None else args.seed
    print(f"seed {seed}")
    reports = []
    for s in suites:
        if s == "oracle-agreement" and c.type.family != "A" and "all" in args.suite:
            continue
        if s == "folding" and "all" in args.suite:
            try:
                from .folding import standard_folding

                standard_folding(c)
            except ValueError:
                continue
        reports.extend(run_suite(s, c, args.samples, seed, args.depth))
    for r in reports:
        print(r.summary())
    failed = [r for r in reports if not r.ok]
    if args.json:
        Path(args.json).write_text(
            json.dumps({"type": c.name, "seed": seed, "reports": [r.to_json() for r in reports]}, indent=2) + "\n"
        )
    print(f"{'FAIL' if failed else 'PASS'}: {len(reports) - len(failed)}/{len(reports)} reports clean")
    return 1 if failed else 0


def cmd_orbit(args) -> int:
    c = build_cartan("A2")
    word = [1 if t % 2 == 0 else 2 for t in range(args.count)]
    ok = True
    for k, label in enumerate(fundamental_orbit(args.count), start=1):
        x = braid_apply(BraidWord.positive(word[: k - 1]), ext_F(word[k - 1], 0, one(c)))
        inside = all(in_fundamental_pattern(p) for (p, _) in label.items)
        ok &= inside
        print(f"V_{k}: {x}  ->  {label}{'' if inside else '  (outside pattern)'}")
    return 0 if ok else 1


def cmd_fold(args) -> int:
    c = _cartan(args)
    fd = fold_cartan(c, args.sigma)
    print(json.dumps(fd.describe()))
    for j in fd.indices:
        row = " ".join(str(fd.m(j, jj)) for jj in fd.indices)
        print(f"m[{j}] = {row}")
    if not args.check:
        return 0
    seed = DEFAULT_SEED if args.seed is None else args.seed
    print(f"seed {seed}")
    reports = []
    for j in fd.indices:
        for jj in fd.indices:
            if j < jj:
                reports.append(check_folded_relation(fd, j, jj, args.samples, seed + 13 * j + jj))
    reports.append(check_folding(fd, args.samples, seed))
    for r in reports:
        print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def _window(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*\[?\s*(-?\d+)\s*[,:]\s*(-?\d+)\s*\]?\s*", text)
    if m is None:
        raise ParseError("expected lo,hi", text, 0)
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ParseError("window is empty", text, 0)
    return lo, hi


def cmd_export_dot(args) -> int:
    c = _cartan(args)
    text = io.to_dot(c, args.radius, _window(args.window))
    _emit(args, text.rstrip("\n"))
    return 0


def cmd_labels(args) -> int:
    c = _cartan(args)
    x = _read_element(args, c)
    comps = gamma_components(x)
    for k in sorted(comps, reverse=True):
        print(f"gamma_{k}({x[k]}) = {comps[k]}")
    label = gamma(x)
    print(f"gamma = {label}")
    print(json.dumps(label.to_json()))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidcrystal", description="Extended crystals and their braid group action.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, type_default="A2"):
        sp.add_argument("--type", default=type_default, help="Cartan type such as A2, D4, E6")
        sp.add_argument("--seed", type=int, default=None, help=f"random seed (default {DEFAULT_SEED})")
        sp.add_argument("--samples", type=_positive, default=100)
        sp.add_argument("--depth", type=_positive, default=12, help="maximal length of random F-words")

    def elem_arg(sp):
        sp.add_argument("--elem", help="element JSON, @file or - for stdin (default: the highest element)")
        sp.add_argument("--out", help="write the result here instead of stdout")

    sp = sub.add_parser("elem", help="normalize an element, or draw a random one")
    common(sp)
    elem_arg(sp)
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_elem)

    sp = sub.add_parser("apply", help='apply operators such as "F 2 0", "E 1 -1", "D 1", "zeta", "R 1", "R* 1"')
    common(sp)
    elem_arg(sp)
    sp.add_argument("ops", nargs="*", help="operators, applied left to right; ';' also separates")
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("braid", help="apply a braid word such as \"1 2 1'\" or check a relation")
    common(sp)
    elem_arg(sp)
    sp.add_argument("--word")
    sp.add_argument("--relation", nargs=2, type=int, metavar=("I", "J"))
    sp.add_argument("--faithful", action="store_true", help="report whether the word moves some sampled element")
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", action="append", default=None, help=f"one of {', '.join(SUITES)}, or all")
    sp.add_argument("--json", help="also write a JSON report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("orbit", help="labels of the fundamental orbit in type A2")
    sp.add_argument("--count", type=_positive, default=12)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("fold", help="fold by a diagram automorphism")
    common(sp, "A3")
    sp.add_argument("--sigma", required=True, help='e.g. "1:3,3:1,2:2"')
    sp.add_argument("--check", action="store_true", help="run the folded braid relations and compatibility checks")
    sp.set_defaults(func=cmd_fold)

    sp = sub.add_parser("export-dot", help="DOT graph of a ball around the highest element")
    common(sp)
    sp.add_argument("--radius", type=_nonnegative, default=2, help="maximal number of boxes")
    sp.add_argument("--window", default="-1,1", help="positions lo,hi; write --window=-2,2 for a negative lo")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export_dot)

    sp = sub.add_parser("labels", help="affine labels of an A2 element")
    common(sp)
    elem_arg(sp)
    sp.set_defaults(func=cmd_labels)
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "suite", "") is None:
        args.suite = ["all"]
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {exc.text}", file=sys.stderr)
        print(f"  {' ' * exc.position}^", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
