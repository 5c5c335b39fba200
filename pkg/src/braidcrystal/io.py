"""JSON and DOT serialization of extended crystal elements."""

from __future__ import annotations

import json
from typing import Any

from . import binf
from .cartan import Cartan, build_cartan
from .extcrystal import ExtElt, ball, ext_F
from .multiseg import ParseError, binf_to_ms, ms_to_binf, parse_multisegment


def component_to_json(b: binf.BinfElt) -> str | dict:
    c = b.cartan
    if c.type.family == "A":
        return str(binf_to_ms(b))
    return {"word": list(binf.reference_word(c)), "coords": list(b.coords)}


def component_from_json(c: Cartan, data: Any) -> binf.BinfElt:
    if isinstance(data, str):
        if c.type.family != "A":
            raise ValueError(f"multisegment text needs type A, got {c.name}")
        return ms_to_binf(parse_multisegment(data, c.rank))
    if isinstance(data, dict):
        word = data.get("word", list(binf.reference_word(c)))
        coords = data["coords"]
        return binf.element(c, [int(i) for i in word], [int(v) for v in coords], int(data.get("convention", 1)))
    raise ValueError(f"cannot read a component from {data!r}")


def element_to_json(x: ExtElt) -> dict:
    return {
        "type": x.cartan.name,
        "components": {str(k): component_to_json(b) for k, b in sorted(x.components, key=lambda t: -t[0])},
    }


def element_from_json(data: dict | str, default_type: str | None = None) -> ExtElt:
    """Read ``{"type": "A2", "components": {"0": "1[2]"}}``; a JSON string is decoded first."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON ({exc.msg})", exc.doc, exc.pos) from None
    if not isinstance(data, dict):
        raise ValueError("element JSON must be an object")
    type_name = data.get("type", default_type)
    if type_name is None:
        raise ValueError("element JSON has no type")
    c = build_cartan(type_name)
    comps = {}
    for key, value in data.get("components", {}).items():
        try:
            k = int(key)
        except ValueError:
            raise ValueError(f"position {key!r} is not an integer") from None
        comps[k] = component_from_json(c, value)
    return ExtElt.from_map(c, comps)


def dumps(x: ExtElt) -> str:
    return json.dumps(element_to_json(x), ensure_ascii=False)


def loads(text: str, default_type: str | None = None) -> ExtElt:
    return element_from_json(text, default_type)


def _node_label(x: ExtElt) -> str:
    if x.is_one():
        return "1"
    return "; ".join(f"{k}: {b}" for k, b in reversed(x.components))


def to_dot(c: Cartan | str, radius: int, window: tuple[int, int]) -> str:
    """The ``(i, k)``-colored graph on elements with at most ``radius`` boxes in ``window``.

    An edge ``x -> F~_{i,k}(x)`` is drawn for every ``k`` in the window whenever
    the target is again in the ball.  Nodes are numbered by (size, label).
    """
    if isinstance(c, str):
        c = build_cartan(c)
    lo, hi = window
    nodes = sorted(ball(c, radius, window), key=lambda x: (x.size(), _node_label(x)))
    index = {x: n for n, x in enumerate(nodes)}
    lines = [f'digraph "{c.name}" {{', "  node [shape=box];"]
    for x, n in index.items():
        lines.append(f'  n{n} [label="{_node_label(x)}"];')
    for x, n in index.items():
        for i in c.indices:
            for k in range(lo, hi + 1):
                y = ext_F(i, k, x)
                if y in index:
                    lines.append(f'  n{n} -> n{index[y]} [label="({i},{k})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_counts(text: str) -> tuple[int, int]:
    """Number of nodes and edges in DOT text produced by :func:`to_dot`."""
    nodes = sum(1 for line in text.splitlines() if "[label=" in line and "->" not in line)
    edges = sum(1 for line in text.splitlines() if "->" in line)
    return nodes, edges
