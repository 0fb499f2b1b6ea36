"""Text forms of triples and piece indices.

Triple literal: ``A1={1};A2={2};a={1->2};preset=identification``.
Wonderful index: ``J={1};v1=s2 s1;v2=e``.  GG index: ``v1=s1;v2=e``.
Node numbers are 1-based on the wire and 0-based inside.
"""

from __future__ import annotations

import re

from .pieces_gg import GGPieceIndex
from .pieces_wonderful import WonderfulPieceIndex, fmt_nodes
from .rootdata import RootSystem
from .triples import (
    PRESETS, Triple, check_triple, diag_triple, format_triple, swap_triple, trivial_triple,
)
from .weyl import WeylError, WeylGroup, parabolic_factor


class ParseError(ValueError):
    pass


def _fields(text: str) -> dict[str, tuple[str, int]]:
    """Split ``k=v;k=v`` keeping the column where each value starts."""
    out = {}
    pos = 0
    for part in text.split(";"):
        if part.strip():
            if "=" not in part:
                raise ParseError(f"expected key=value at column {pos + 1}: {part!r}")
            k, v = part.split("=", 1)
            key = k.strip()
            if key in out:
                raise ParseError(f"duplicate key {key!r} at column {pos + 1}")
            out[key] = (v.strip(), pos + len(k) + 2)
        pos += len(part) + 1
    return out


def parse_nodes(text: str, col: int = 1) -> frozenset[int]:
    m = re.fullmatch(r"\s*\{\s*([\d\s,]*)\}\s*", text)
    if not m:
        raise ParseError(f"expected a node set like {{1,2}} at column {col}: {text!r}")
    body = m.group(1).strip()
    if not body:
        return frozenset()
    nodes = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"bad node {tok!r} at column {col}")
        nodes.append(int(tok) - 1)
    return frozenset(nodes)


def parse_map(text: str, col: int = 1) -> dict[int, int]:
    m = re.fullmatch(r"\s*\{(.*)\}\s*", text)
    if not m:
        raise ParseError(f"expected a map like {{1->2}} at column {col}: {text!r}")
    out = {}
    for tok in filter(None, (t.strip() for t in m.group(1).split(","))):
        mm = re.fullmatch(r"(\d+)\s*->\s*(\d+)", tok)
        if not mm or int(mm.group(1)) < 1 or int(mm.group(2)) < 1:
            raise ParseError(f"bad map entry {tok!r} at column {col}")
        i = int(mm.group(1)) - 1
        if i in out:
            raise ParseError(f"node {i + 1} mapped twice at column {col}")
        out[i] = int(mm.group(2)) - 1
    return out


def parse_triple(text: str, rs1: RootSystem, rs2: RootSystem | None = None) -> Triple:
    """A preset name (trivial, diag, swap) or a triple literal; validated."""
    rs2 = rs2 or rs1
    name = text.strip().lower()
    if name == "trivial":
        t = trivial_triple()
    elif name == "diag":
        if rs1.cartan != rs2.cartan:
            raise ParseError("preset 'diag' needs equal root systems")
        t = diag_triple(rs1)
    elif name == "swap":
        t = swap_triple(rs1)
    else:
        f = _fields(text)
        unknown = set(f) - {"A1", "A2", "a", "preset"}
        if unknown:
            raise ParseError(f"unknown triple field(s) {sorted(unknown)}")
        mapping = parse_map(*f["a"]) if "a" in f else {}
        preset = f["preset"][0] if "preset" in f else "identification"
        if preset not in PRESETS:
            raise ParseError(f"unknown preset {preset!r} at column {f['preset'][1]}")
        t = Triple.from_map(mapping, preset)
        for key, got in (("A1", t.A1), ("A2", t.A2)):
            if key in f and parse_nodes(*f[key]) != got:
                raise ParseError(f"{key}={f[key][0]} disagrees with the map a")
    return check_triple(rs1, rs2, t)


def parse_elt(W: WeylGroup, text: str, col: int = 1):
    try:
        return W.elt(text)
    except WeylError as e:
        raise ParseError(f"{e} at column {col}") from None


def parse_wonderful(text: str, W: WeylGroup, normalize: bool = False) -> WonderfulPieceIndex:
    """Parse ``J={..};v1=..;v2=..``.  v1 outside W^J is an error unless ``normalize``."""
    f = _fields(text)
    for key in ("J", "v1", "v2"):
        if key not in f:
            raise ParseError(f"missing field {key!r} in {text!r}")
    J = parse_nodes(*f["J"])
    if any(j >= W.rank for j in J):
        raise ParseError(f"J={f['J'][0]} has nodes beyond rank {W.rank}")
    v1 = parse_elt(W, *f["v1"])
    v2 = parse_elt(W, *f["v2"])
    rep, _ = parabolic_factor(v1, J, "right")
    if rep != v1:
        if not normalize:
            raise ParseError(f"v1 = {v1} is not in W^J; use v1={rep} (same coset)")
        v1 = rep
    return WonderfulPieceIndex(J, v1, v2)


def parse_gg(text: str, W1: WeylGroup, W2: WeylGroup, variant: str = "plus") -> GGPieceIndex:
    f = _fields(text)
    for key in ("v1", "v2"):
        if key not in f:
            raise ParseError(f"missing field {key!r} in {text!r}")
    return GGPieceIndex(parse_elt(W1, *f["v1"]), parse_elt(W2, *f["v2"]), variant)
