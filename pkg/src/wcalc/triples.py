"""Admissible triples (A1, A2, a) and the combinatorics built on them.

A triple pairs node subsets of two Dynkin diagrams with a bijection that
preserves Cartan entries.  The group-level data of an admissible quadruple
is reduced to one number, the dimension of the torus
Y2 = {m in M_C2 : (e, m) in L}, chosen by ``preset``:

* ``identification``: Y2 = Z_C2, of dimension rank2 - |C2| (adjoint model);
* ``product``: Y2 = T2, of dimension rank2 (only meaningful for C2 empty).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import NamedTuple

from .rootdata import RootSystem, all_subsets
from .weyl import (
    WeylElt, WeylError, WeylGroup, carter_factor, image_in, inv, is_min_rep, longest_element,
    mul, parabolic_factor, preimage_in, weyl_group,
)

PRESETS = ("identification", "product")


class TripleError(ValueError):
    pass


class Violation(NamedTuple):
    reason: str
    nodes: tuple[int, ...]

    def __str__(self):
        return f"{self.reason} at nodes {[n + 1 for n in self.nodes]}"


@dataclass(frozen=True)
class Triple:
    """(A1, A2, a) with 0-based node indices and a torus-dimension preset."""

    A1: frozenset[int]
    A2: frozenset[int]
    pairs: tuple[tuple[int, int], ...]
    preset: str = "identification"

    def __post_init__(self):
        object.__setattr__(self, "A1", frozenset(self.A1))
        object.__setattr__(self, "A2", frozenset(self.A2))
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @classmethod
    def from_map(cls, mapping: dict[int, int], preset: str = "identification") -> "Triple":
        return cls(frozenset(mapping), frozenset(mapping.values()), tuple(mapping.items()), preset)

    @cached_property
    def fwd(self) -> dict[int, int]:
        return dict(self.pairs)

    @cached_property
    def back(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}

    def __call__(self, i: int) -> int:
        return self.fwd[i]

    def y2_dim(self, rank2: int) -> int:
        if self.preset == "product":
            return rank2
        return rank2 - len(self.A2)


def _fmt(S) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(S)) + "}"


def format_triple(t: Triple) -> str:
    """Literal form ``A1={1};A2={2};a={1->2};preset=identification``, 1-based."""
    a = ",".join(f"{i + 1}->{j + 1}" for i, j in t.pairs)
    return f"A1={_fmt(t.A1)};A2={_fmt(t.A2)};a={{{a}}};preset={t.preset}"


def trivial_triple() -> Triple:
    return Triple(frozenset(), frozenset(), (), "product")


def diag_triple(rs: RootSystem) -> Triple:
    return Triple.from_map({i: i for i in range(rs.rank)})


def swap_triple(rs: RootSystem) -> Triple:
    """({alpha1}, {alpha2}, alpha1 -> alpha2)."""
    if rs.rank < 2:
        raise TripleError(f"swap triple needs rank >= 2, {rs.name} has rank {rs.rank}")
    return Triple.from_map({0: 1})


def validate_triple(rs1: RootSystem, rs2: RootSystem, t: Triple) -> Violation | None:
    """None if ``t`` is an admissible triple from rs1 to rs2."""
    dom = [i for i, _ in t.pairs]
    cod = [j for _, j in t.pairs]
    if t.preset not in PRESETS:
        return Violation(f"unknown preset {t.preset!r}", ())
    for i in dom:
        if not 0 <= i < rs1.rank:
            return Violation("domain node out of range", (i,))
    for j in cod:
        if not 0 <= j < rs2.rank:
            return Violation("codomain node out of range", (j,))
    if len(set(dom)) != len(dom):
        return Violation("node mapped twice", tuple(i for i in dom if dom.count(i) > 1)[:1])
    if len(set(cod)) != len(cod):
        return Violation("map not injective", tuple(j for j in cod if cod.count(j) > 1)[:1])
    if set(dom) != t.A1:
        return Violation("map domain differs from A1", tuple(sorted(t.A1 ^ set(dom))))
    if set(cod) != t.A2:
        return Violation("map image differs from A2", tuple(sorted(t.A2 ^ set(cod))))
    for i in sorted(t.A1):
        for j in sorted(t.A1):
            if rs1.cartan[i][j] != rs2.cartan[t.fwd[i]][t.fwd[j]]:
                return Violation("Cartan entry not preserved", (i, j))
    if t.preset == "product" and t.A1:
        return Violation("preset 'product' requires empty subsets", tuple(sorted(t.A1)))
    return None


def check_triple(rs1: RootSystem, rs2: RootSystem, t: Triple) -> Triple:
    bad = validate_triple(rs1, rs2, t)
    if bad is not None:
        raise TripleError(str(bad))
    return t


@dataclass(frozen=True)
class PairContext:
    """A pair of triples A, C between root systems rs1 and rs2."""

    rs1: RootSystem
    rs2: RootSystem
    A: Triple
    C: Triple
    W1: WeylGroup = field(init=False, repr=False, compare=False)
    W2: WeylGroup = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_triple(self.rs1, self.rs2, self.A)
        check_triple(self.rs1, self.rs2, self.C)
        object.__setattr__(self, "W1", weyl_group(self.rs1))
        object.__setattr__(self, "W2", weyl_group(self.rs2))

    @cached_property
    def a_map(self) -> dict[WeylElt, WeylElt]:
        return extend_iso(self.W1, self.W2, self.A)

    @cached_property
    def c_map(self) -> dict[WeylElt, WeylElt]:
        return extend_iso(self.W1, self.W2, self.C)


def extend_iso(W1: WeylGroup, W2: WeylGroup, t: Triple) -> dict[WeylElt, WeylElt]:
    """The isomorphism W_{A1} -> W_{A2} sending s_i to s_{a(i)}."""
    return {x: W2.from_word([t.fwd[i] for i in x.word]) for x in W1.parabolic(t.A1)}


def _simple_in(W: WeylGroup, w: WeylElt, i: int, allowed) -> int | None:
    k = W.rs.simple_index(w.images[i])
    return k if k is not None and k in allowed else None


def twist_step(ctx: PairContext, v1: WeylElt, v2: WeylElt, beta: int) -> int | None:
    """One application of v2^{-1} a v1 c^{-1} to the simple root beta in C2.

    Returns the resulting node of C2, or None when some intermediate image is
    not a simple root in the required subset.
    """
    if beta not in ctx.C.A2:
        raise TripleError(f"node {beta + 1} is not in C2")
    g = ctx.C.back[beta]
    k = _simple_in(ctx.W1, v1, g, ctx.A.A1)
    if k is None:
        return None
    return _simple_in(ctx.W2, inv(v2), ctx.A.fwd[k], ctx.C.A2)


def twist_step_A1(ctx: PairContext, v1: WeylElt, v2: WeylElt, alpha: int) -> int | None:
    """One application of v1 c^{-1} v2^{-1} a to the simple root alpha in A1."""
    if alpha not in ctx.A.A1:
        raise TripleError(f"node {alpha + 1} is not in A1")
    k = _simple_in(ctx.W2, inv(v2), ctx.A.fwd[alpha], ctx.C.A2)
    if k is None:
        return None
    return _simple_in(ctx.W1, v1, ctx.C.back[k], ctx.A.A1)


def largest_stable(nodes, step, order=None) -> frozenset[int]:
    """Greatest subset S of ``nodes`` with step(S) defined and inside S."""
    cur = set(nodes)
    seq = list(order) if order is not None else sorted(cur)
    changed = True
    while changed:
        changed = False
        for n in seq:
            if n in cur:
                img = step(n)
                if img is None or img not in cur:
                    cur.discard(n)
                    changed = True
    return frozenset(cur)


def _check_index(ctx: PairContext, v1: WeylElt, v2: WeylElt):
    if not is_min_rep(v1, ctx.C.A1, "right"):
        raise TripleError(f"v1 = {v1} is not in W1^C1")
    if not is_min_rep(v2, ctx.A.A2, "left"):
        raise TripleError(f"v2 = {v2} is not in ^A2 W2")


def stable_subset_C2(ctx: PairContext, v1: WeylElt, v2: WeylElt, order=None) -> frozenset[int]:
    _check_index(ctx, v1, v2)
    return largest_stable(ctx.C.A2, lambda b: twist_step(ctx, v1, v2, b), order)


def stable_subset_A1(ctx: PairContext, v1: WeylElt, v2: WeylElt, order=None) -> frozenset[int]:
    _check_index(ctx, v1, v2)
    return largest_stable(ctx.A.A1, lambda a: twist_step_A1(ctx, v1, v2, a), order)


def derived_triple(C: Triple, E1, y1: WeylElt) -> Triple:
    """The triple (E1 ∩ y1(C1), c(C1 ∩ y1^{-1}(E1)), c y1^{-1}) for y1 in ^E1 W^C1."""
    E1 = frozenset(E1)
    if not (is_min_rep(y1, E1, "left") and is_min_rep(y1, C.A1, "right")):
        raise TripleError(f"y1 = {y1} is not in ^E1 W^C1")
    rs = y1.group.rs
    mapping = {}
    for g in preimage_in(y1, C.A1, E1):
        mapping[rs.simple_index(y1.images[g])] = C.fwd[g]
    return Triple.from_map(mapping, C.preset)


@dataclass(frozen=True)
class InductionStage:
    """Stage i of the induction: the triple C^(i), u1^(i) and its factors.

    ``x2``, ``u2``, ``E1`` and ``x1`` are None on the last stage.
    """

    C: Triple
    u1: WeylElt
    x2: WeylElt | None = None
    u2: WeylElt | None = None
    E1: frozenset[int] | None = None
    x1: WeylElt | None = None


@dataclass(frozen=True)
class InductiveTrace:
    stages: tuple[InductionStage, ...]
    i0: int

    @property
    def terminal(self) -> Triple:
        # C2 is stable from i0 on, but C1 and c settle one stage later,
        # where u1 has become e.
        return self.stages[self.i0 + 1].C


def inductive_sequence(ctx: PairContext, v1: WeylElt, v2: WeylElt, max_steps: int = 64) -> InductiveTrace:
    """Run the induction on (v1, v2) until C2 stops shrinking.

    Stage i+1 is built from stage i by factoring v2 = x2 u2 along C2^(i),
    setting E1 = a^{-1}(A2 ∩ x2(C2^(i))), splitting u1^(i) = u1^(i+1) x1
    with x1 in ^E1 W and passing to the derived triple C^(i)(E1, x1).
    The trace holds stages 0 .. i0+1.
    """
    _check_index(ctx, v1, v2)
    A = ctx.A
    stages = []
    C, u1 = ctx.C, v1
    for i in range(max_steps):
        x2, u2 = carter_factor(v2, A.A2, C.A2)
        E1 = frozenset(A.back[k] for k in image_in(x2, C.A2, A.A2))
        x1, u1_next = parabolic_factor(u1, E1, "left")
        C_next = derived_triple(C, E1, x1)
        stages.append(InductionStage(C, u1, x2, u2, E1, x1))
        if C_next.A2 == C.A2:
            stages.append(InductionStage(C_next, u1_next))
            return InductiveTrace(tuple(stages), i)
        C, u1 = C_next, u1_next
    raise WeylError("induction did not terminate")


def terminal_triple(ctx: PairContext, v1: WeylElt, v2: WeylElt) -> Triple:
    """(A1(v1, v2), C2(v1, v2), c v1^{-1}) computed from the stable subsets."""
    A1v = stable_subset_A1(ctx, v1, v2)
    C2v = stable_subset_C2(ctx, v1, v2)
    vinv = inv(v1)
    rs = ctx.rs1
    mapping = {}
    for a in A1v:
        g = rs.simple_index(vinv.images[a])
        mapping[a] = ctx.C.fwd[g]
    t = Triple.from_map(mapping, ctx.C.preset)
    if t.A2 != C2v:
        raise TripleError(f"c v1^-1 does not carry A1(v) = {sorted(A1v)} onto C2(v) = {sorted(C2v)}")
    return t


def dual_triple(rs1: RootSystem, C: Triple) -> Triple:
    """(C1*, C2, c (w0 w0C)^{-1}) with C1* = -w0(C1)."""
    W = weyl_group(rs1)
    w0 = longest_element(W)
    w0C = longest_element(W, C.A1)
    m = inv(mul(w0, w0C))
    mapping = {}
    for g in C.A1:
        k = rs1.simple_index(tuple(-c for c in w0.images[g]))
        # (w0 w0C)^{-1} sends alpha_k to a simple root of C1, though not
        # always to alpha_g
        h = rs1.simple_index(m.images[k])
        if h is None or h not in C.A1:
            raise TripleError("dual triple: (w0 w0C)^{-1} does not map C1* onto C1")
        mapping[k] = C.fwd[h]
    return Triple.from_map(mapping, C.preset)


def admissible_E1_y1(W: WeylGroup, C1) -> list[tuple[frozenset[int], WeylElt]]:
    """All (E1, y1) with y1 in ^E1 W^C1, in canonical order."""
    out = []
    for E1 in all_subsets(W.rs):
        for y in W.min_reps(E1, "left"):
            if is_min_rep(y, C1, "right"):
                out.append((E1, y))
    return out


def admissible_triples(rs1: RootSystem, rs2: RootSystem) -> list[Triple]:
    """Every admissible triple from rs1 to rs2 (preset identification), canonical order."""
    out = []
    for A1 in all_subsets(rs1):
        dom = sorted(A1)
        for A2 in all_subsets(rs2):
            if len(A2) != len(A1):
                continue
            for img in permutations(sorted(A2)):
                t = Triple.from_map(dict(zip(dom, img)))
                if validate_triple(rs1, rs2, t) is None:
                    out.append(t)
    return out
