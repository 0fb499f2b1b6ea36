"""Pieces [v1, v2] of G1 x G2 for a pair of triples (A, C).

Indices run over v1 in W1^C1 and v2 in ^A2 W2.  Dimensions are those of
the image of a piece in (G1 x G2)/R_C unless ``ambient`` is set, in which
case dim R_C is added.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import RootSystem, dim_unipotent_radical, pos_roots_in_span
from .triples import (
    PairContext, Triple, TripleError, check_triple, dual_triple, inductive_sequence,
    stable_subset_A1, stable_subset_C2,
)
from .weyl import WeylElt, is_min_rep

VARIANTS = ("plus", "minus")


@dataclass(frozen=True)
class GGPieceIndex:
    v1: WeylElt
    v2: WeylElt
    variant: str = "plus"

    def __str__(self):
        return f"v1={self.v1};v2={self.v2}"


def check_index(ctx: PairContext, idx: GGPieceIndex) -> GGPieceIndex:
    if idx.variant not in VARIANTS:
        raise TripleError(f"unknown variant {idx.variant!r}")
    if idx.v1.group is not ctx.W1 or idx.v2.group is not ctx.W2:
        raise TripleError("index elements belong to the wrong Weyl groups")
    if not is_min_rep(idx.v1, ctx.C.A1, "right"):
        raise TripleError(f"v1 = {idx.v1} is not in W1^C1")
    if not is_min_rep(idx.v2, ctx.A.A2, "left"):
        raise TripleError(f"v2 = {idx.v2} is not in ^A2 W2")
    return idx


def enumerate_gg(ctx: PairContext, variant: str = "plus") -> list[GGPieceIndex]:
    return [GGPieceIndex(v1, v2, variant)
            for v1 in ctx.W1.min_reps(ctx.C.A1, "right")
            for v2 in ctx.W2.min_reps(ctx.A.A2, "left")]


def unipotent_meet(rs: RootSystem, u: WeylElt, C) -> int:
    """dim(U ∩ Ad_u U_C): positive roots outside the span of C kept positive by u."""
    C = frozenset(C)
    n = 0
    for r in rs.positive_roots:
        if any(c and k not in C for k, c in enumerate(r)) and rs.is_positive(u.act(r)):
            n += 1
    return n


@dataclass(frozen=True)
class DimParts:
    flag: int
    fiber: int
    affine: int

    @property
    def total(self) -> int:
        return self.flag + self.fiber + self.affine


def dim_parts(ctx: PairContext, idx: GGPieceIndex) -> DimParts:
    check_index(ctx, idx)
    v1, v2 = idx.v1, idx.v2
    rs1, rs2 = ctx.rs1, ctx.rs2
    A1v = stable_subset_A1(ctx, v1, v2)
    C2v = stable_subset_C2(ctx, v1, v2)
    flag = pos_roots_in_span(rs1, ctx.A.A1) - pos_roots_in_span(rs1, A1v)
    fiber = rs2.rank + 2 * pos_roots_in_span(rs2, C2v) - ctx.C.y2_dim(rs2.rank)
    if idx.variant == "plus":
        affine = dim_unipotent_radical(rs1, A1v) - unipotent_meet(rs1, v1, ctx.C.A1) + v2.length
    else:
        affine = dim_unipotent_radical(rs1, A1v) - v1.length + v2.length
    return DimParts(flag, fiber, affine)


def dim_R_C(ctx: PairContext) -> int:
    """dim R_C in the adjoint model: M_C1, the torus Y2 and both unipotent radicals."""
    rs1, rs2, C = ctx.rs1, ctx.rs2, ctx.C
    return (rs1.rank + 2 * pos_roots_in_span(rs1, C.A1) + C.y2_dim(rs2.rank)
            + dim_unipotent_radical(rs1, C.A1) + dim_unipotent_radical(rs2, C.A2))


def dim_gg_piece(ctx: PairContext, idx: GGPieceIndex, ambient: bool = False) -> int:
    if idx.variant != "plus":
        raise TripleError("dim_gg_piece expects a plus-variant index")
    d = dim_parts(ctx, idx).total
    return d + dim_R_C(ctx) if ambient else d


def dim_gg_minus_piece(ctx: PairContext, idx: GGPieceIndex, ambient: bool = False) -> int:
    if idx.variant != "minus":
        raise TripleError("dim_gg_minus_piece expects a minus-variant index")
    d = dim_parts(ctx, idx).total
    # R_C^- has the same dimension as R_C
    return d + dim_R_C(ctx) if ambient else d


def dim_piece(ctx: PairContext, idx: GGPieceIndex, ambient: bool = False) -> int:
    if idx.variant == "plus":
        return dim_gg_piece(ctx, idx, ambient)
    return dim_gg_minus_piece(ctx, idx, ambient)


def fiber_dim_trace(ctx: PairContext, v1: WeylElt, v2: WeylElt) -> list[int]:
    """Per-step growth of dim(U1 ∩ Ad_{u1} U_{C1}) along the induction."""
    tr = inductive_sequence(ctx, v1, v2)
    vals = [unipotent_meet(ctx.rs1, st.u1, st.C.A1) for st in tr.stages]
    return [b - a for a, b in zip(vals, vals[1:])]


# --- closures -----------------------------------------------------------------

def _witness_pairs(ctx: PairContext):
    """(x1, a(x1), y1, c(y1)) as integer indices."""
    a_map, c_map = ctx.a_map, ctx.c_map
    xs = [(x.index, a_map[x].index) for x in ctx.W1.parabolic(ctx.A.A1)]
    ys = [(y.index, c_map[y].index) for y in ctx.W1.parabolic(ctx.C.A1)]
    return xs, ys


def closure_witness_gg(ctx: PairContext, target, query):
    """First (x1, y1) with x1 v1' y1 <= w1 and a(x1) v2' c(y1) <= w2, else None."""
    w1, w2 = target
    q1, q2 = (query.v1, query.v2) if isinstance(query, GGPieceIndex) else query
    W1, W2 = ctx.W1, ctx.W2
    m1, m2 = W1.mul_table, W2.mul_table
    b1, b2 = W1.below[w1.index], W2.below[w2.index]
    xs, ys = _witness_pairs(ctx)
    for x, ax in xs:
        xv = m1[x][q1.index]
        axv = m2[ax][q2.index]
        for y, cy in ys:
            if b1 >> m1[xv][y] & 1 and b2 >> m2[axv][cy] & 1:
                return W1.elements[x], W1.elements[y]
    return None


def closure_leq_gg(ctx: PairContext, target, query) -> bool:
    """Is the plus piece ``query`` contained in the closure of the piece at ``target``?"""
    return closure_witness_gg(ctx, target, query) is not None


def closure_witness_gg_minus(ctx: PairContext, target, query):
    """First (x1, y1) with x1 v1' y1 w0C >= v1 w0C and a(x1) v2' c(y1) <= v2."""
    v1, v2 = target
    q1, q2 = (query.v1, query.v2) if isinstance(query, GGPieceIndex) else query
    W1, W2 = ctx.W1, ctx.W2
    m1, m2 = W1.mul_table, W2.mul_table
    w0C = W1.longest(ctx.C.A1).index
    low = m1[v1.index][w0C]
    b2 = W2.below[v2.index]
    below1 = W1.below
    xs, ys = _witness_pairs(ctx)
    for x, ax in xs:
        xv = m1[x][q1.index]
        axv = m2[ax][q2.index]
        for y, cy in ys:
            if below1[m1[m1[xv][y]][w0C]] >> low & 1 and b2 >> m2[axv][cy] & 1:
                return W1.elements[x], W1.elements[y]
    return None


def closure_leq_gg_minus(ctx: PairContext, target, query) -> bool:
    return closure_witness_gg_minus(ctx, target, query) is not None


def dual_context(ctx: PairContext) -> PairContext:
    return PairContext(ctx.rs1, ctx.rs2, ctx.A, dual_triple(ctx.rs1, ctx.C))


def star(ctx: PairContext, v1: WeylElt) -> WeylElt:
    """v1 (w0 w0C)^{-1}."""
    W1 = ctx.W1
    return v1 * (W1.longest() * W1.longest(ctx.C.A1)).inverse()


def closure_leq_gg_minus_dual(ctx: PairContext, target, query, dual: PairContext | None = None) -> bool:
    """The minus closure decided by the plus criterion for the dual triple C*."""
    dual = dual or dual_context(ctx)
    v1, v2 = target
    q1, q2 = (query.v1, query.v2) if isinstance(query, GGPieceIndex) else query
    return closure_leq_gg(dual, (star(ctx, v1), v2), (star(ctx, q1), q2))


def bbrc_closure_contains(ctx: PairContext, v, w) -> bool:
    """Some u1 in W_C1 with w1 u1 <= v1 and w2 c(u1) <= v2, for C = ctx.C."""
    C = ctx.C
    (v1, v2), (w1, w2) = v, w
    W1, W2 = ctx.W1, ctx.W2
    for u in W1.parabolic(C.A1):
        if (W1.leq_index(W1.mul_table[w1.index][u.index], v1.index)
                and W2.leq_index(W2.mul_table[w2.index][ctx.c_map[u].index], v2.index)):
            return True
    return False


def springer_minus_contains(ctx: PairContext, v, w) -> bool:
    """The R_C^- closure form for empty A: some u1 with v1 u1^{-1} <= w1, w2 c(u1) <= v2."""
    (v1, v2), (w1, w2) = v, w
    W1, W2 = ctx.W1, ctx.W2
    for u in W1.parabolic(ctx.C.A1):
        if (W1.leq_index(W1.mul_table[v1.index][W1.inv_table[u.index]], w1.index)
                and W2.leq_index(W2.mul_table[w2.index][ctx.c_map[u].index], v2.index)):
            return True
    return False


def closure_matrix_gg(ctx: PairContext, variant: str = "plus") -> tuple[list[GGPieceIndex], list[list[bool]]]:
    """leq[i][j] is True when node i lies in the closure of node j."""
    nodes = enumerate_gg(ctx, variant)
    fn = closure_leq_gg if variant == "plus" else closure_leq_gg_minus
    leq = [[fn(ctx, (t.v1, t.v2), q) for t in nodes] for q in nodes]
    return nodes, leq


def make_context(rs1: RootSystem, rs2: RootSystem, A: Triple, C: Triple) -> PairContext:
    check_triple(rs1, rs2, A)
    check_triple(rs1, rs2, C)
    return PairContext(rs1, rs2, A, C)
