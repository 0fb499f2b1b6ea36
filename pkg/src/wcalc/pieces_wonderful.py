"""Pieces [J, v1, v2] of the wonderful compactification for a triple A on (G, G).

J runs over subsets of simple roots, v1 over W^J and v2 over ^A2 W.  The
three closure descriptions below are decided by exhaustive witness scans
over integer-indexed multiplication and Bruhat tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import RootSystem, all_subsets, dim_unipotent_radical, pos_roots_in_span
from .triples import PairContext, Triple, TripleError, check_triple, stable_subset_A1, stable_subset_C2
from .weyl import WeylElt, WeylGroup, is_min_rep, weyl_group


def fmt_nodes(S) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(S)) + "}"


@dataclass(frozen=True)
class WonderfulPieceIndex:
    J: frozenset[int]
    v1: WeylElt
    v2: WeylElt

    def __str__(self):
        return f"J={fmt_nodes(self.J)};v1={self.v1};v2={self.v2}"

    def key(self):
        return (len(self.J), self.v1.length, self.v2.length, str(self))


def enumerate_wonderful(rs: RootSystem, A: Triple) -> list[WonderfulPieceIndex]:
    check_triple(rs, rs, A)
    W = weyl_group(rs)
    v2s = W.min_reps(A.A2, "left")
    out = [WonderfulPieceIndex(J, v1, v2)
           for J in all_subsets(rs) for v1 in W.min_reps(J, "right") for v2 in v2s]
    out.sort(key=WonderfulPieceIndex.key)
    return out


def check_index(rs: RootSystem, A: Triple, idx: WonderfulPieceIndex, target: bool = False):
    W = weyl_group(rs)
    if idx.v1.group is not W or idx.v2.group is not W:
        raise TripleError("index elements belong to the wrong Weyl group")
    if not idx.J <= rs.gamma:
        raise TripleError(f"J = {fmt_nodes(idx.J)} is not a subset of the simple roots")
    if not is_min_rep(idx.v1, idx.J, "right"):
        raise TripleError(f"v1 = {idx.v1} is not in W^J for J = {fmt_nodes(idx.J)}")
    # targets may carry any v2 in W
    if not target and not is_min_rep(idx.v2, A.A2, "left"):
        raise TripleError(f"v2 = {idx.v2} is not in ^A2 W")
    return idx


def j_context(rs: RootSystem, A: Triple, J) -> PairContext:
    """The pair (A, (J, J, id)) whose stable subsets give J(v1, v2) and A1(v1, v2)."""
    return PairContext(rs, rs, A, Triple.from_map({j: j for j in J}))


def stable_parts(rs: RootSystem, A: Triple, idx: WonderfulPieceIndex) -> tuple[frozenset[int], frozenset[int]]:
    """(J(v1, v2), A1(v1, v2)): the largest subset of J stable under v2^{-1} a v1, and its v1-image."""
    ctx = j_context(rs, A, idx.J)
    return stable_subset_C2(ctx, idx.v1, idx.v2), stable_subset_A1(ctx, idx.v1, idx.v2)


def dim_wonderful_piece(rs: RootSystem, A: Triple, idx: WonderfulPieceIndex) -> int:
    check_index(rs, A, idx)
    Jv, A1v = stable_parts(rs, A, idx)
    flag = pos_roots_in_span(rs, A.A1) - pos_roots_in_span(rs, A1v)
    # M_{J(v)} / Z_J in the adjoint model
    fiber = len(idx.J) + 2 * pos_roots_in_span(rs, Jv)
    affine = dim_unipotent_radical(rs, A1v) - idx.v1.length + idx.v2.length
    return flag + fiber + affine


# --- closure descriptions --------------------------------------------------------

class _Tables:
    """Integer views of a Weyl group and the extension of a to W_A1."""

    def __init__(self, rs: RootSystem, A: Triple):
        self.W: WeylGroup = weyl_group(rs)
        ctx = PairContext(rs, rs, A, A)
        self.xs = [(x.index, ax.index) for x, ax in ctx.a_map.items()]
        self.xs.sort()
        self.mul = self.W.mul_table
        self.below = self.W.below
        self.lengths = self.W.lengths

    def par(self, J) -> list[int]:
        return [e.index for e in self.W.parabolic(J)]


_TABLES: dict = {}


def tables(rs: RootSystem, A: Triple) -> _Tables:
    key = (rs.name, A)
    if key not in _TABLES:
        _TABLES[key] = _Tables(rs, A)
    return _TABLES[key]


def _unpack(target, query):
    return target.J, target.v1.index, target.v2.index, query.J, query.v1.index, query.v2.index


def witness_first(rs, A, target, query):
    """(x, y, z) with I ⊆ J, z in W_J ∩ W^I, l(v2 z) = l(v2) + l(z),
    x v1' y w0I >= v1 z w0I and a(x) v2' y <= v2 z; None if no such triple."""
    J, v1, v2, I, q1, q2 = _unpack(target, query)
    if not I <= J:
        return None
    t = tables(rs, A)
    W, mul, below, ln = t.W, t.mul, t.below, t.lengths
    w0I = W.longest(I).index
    ys = t.par(I)
    zs = [z for z in t.par(J) if is_min_rep(W.elements[z], I, "right")
          and ln[mul[v2][z]] == ln[v2] + ln[z]]
    for z in zs:
        low = mul[mul[v1][z]][w0I]
        high = below[mul[v2][z]]
        for x, ax in t.xs:
            xv, axv = mul[x][q1], mul[ax][q2]
            for y in ys:
                if high >> mul[axv][y] & 1 and below[mul[mul[xv][y]][w0I]] >> low & 1:
                    return W.elements[x], W.elements[y], W.elements[z]
    return None


def _witness_xz(rs, A, target, query, length_additive: bool):
    J, v1, v2, I, q1, q2 = _unpack(target, query)
    if not I <= J:
        return None
    t = tables(rs, A)
    W, mul, below, ln = t.W, t.mul, t.below, t.lengths
    for z in t.par(J):
        vz2 = mul[v2][z]
        if length_additive and ln[vz2] != ln[v2] + ln[z]:
            continue
        low, high = mul[v1][z], below[vz2]
        for x, ax in t.xs:
            if high >> mul[ax][q2] & 1 and below[mul[x][q1]] >> low & 1:
                return W.elements[x], W.elements[z]
    return None


def witness_second(rs, A, target, query):
    """(x, z) with I ⊆ J, z in W_J, l(v2 z) = l(v2) + l(z), x v1' >= v1 z, a(x) v2' <= v2 z."""
    return _witness_xz(rs, A, target, query, True)


def witness_third(rs, A, target, query):
    """(x, z) as in the second description without the length condition."""
    return _witness_xz(rs, A, target, query, False)


def closure_leq_first(rs, A, target, query) -> bool:
    return witness_first(rs, A, target, query) is not None


def closure_leq_second(rs, A, target, query) -> bool:
    return witness_second(rs, A, target, query) is not None


def closure_leq_third(rs, A, target, query) -> bool:
    return witness_third(rs, A, target, query) is not None


CRITERIA = {1: closure_leq_first, 2: closure_leq_second, 3: closure_leq_third}
WITNESSES = {1: witness_first, 2: witness_second, 3: witness_third}


def boundary_criterion(rs, A, target, query) -> bool:
    """I ⊆ J and [∅, v1', v2'] lies in the closure of the target piece."""
    if not query.J <= target.J:
        return False
    rerooted = WonderfulPieceIndex(frozenset(), query.v1, query.v2)
    return closure_leq_third(rs, A, target, rerooted)


def springer_leq(rs, target, query) -> bool:
    """Trivial-triple order: I ⊆ J and some z in W_J with v1' >= v1 z and v2' <= v2 z."""
    J, v1, v2, I, q1, q2 = _unpack(target, query)
    if not I <= J:
        return False
    W = weyl_group(rs)
    mul, below = W.mul_table, W.below
    return any(below[q1] >> mul[v1][z.index] & 1 and below[mul[v2][z.index]] >> q2 & 1
               for z in W.parabolic(J))


def he_leq(rs, target, query) -> bool:
    """Diagonal-triple order with v2 = v2' = e: I ⊆ J and x <= z in W_J with x v1' >= v1 z."""
    J, v1, _, I, q1, _ = _unpack(target, query)
    if not I <= J:
        return False
    W = weyl_group(rs)
    mul, below = W.mul_table, W.below
    for z in W.parabolic(J):
        low = mul[v1][z.index]
        for x in range(len(W)):
            if below[z.index] >> x & 1 and below[mul[x][q1]] >> low & 1:
                return True
    return False
