"""Named verification suites over one root system and one triple A.

Every suite returns a list of :class:`~wcalc.lemmas.Check`; ``run`` prints
one PASS/FAIL line each and returns the number of failed checks.  Lines
tagged AUDIT report observations that no theorem asserts and never fail.
"""

from __future__ import annotations

from .lemmas import Check, appendix_checks
from .pieces_gg import (
    GGPieceIndex, bbrc_closure_contains, closure_leq_gg, closure_leq_gg_minus,
    closure_leq_gg_minus_dual, dim_gg_minus_piece, dim_gg_piece, dual_context, enumerate_gg,
    fiber_dim_trace, springer_minus_contains, unipotent_meet,
)
from .pieces_wonderful import (
    CRITERIA, WonderfulPieceIndex, boundary_criterion, closure_leq_first, closure_leq_second,
    closure_leq_third, dim_wonderful_piece, enumerate_wonderful,
    he_leq, springer_leq, stable_parts,
)
from .poset import PosetError, check_partial_order
from .rootdata import RootSystem, all_subsets, dim_unipotent_radical, pos_roots_in_span
from .triples import (
    PairContext, Triple, admissible_triples, diag_triple, dual_triple, format_triple,
    inductive_sequence,
    stable_subset_A1, stable_subset_C2, terminal_triple, trivial_triple,
)
from .weyl import is_min_rep, weyl_group

SUITES = ("appendix", "counts", "closures", "specializations", "boundary", "induction", "dims")

# piece counts known in closed form for the named presets
KNOWN_COUNTS = {
    ("A1", "trivial"): 6, ("A1", "diag"): 3,
    ("A2", "trivial"): 78, ("A2", "diag"): 13,
    ("G2", "trivial"): 300, ("G2", "diag"): 25,
}

# GG closure matrices are built only when the piece count is at most this
GG_MATRIX_LIMIT = 150


def _preset_name(rs: RootSystem, A: Triple) -> str | None:
    if A == trivial_triple():
        return "trivial"
    if A == diag_triple(rs):
        return "diag"
    return None


def _matrix(rs, A, nodes, fn):
    return [[fn(rs, A, t, q) for t in nodes] for q in nodes]


class _Memo:
    """Shared matrices so the suites in one run do not recompute them."""

    def __init__(self, rs: RootSystem, A: Triple):
        self.rs, self.A = rs, A
        self._m = {}

    @property
    def nodes(self):
        if "nodes" not in self._m:
            self._m["nodes"] = enumerate_wonderful(self.rs, self.A)
        return self._m["nodes"]

    def matrix(self, crit):
        if crit not in self._m:
            fn = CRITERIA[crit] if isinstance(crit, int) else crit
            self._m[crit] = _matrix(self.rs, self.A, self.nodes, fn)
        return self._m[crit]

    @property
    def dims(self):
        if "dims" not in self._m:
            self._m["dims"] = [dim_wonderful_piece(self.rs, self.A, p) for p in self.nodes]
        return self._m["dims"]


def _contexts(rs: RootSystem, A: Triple) -> list[PairContext]:
    """(A, C) for every admissible C on rs, with C trivial first."""
    Cs = [trivial_triple()] + admissible_triples(rs, rs)
    return [PairContext(rs, rs, A, C) for C in Cs]


def _compare(c: Check, M1, M2, nodes):
    n = len(nodes)
    for i in range(n):
        for j in range(n):
            c.cases += 1
            if M1[i][j] != M2[i][j]:
                c.fail(str(nodes[i]), str(nodes[j]), M1[i][j], M2[i][j])


def _order_check(name, M, nodes) -> Check:
    c = Check(name, cases=len(M) ** 2)
    try:
        check_partial_order(M, [str(n) for n in nodes])
    except PosetError as e:
        c.fail(str(e))
    return c


# --- suites -------------------------------------------------------------------------

def suite_appendix(memo: _Memo) -> list[Check]:
    return appendix_checks(weyl_group(memo.rs))


def suite_counts(memo: _Memo) -> list[Check]:
    rs, A = memo.rs, memo.A
    W = weyl_group(rs)
    out = []
    c = Check("wonderful piece count = sum_J |W^J| * |^A2 W|")
    n_left = len(W) // len(W.parabolic(A.A2))
    expect = sum(len(W) // len(W.parabolic(J)) for J in all_subsets(rs)) * n_left
    c.cases = 1
    if len(memo.nodes) != expect or len(set(memo.nodes)) != len(memo.nodes):
        c.fail(len(memo.nodes), expect)
    out.append(c)
    name = _preset_name(rs, A)
    if (rs.name, name) in KNOWN_COUNTS:
        k = Check(f"wonderful piece count for {rs.name} {name} is {KNOWN_COUNTS[rs.name, name]}", cases=1)
        if len(memo.nodes) != KNOWN_COUNTS[rs.name, name]:
            k.fail(len(memo.nodes))
        out.append(k)
    g = Check("GG piece count = |W1^C1| * |^A2 W2| for every admissible C")
    for ctx in _contexts(rs, A):
        g.cases += 1
        nodes = enumerate_gg(ctx)
        want = (len(W) // len(W.parabolic(ctx.C.A1))) * n_left
        if len(nodes) != want or len(set(nodes)) != len(nodes):
            g.fail(format_triple(ctx.C), len(nodes), want)
    out.append(g)
    return out


def suite_closures(memo: _Memo) -> list[Check]:
    rs, A, nodes = memo.rs, memo.A, memo.nodes
    out = []
    c = Check("closure descriptions 1, 2 and 3 agree on every pair")
    _compare(c, memo.matrix(1), memo.matrix(3), nodes)
    _compare(c, memo.matrix(2), memo.matrix(3), nodes)
    out.append(c)
    out.append(_order_check("wonderful closure relation is a partial order", memo.matrix(3), nodes))

    top = Check("exactly one maximal wonderful piece, of dimension rank + 2|Phi+|")
    M = memo.matrix(3)
    n = len(nodes)
    tops = [j for j in range(n) if all(M[i][j] for i in range(n))]
    maxes = [j for j in range(n) if not any(M[j][k] for k in range(n) if k != j)]
    top.cases = n
    full = rs.rank + 2 * len(rs.positive_roots)
    if len(tops) != 1 or len(maxes) != 1 or memo.dims[tops[0]] != full:
        top.fail([str(nodes[j]) for j in maxes], [memo.dims[j] for j in maxes], full)
    out.append(top)

    # Remark re-v1: targets with arbitrary v2 in W
    W = weyl_group(rs)
    gen = Check("descriptions 1, 2 and 3 agree for targets with v2 anywhere in W")
    for J in all_subsets(rs):
        for v1 in W.min_reps(J, "right"):
            for v2 in W.elements:
                if is_min_rep(v2, A.A2, "left"):
                    continue
                t = WonderfulPieceIndex(J, v1, v2)
                for q in nodes:
                    gen.cases += 1
                    a = closure_leq_first(rs, A, t, q)
                    if a != closure_leq_second(rs, A, t, q) or a != closure_leq_third(rs, A, t, q):
                        gen.fail(str(t), str(q))
    out.append(gen)

    po = Check("GG closure relations (plus and minus) are partial orders for every admissible C")
    dual = Check("minus closure equals the plus closure for the dual triple")
    for ctx in _contexts(rs, A):
        gg = enumerate_gg(ctx)
        if len(gg) > GG_MATRIX_LIMIT:
            continue
        dctx = dual_context(ctx)
        Mp = [[closure_leq_gg(ctx, (t.v1, t.v2), q) for t in gg] for q in gg]
        Mm = [[closure_leq_gg_minus(ctx, (t.v1, t.v2), q) for t in gg] for q in gg]
        for M_, tag in ((Mp, "plus"), (Mm, "minus")):
            po.cases += 1
            try:
                check_partial_order(M_, [str(x) for x in gg])
            except PosetError as e:
                po.fail(format_triple(ctx.C), tag, str(e))
        for i, q in enumerate(gg):
            for j, t in enumerate(gg):
                dual.cases += 1
                if Mm[i][j] != closure_leq_gg_minus_dual(ctx, (t.v1, t.v2), q, dctx):
                    dual.fail(format_triple(ctx.C), str(q), str(t))
    out += [po, dual]
    return out


def suite_specializations(memo: _Memo) -> list[Check]:
    rs, A, nodes = memo.rs, memo.A, memo.nodes
    out = []
    name = _preset_name(rs, A)
    if name == "trivial":
        c = Check("trivial triple: closure order equals the two-flag (Springer) order")
        _compare(c, memo.matrix(springer_leq_wrapped), memo.matrix(3), nodes)
        out.append(c)
    elif name == "diag":
        c = Check("diagonal triple: closure order equals the x <= z form")
        _compare(c, memo.matrix(he_leq_wrapped), memo.matrix(3), nodes)
        out.append(c)

    T = trivial_triple()
    for C1 in ([frozenset({0})] if rs.rank >= 1 else []):
        C = Triple.from_map({i: i for i in C1})
        ctx = PairContext(rs, rs, T, C)
        c = Check(f"empty A, C1={{{','.join(str(i + 1) for i in sorted(C1))}}}: minus closure "
                  "equals the v1 u^-1 <= w1 form")
        b = Check("empty A: plus closure equals the w1 u1 <= v1 form")
        gg = enumerate_gg(ctx)
        for q in gg:
            for t in gg:
                c.cases += 1
                b.cases += 1
                tv, qv = (t.v1, t.v2), (q.v1, q.v2)
                if closure_leq_gg_minus(ctx, tv, q) != springer_minus_contains(ctx, tv, qv):
                    c.fail(str(q), str(t))
                if closure_leq_gg(ctx, tv, q) != bbrc_closure_contains(ctx, tv, qv):
                    b.fail(str(q), str(t))
        out += [c, b]

    bru = Check("trivial triples on G x G: closure is the product Bruhat order")
    ctx = PairContext(rs, rs, T, T)
    for q in enumerate_gg(ctx):
        for t in enumerate_gg(ctx):
            bru.cases += 1
            want = q.v1.leq(t.v1) and q.v2.leq(t.v2)
            if closure_leq_gg(ctx, (t.v1, t.v2), q) != want:
                bru.fail(str(q), str(t))
    out.append(bru)
    return out


def springer_leq_wrapped(rs, A, t, q):
    return springer_leq(rs, t, q)


def he_leq_wrapped(rs, A, t, q):
    return he_leq(rs, t, q)


def suite_boundary(memo: _Memo) -> list[Check]:
    c = Check("boundary criterion (I ⊆ J and [∅, v1', v2'] below the target) equals description 1")
    _compare(c, memo.matrix(boundary_criterion), memo.matrix(1), memo.nodes)
    return [c]


def suite_induction(memo: _Memo) -> list[Check]:
    rs, A = memo.rs, memo.A
    iso = Check("v2^-1 a and c v1^-1 carry A1(v) isomorphically onto C2(v)")
    term = Check("the inductive sequence ends at (A1(v), C2(v), c v1^-1) with u1 = e")
    trace = Check("fiber dimension trace is nonnegative and telescopes")
    for ctx in _contexts(rs, A):
        for v1 in ctx.W1.min_reps(ctx.C.A1, "right"):
            for v2 in ctx.W2.min_reps(A.A2, "left"):
                iso.cases += 1
                term.cases += 1
                trace.cases += 1
                A1v = stable_subset_A1(ctx, v1, v2)
                C2v = stable_subset_C2(ctx, v1, v2)
                if not _iso_ok(ctx, v1, v2, A1v, C2v):
                    iso.fail(format_triple(ctx.C), str(v1), str(v2))
                tr = inductive_sequence(ctx, v1, v2)
                try:
                    want = terminal_triple(ctx, v1, v2)
                except ValueError as e:
                    term.fail(format_triple(ctx.C), str(v1), str(v2), str(e))
                    continue
                tail_e = all(st.u1.is_identity() for st in tr.stages[tr.i0 + 1:])
                if tr.terminal != want or not tail_e or tr.stages[tr.i0].C.A2 != want.A2:
                    term.fail(format_triple(ctx.C), str(v1), str(v2))
                steps = fiber_dim_trace(ctx, v1, v2)
                total = (unipotent_meet(rs, ctx.W1.identity, A1v)
                         - unipotent_meet(rs, v1, ctx.C.A1))
                if any(s < 0 for s in steps) or sum(steps) != total:
                    trace.fail(format_triple(ctx.C), str(v1), str(v2), steps)
    return [iso, term, trace]


def _iso_ok(ctx, v1, v2, A1v, C2v) -> bool:
    rs1, rs2 = ctx.rs1, ctx.rs2
    f, g = {}, {}
    v2i, v1i = v2.inverse(), v1.inverse()
    for a in A1v:
        k = rs2.simple_index(v2i.images[ctx.A.fwd[a]])
        h = rs1.simple_index(v1i.images[a])
        if k is None or h is None or h not in ctx.C.A1:
            return False
        f[a], g[a] = k, ctx.C.fwd[h]
    for m in (f, g):
        if set(m.values()) != set(C2v) or len(set(m.values())) != len(m):
            return False
        if any(rs1.cartan[i][j] != rs2.cartan[m[i]][m[j]] for i in m for j in m):
            return False
    # A1(v) = v1 c^-1 C2(v)
    back = {rs1.simple_index(v1.images[ctx.C.back[b]]) for b in C2v}
    return back == set(A1v)


def suite_dims(memo: _Memo) -> list[Check]:
    rs, A, nodes = memo.rs, memo.A, memo.nodes
    W = weyl_group(rs)
    out = []
    T = trivial_triple()
    ctx = PairContext(rs, rs, T, T)
    bru = Check("trivial triples: GG piece dimension is l(v1) + l(v2)")
    for p in enumerate_gg(ctx):
        bru.cases += 1
        if dim_gg_piece(ctx, p) != p.v1.length + p.v2.length:
            bru.fail(str(p))
    out.append(bru)

    if rs.name == "A1" and _preset_name(rs, A) == "diag":
        c = Check("A1 diagonal triple: piece dimensions are 3, 2, 1", cases=len(nodes))
        if sorted(memo.dims) != [1, 2, 3]:
            c.fail(memo.dims)
        out.append(c)

    full = rs.rank + 2 * len(rs.positive_roots)
    trivial = _preset_name(rs, A) == "trivial"
    label = "wonderful dimensions lie in [0, dim G]"
    if trivial:
        label += " and equal |J| + |Phi+| - l(v1) + l(v2)"
    c = Check(label)
    for p, d in zip(nodes, memo.dims):
        c.cases += 1
        closed = len(p.J) + len(rs.positive_roots) - p.v1.length + p.v2.length
        if not 0 <= d <= full or (trivial and d != closed):
            c.fail(str(p), d)
    out.append(c)

    wc = Check("W^C1 (w0 w0C)^-1 = W^C1* for every C1")
    w0 = W.longest()
    for C1 in all_subsets(rs):
        wc.cases += 1
        C = Triple.from_map({i: i for i in C1})
        Cs = dual_triple(rs, C)
        m = (w0 * W.longest(C1)).inverse()
        lhs = {x * m for x in W.min_reps(C1, "right")}
        if lhs != set(W.min_reps(Cs.A1, "right")):
            wc.fail(sorted(C1))
    out.append(wc)

    pm = Check("plus and minus GG dimensions differ by 2 l(v1) - dim U_C1")
    for ctx in _contexts(rs, A):
        for p in enumerate_gg(ctx):
            pm.cases += 1
            d_plus = dim_gg_piece(ctx, p)
            d_minus = dim_gg_minus_piece(ctx, GGPieceIndex(p.v1, p.v2, "minus"))
            if d_plus - d_minus != 2 * p.v1.length - dim_unipotent_radical(rs, ctx.C.A1):
                pm.fail(format_triple(ctx.C), str(p))
    out.append(pm)

    out.append(_audit_wonderful(memo))
    out.append(_audit_gg(rs, A))
    return out


def _audit_wonderful(memo: _Memo) -> Check:
    c = Check("AUDIT wonderful closure strictly lowers dimension")
    M, d = memo.matrix(3), memo.dims
    n = len(M)
    for i in range(n):
        for j in range(n):
            if i != j and M[i][j]:
                c.cases += 1
                if d[i] >= d[j]:
                    c.fail(str(memo.nodes[i]), str(memo.nodes[j]))
    return c


def _audit_gg(rs: RootSystem, A: Triple) -> Check:
    c = Check("AUDIT GG plus closure strictly lowers dimension")
    for ctx in _contexts(rs, A):
        gg = enumerate_gg(ctx)
        if len(gg) > GG_MATRIX_LIMIT:
            continue
        d = {p: dim_gg_piece(ctx, p) for p in gg}
        for q in gg:
            for t in gg:
                if q != t and closure_leq_gg(ctx, (t.v1, t.v2), q):
                    c.cases += 1
                    if d[q] >= d[t]:
                        c.fail(format_triple(ctx.C), str(q), str(t))
    return c


SUITE_FUNCS = {
    "appendix": suite_appendix,
    "counts": suite_counts,
    "closures": suite_closures,
    "specializations": suite_specializations,
    "boundary": suite_boundary,
    "induction": suite_induction,
    "dims": suite_dims,
}


def run_suites(rs: RootSystem, A: Triple, names) -> list[tuple[str, Check]]:
    memo = _Memo(rs, A)
    out = []
    for name in names:
        for chk in SUITE_FUNCS[name](memo):
            out.append((name, chk))
    return out


def run(rs: RootSystem, A: Triple, suite: str = "all", echo=print) -> int:
    names = SUITES if suite == "all" else (suite,)
    failures = 0
    for name, chk in run_suites(rs, A, names):
        line = chk.line()
        if chk.name.startswith("AUDIT"):
            line = line.replace("FAIL AUDIT", "AUDIT", 1).replace("PASS AUDIT", "AUDIT", 1)
        elif not chk.ok:
            failures += 1
        echo(f"[{name}] {line}")
    echo(f"{failures} failed")
    return failures
