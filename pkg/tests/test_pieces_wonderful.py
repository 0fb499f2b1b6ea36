import pytest

from oracles import OracleGroup, to_matrix, wonderful_third_oracle
from wcalc.rootdata import all_subsets, build_root_system
from wcalc.triples import PairContext, Triple, TripleError, diag_triple, swap_triple, trivial_triple
from wcalc.pieces_wonderful import (
    CRITERIA, WITNESSES, WonderfulPieceIndex, boundary_criterion, check_index, closure_leq_first,
    closure_leq_second, closure_leq_third, dim_wonderful_piece, enumerate_wonderful, he_leq,
    springer_leq, stable_parts,
)
from wcalc.weyl import weyl_group

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def idx(rs, J, v1, v2):
    W = weyl_group(rs)
    return WonderfulPieceIndex(frozenset(J), W.elt(v1), W.elt(v2))


def triple(rs, name):
    if name == "trivial":
        return trivial_triple()
    return {"diag": diag_triple, "swap": swap_triple}[name](rs)


CONTEXTS = [(n, t) for n in ("A1", "A2", "B2", "G2") for t in ("trivial", "diag")] + [("A2", "swap")]
SMALL = [c for c in CONTEXTS if c[0] in ("A1", "A2", "B2")]


@pytest.mark.parametrize("name,tri,count", [
    ("A1", "trivial", 6), ("A1", "diag", 3), ("A2", "trivial", 78), ("A2", "diag", 13),
    ("B2", "trivial", 136), ("B2", "diag", 17), ("G2", "trivial", 300), ("G2", "diag", 25),
    ("A2", "swap", 39),
])
def test_counts(name, tri, count):
    rs = build_root_system(name)
    nodes = enumerate_wonderful(rs, triple(rs, tri))
    assert len(nodes) == len(set(nodes)) == count
    W = weyl_group(rs)
    A = triple(rs, tri)
    assert count == sum(len(W.min_reps(J, "right")) for J in all_subsets(rs)) * len(W.min_reps(A.A2, "left"))


def test_enumeration_order():
    nodes = enumerate_wonderful(A1, diag_triple(A1))
    assert [str(p) for p in nodes] == ["J={};v1=e;v2=e", "J={};v1=s1;v2=e", "J={1};v1=e;v2=e"]


def test_a1_dimensions():
    D = diag_triple(A1)
    assert [dim_wonderful_piece(A1, D, p) for p in enumerate_wonderful(A1, D)] == [2, 1, 3]
    # trivial triple: P^3 with closed orbit P^1 x P^1
    T = trivial_triple()
    dims = {str(p): dim_wonderful_piece(A1, T, p) for p in enumerate_wonderful(A1, T)}
    assert dims == {"J={};v1=e;v2=e": 1, "J={};v1=e;v2=s1": 2, "J={};v1=s1;v2=e": 0,
                    "J={};v1=s1;v2=s1": 1, "J={1};v1=e;v2=e": 2, "J={1};v1=e;v2=s1": 3}


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_trivial_closed_form(name):
    rs = build_root_system(name)
    T = trivial_triple()
    N = len(rs.positive_roots)
    for p in enumerate_wonderful(rs, T):
        assert dim_wonderful_piece(rs, T, p) == len(p.J) + N - p.v1.length + p.v2.length


@pytest.mark.parametrize("name,tri", CONTEXTS)
def test_dimension_range_and_top(name, tri):
    rs = build_root_system(name)
    A = triple(rs, tri)
    full = rs.rank + 2 * len(rs.positive_roots)
    dims = [dim_wonderful_piece(rs, A, p) for p in enumerate_wonderful(rs, A)]
    assert min(dims) >= 0 and max(dims) == full and dims.count(full) == 1


def test_stable_parts_example():
    # A2 diag, J = {1,2}, v1 = v2 = e: everything is stable
    assert stable_parts(A2, diag_triple(A2), idx(A2, {0, 1}, "e", "e")) == ({0, 1}, {0, 1})
    assert stable_parts(A2, diag_triple(A2), idx(A2, {0}, "s2", "e")) == (frozenset(), frozenset())


def test_check_index_guards():
    D = diag_triple(A2)
    with pytest.raises(TripleError):
        check_index(A2, D, idx(A2, {0}, "s1", "e"))
    with pytest.raises(TripleError):
        check_index(A2, D, idx(A2, set(), "e", "s1"))
    check_index(A2, D, idx(A2, set(), "e", "s1"), target=True)


def test_a1_diag_chain():
    D = diag_triple(A1)
    lo, mid, top = (idx(A1, set(), "s1", "e"), idx(A1, set(), "e", "e"), idx(A1, {0}, "e", "e"))
    for crit in CRITERIA.values():
        assert crit(A1, D, mid, lo) and crit(A1, D, top, mid) and crit(A1, D, top, lo)
        assert not crit(A1, D, lo, mid) and not crit(A1, D, mid, top)


def test_top_contains_everything():
    for tri in ("trivial", "diag", "swap"):
        A = triple(A2, tri)
        nodes = enumerate_wonderful(A2, A)
        top = [p for p in nodes if all(closure_leq_third(A2, A, p, q) for q in nodes)]
        assert len(top) == 1 and top[0].J == {0, 1}


def test_witnesses_match_predicates():
    A = swap_triple(A2)
    nodes = enumerate_wonderful(A2, A)
    for k in (1, 2, 3):
        for t in nodes[::5]:
            for q in nodes:
                assert (WITNESSES[k](A2, A, t, q) is not None) == CRITERIA[k](A2, A, t, q)


@pytest.mark.parametrize("name,tri", SMALL)
def test_three_descriptions_and_boundary(name, tri):
    rs = build_root_system(name)
    A = triple(rs, tri)
    nodes = enumerate_wonderful(rs, A)
    for t in nodes:
        for q in nodes:
            a = closure_leq_first(rs, A, t, q)
            assert a == closure_leq_second(rs, A, t, q) == closure_leq_third(rs, A, t, q)
            assert a == boundary_criterion(rs, A, t, q)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_third_description_against_matrix_oracle(name):
    rs = build_root_system(name)
    OG = OracleGroup(rs.cartan)
    for tri in ("trivial", "diag"):
        A = triple(rs, tri)
        ctx = PairContext(rs, rs, A, A)
        amap = {to_matrix(OG, x): to_matrix(OG, y) for x, y in ctx.a_map.items()}
        nodes = enumerate_wonderful(rs, A)
        for t in nodes:
            for q in nodes:
                want = wonderful_third_oracle(OG, amap.__getitem__, A.A1, t.J, to_matrix(OG, t.v1),
                                              to_matrix(OG, t.v2), q.J, to_matrix(OG, q.v1),
                                              to_matrix(OG, q.v2))
                assert closure_leq_third(rs, A, t, q) == want


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_springer_and_he_forms(name):
    rs = build_root_system(name)
    T, D = trivial_triple(), diag_triple(rs)
    for A, other in ((T, springer_leq), (D, he_leq)):
        nodes = enumerate_wonderful(rs, A)
        for t in nodes:
            for q in nodes:
                assert closure_leq_third(rs, A, t, q) == other(rs, t, q)


def test_targets_with_any_v2():
    A = swap_triple(A2)
    W = weyl_group(A2)
    nodes = enumerate_wonderful(A2, A)
    for J in all_subsets(A2):
        for v1 in W.min_reps(J, "right"):
            for v2 in W:
                t = WonderfulPieceIndex(J, v1, v2)
                for q in nodes:
                    a = closure_leq_first(A2, A, t, q)
                    assert a == closure_leq_second(A2, A, t, q) == closure_leq_third(A2, A, t, q)


def test_literal_triple_works():
    A = Triple.from_map({1: 0})
    nodes = enumerate_wonderful(A2, A)
    assert len(nodes) == 13 * 3
