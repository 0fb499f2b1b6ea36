import pytest
from hypothesis import given, settings, strategies as st

from wcalc.rootdata import build_root_system
from wcalc.triples import (
    PairContext, Triple, TripleError, admissible_triples, check_triple, derived_triple, diag_triple,
    dual_triple, format_triple, inductive_sequence, largest_stable, stable_subset_A1,
    stable_subset_C2, swap_triple, terminal_triple, trivial_triple, twist_step, validate_triple,
)
from wcalc.weyl import weyl_group

A2 = build_root_system("A2")
B2 = build_root_system("B2")


def test_validate_examples():
    assert validate_triple(A2, A2, trivial_triple()) is None
    assert validate_triple(A2, A2, diag_triple(A2)) is None
    assert validate_triple(A2, A2, swap_triple(A2)) is None
    # B2 full swap exchanges a long and a short root
    bad = validate_triple(B2, B2, Triple.from_map({0: 1, 1: 0}))
    assert bad is not None and "Cartan" in bad.reason
    assert validate_triple(A2, A2, Triple.from_map({0: 1, 1: 0})) is None
    assert "range" in validate_triple(A2, A2, Triple.from_map({0: 2})).reason
    assert "product" in validate_triple(A2, A2, Triple.from_map({0: 0}, "product")).reason
    assert "injective" in validate_triple(A2, A2, Triple((0, 1), (0,), ((0, 0), (1, 0)))).reason
    # a single node always preserves the Cartan matrix
    assert validate_triple(B2, B2, Triple.from_map({0: 1})) is None
    with pytest.raises(TripleError):
        check_triple(B2, B2, Triple.from_map({0: 1, 1: 0}))
    with pytest.raises(TripleError):
        swap_triple(build_root_system("A1"))


def test_violation_message_is_one_based():
    v = validate_triple(A2, A2, Triple.from_map({2: 0}))
    assert "nodes [3]" in str(v)


def test_format_triple():
    assert format_triple(swap_triple(A2)) == "A1={1};A2={2};a={1->2};preset=identification"
    assert format_triple(trivial_triple()) == "A1={};A2={};a={};preset=product"


def test_admissible_triples_counts():
    # A2: empty map, four single nodes maps, identity and flip
    assert len(admissible_triples(A2, A2)) == 1 + 4 + 2
    # B2: no flip
    assert len(admissible_triples(B2, B2)) == 1 + 4 + 1
    assert all(validate_triple(A2, A2, t) is None for t in admissible_triples(A2, A2))


def ctx_a2(A, C):
    return PairContext(A2, A2, Triple.from_map(A), Triple.from_map(C))


def test_twist_step_example():
    ctx = ctx_a2({0: 1}, {1: 0})
    W = ctx.W1
    # c^-1 alpha1 = alpha2, s2 s1 (alpha2) = alpha1, a alpha1 = alpha2, (s1 s2)^-1 alpha2 = alpha1
    assert twist_step(ctx, W.elt("s2 s1"), W.elt("s1 s2"), 0) == 0
    assert twist_step(ctx, W.elt("s2 s1"), W.identity, 0) is None
    with pytest.raises(TripleError):
        twist_step(ctx, W.identity, W.identity, 1)


def test_stable_subset_example():
    ctx = ctx_a2({0: 1}, {1: 0})
    W = ctx.W1
    v1, v2 = W.elt("s2 s1"), W.elt("s1 s2")
    assert stable_subset_C2(ctx, v1, v2) == {0}
    assert stable_subset_A1(ctx, v1, v2) == {0}
    assert stable_subset_C2(ctx, v1, W.identity) == frozenset()
    with pytest.raises(TripleError):
        stable_subset_C2(ctx, W.elt("s2"), v2)


def test_largest_stable_is_greatest():
    step = {0: 1, 1: 0, 2: 3, 3: None}.get
    assert largest_stable({0, 1, 2, 3}, step) == {0, 1}
    assert largest_stable(set(), step) == frozenset()


def test_derived_triple_example():
    W = weyl_group(A2)
    C = diag_triple(A2)
    t = derived_triple(C, {0, 1}, W.identity)
    assert t == C
    t = derived_triple(Triple.from_map({0: 0}), {1}, W.elt("s1 s2"))
    # s1 s2 (alpha1) = alpha2
    assert t.fwd == {1: 0}
    with pytest.raises(TripleError):
        derived_triple(C, {0}, W.elt("s1"))


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_induction_terminal_matches_stable_subsets(name):
    rs = build_root_system(name)
    trips = [trivial_triple()] + admissible_triples(rs, rs)
    for A in trips:
        for C in trips:
            ctx = PairContext(rs, rs, A, C)
            for v1 in ctx.W1.min_reps(C.A1, "right"):
                for v2 in ctx.W2.min_reps(A.A2, "left"):
                    tr = inductive_sequence(ctx, v1, v2)
                    assert len(tr.stages) == tr.i0 + 2
                    assert tr.stages[-1].u1.is_identity()
                    assert tr.terminal == terminal_triple(ctx, v1, v2)
                    assert tr.stages[tr.i0].C.A2 == tr.terminal.A2


def test_induction_example_a2():
    ctx = ctx_a2({0: 1}, {1: 0})
    W = ctx.W1
    tr = inductive_sequence(ctx, W.elt("s2 s1"), W.elt("s1 s2"))
    assert tr.terminal.fwd == {0: 0}
    assert tr.stages[0].C == ctx.C


def test_dual_triple_examples():
    # -w0 swaps the A2 nodes
    d = dual_triple(A2, Triple.from_map({0: 1}))
    assert d.fwd == {1: 1}
    # on B2, -w0 is the identity
    d = dual_triple(B2, Triple.from_map({0: 0}))
    assert d.fwd == {0: 0}
    assert dual_triple(A2, diag_triple(A2)).A1 == {0, 1}
    assert dual_triple(A2, trivial_triple()) == trivial_triple()


def test_dual_is_involution_up_to_map():
    for rs in (A2, B2, build_root_system("A3"), build_root_system("G2")):
        for C in admissible_triples(rs, rs):
            assert dual_triple(rs, dual_triple(rs, C)) == C


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_stable_subset_independent_of_deletion_order(data):
    rs = data.draw(st.sampled_from([A2, B2, build_root_system("A3")]))
    trips = admissible_triples(rs, rs)
    A = data.draw(st.sampled_from(trips))
    C = data.draw(st.sampled_from(trips))
    ctx = PairContext(rs, rs, A, C)
    v1 = data.draw(st.sampled_from(ctx.W1.min_reps(C.A1, "right")))
    v2 = data.draw(st.sampled_from(ctx.W2.min_reps(A.A2, "left")))
    o1 = data.draw(st.permutations(sorted(C.A2)))
    o2 = data.draw(st.permutations(sorted(A.A1)))
    assert stable_subset_C2(ctx, v1, v2, o1) == stable_subset_C2(ctx, v1, v2)
    assert stable_subset_A1(ctx, v1, v2, o2) == stable_subset_A1(ctx, v1, v2)
