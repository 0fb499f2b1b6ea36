import pytest
from hypothesis import given, strategies as st

from wcalc.pieces_gg import GGPieceIndex
from wcalc.pieces_wonderful import WonderfulPieceIndex
from wcalc.rootdata import build_root_system
from wcalc.serialize import ParseError, parse_gg, parse_map, parse_nodes, parse_triple, parse_wonderful
from wcalc.triples import TripleError, diag_triple, format_triple, swap_triple, trivial_triple
from wcalc.weyl import weyl_group

A2 = build_root_system("A2")
B2 = build_root_system("B2")


def test_nodes_and_maps():
    assert parse_nodes("{}") == frozenset()
    assert parse_nodes(" {1, 2} ") == {0, 1}
    assert parse_map("{1->2, 2->1}") == {0: 1, 1: 0}
    assert parse_map("{}") == {}
    for bad in ("1,2", "{0}", "{a}"):
        with pytest.raises(ParseError):
            parse_nodes(bad)
    for bad in ("{1-2}", "{1->2,1->1}", "{0->1}"):
        with pytest.raises(ParseError):
            parse_map(bad)


def test_presets():
    assert parse_triple("trivial", A2) == trivial_triple()
    assert parse_triple("DIAG", A2) == diag_triple(A2)
    assert parse_triple("swap", A2) == swap_triple(A2)
    with pytest.raises(ParseError):
        parse_triple("diag", A2, B2)


def test_triple_literal_round_trip():
    for t in (trivial_triple(), diag_triple(A2), swap_triple(A2)):
        assert parse_triple(format_triple(t), A2) == t
    assert parse_triple("a={2->1}", A2).fwd == {1: 0}


def test_triple_literal_errors():
    with pytest.raises(ParseError, match="disagrees"):
        parse_triple("A1={1,2};a={1->2}", A2)
    with pytest.raises(ParseError, match="unknown triple field"):
        parse_triple("A1={1};b={1->1}", A2)
    with pytest.raises(ParseError, match="column"):
        parse_triple("a={1->1};preset=bogus", A2)
    with pytest.raises(TripleError):
        parse_triple("a={1->2,2->1}", B2)
    with pytest.raises(ParseError, match="key=value"):
        parse_triple("a={1->1};oops", A2)


def test_wonderful_index():
    W = weyl_group(A2)
    p = parse_wonderful("J={1};v1=s2 s1 s2;v2=e", W, normalize=True)
    assert str(p) == "J={1};v1=s1 s2;v2=e"
    with pytest.raises(ParseError, match="use v1=s1 s2"):
        parse_wonderful("J={1};v1=s2 s1 s2;v2=e", W)
    with pytest.raises(ParseError, match="missing field"):
        parse_wonderful("J={1};v1=e", W)
    with pytest.raises(ParseError, match="beyond rank"):
        parse_wonderful("J={3};v1=e;v2=e", W)
    with pytest.raises(ParseError, match="column"):
        parse_wonderful("J={};v1=s7;v2=e", W)


def test_gg_index():
    W = weyl_group(A2)
    p = parse_gg("v1=s1;v2=s2 s1", W, W, "minus")
    assert p == GGPieceIndex(W.elt("s1"), W.elt("s2 s1"), "minus")
    assert str(p) == "v1=s1;v2=s2 s1"
    with pytest.raises(ParseError):
        parse_gg("v2=e", W, W)


@given(st.data())
def test_round_trip_every_element(data):
    rs = build_root_system(data.draw(st.sampled_from(["A2", "B2", "G2", "A3"])))
    W = weyl_group(rs)
    J = data.draw(st.frozensets(st.integers(0, rs.rank - 1)))
    v1 = data.draw(st.sampled_from(W.min_reps(J, "right")))
    v2 = data.draw(st.sampled_from(W.elements))
    p = WonderfulPieceIndex(J, v1, v2)
    assert parse_wonderful(str(p), W) == p
