from math import comb

import pytest
from hypothesis import given, strategies as st

from weylgrpd.cartan import EVEN, ODD, serre_matrix
from weylgrpd.families import (
    FAMILIES,
    FamilyVertex,
    Partition,
    Shuffle,
    all_shuffles,
    box_moves,
    engine_graph,
    expected_vertex_count,
    family_cartan_graph,
    family_serre_matrix,
    family_vertices,
    graphs_isomorphic,
    partition_to_shuffle,
    partitions_in_rectangle,
    shuffle_to_partition,
    simple_roots,
    standard_vertex,
)
from weylgrpd.graph import CartanGraph, Edge, Vertex


def V(fam, m, n, parts, sign=None):
    return FamilyVertex(fam, m, n, Partition(tuple(parts), m, n), sign)


def test_partitions_in_rectangle_order():
    assert [str(p) for p in partitions_in_rectangle(2, 2)] == \
        ["()", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"]
    assert [str(p) for p in partitions_in_rectangle(1, 1)] == ["()", "(1)"]
    assert len(partitions_in_rectangle(3, 4)) == 35


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2), 2, 2)
    with pytest.raises(ValueError):
        Partition((3,), 2, 2)
    with pytest.raises(ValueError):
        Partition((1, 1, 1), 2, 2)
    assert Partition((2, 0), 2, 2).parts == (2,)


def test_shuffle_validation():
    with pytest.raises(ValueError):
        Shuffle((2, 1, 3), 2, 1)
    with pytest.raises(ValueError):
        Shuffle((1, 1, 2), 2, 1)


def test_bijection_example():
    s = Shuffle((4, 1, 5, 2, 6, 7, 3), 3, 4)
    assert s.path() == "rdrdrrd"
    assert shuffle_to_partition(s) == Partition((4, 2, 1), 3, 4)
    assert partition_to_shuffle(Partition((4, 2, 1), 3, 4)) == s


def test_identity_shuffle_is_empty():
    s = Shuffle(tuple(range(1, 6)), 2, 3)
    assert shuffle_to_partition(s).parts == ()


@pytest.mark.parametrize("total", range(2, 8))
def test_bijection_round_trip(total):
    for m in range(1, total):
        n = total - m
        shuffles = all_shuffles(m, n)
        assert len(shuffles) == comb(total, m)
        for s in shuffles:
            assert s(total) in (m, m + n)
            assert partition_to_shuffle(shuffle_to_partition(s)) == s
        for p in partitions_in_rectangle(m, n):
            assert shuffle_to_partition(partition_to_shuffle(p)) == p


def test_box_numbers_and_rows():
    lam = Partition((4, 2, 1), 3, 4)
    assert [lam.row(r) for r in (1, 2, 3)] == [1, 2, 4]
    assert (1, 1) in lam and (1, 2) not in lam and (3, 4) in lam
    assert lam.add_box(2) == Partition((4, 2, 2), 3, 4)
    assert lam.remove_box(6) == Partition((3, 2, 1), 3, 4)
    assert lam.toggle_box(5) is None


def test_family_vertex_invariants():
    with pytest.raises(ValueError):
        V("sl", 2, 2, (1,), "+")
    with pytest.raises(ValueError):
        V("osp_even", 2, 2, (2,), "+")
    with pytest.raises(ValueError):
        V("osp_even", 2, 2, (1,), "±")
    with pytest.raises(ValueError):
        V("osp_even", 2, 2, (1,))
    with pytest.raises(ValueError):
        V("so", 2, 2, ())
    assert str(V("osp_even", 2, 2, (2, 1), "±")) == "(2,1)±"
    assert str(V("osp_even", 2, 2, (), "-")) == "()-"


def test_box_moves_examples():
    assert box_moves(V("sl", 2, 2, ())) == [(2, V("sl", 2, 2, (1,)))]
    moves = dict(box_moves(V("osp_even", 2, 2, (1, 1), "+")))
    assert moves[3] == V("osp_even", 2, 2, (2, 1), "±")
    moves = dict(box_moves(V("osp_even", 2, 2, (2, 1), "±")))
    assert moves[2] == V("osp_even", 2, 2, (2, 2), "±")


def test_osp_even_sign_rules():
    # lambda_1 = n: colors m+n-1 and m+n remove box m+n-1 and land on + and -
    moves = dict(box_moves(V("osp_even", 2, 2, (2,), "±")))
    assert moves[3] == V("osp_even", 2, 2, (1,), "+")
    assert moves[4] == V("osp_even", 2, 2, (1,), "-")
    # sign -: color m+n adds box m+n-1 only when it is addable, else a loop
    assert 4 not in dict(box_moves(V("osp_even", 2, 2, (), "-")))
    assert 3 not in dict(box_moves(V("osp_even", 2, 2, (1,), "-")))


def test_osp_odd_has_loops_of_top_color():
    for v in family_vertices("osp_odd", 2, 3):
        assert 5 not in dict(box_moves(v))


def test_simple_roots_sl34():
    roots, d = simple_roots(V("sl", 3, 4, (4, 2, 1)))
    sigma = (4, 1, 5, 2, 6, 7, 3)
    for i, r in enumerate(roots):
        want = [0] * 7
        want[sigma[i] - 1] += 1
        want[sigma[i + 1] - 1] -= 1
        assert r == tuple(want)
    # rank 6: only sigma(5), sigma(6) = 6, 7 are both > m
    assert d.tau == (ODD, ODD, ODD, ODD, EVEN, ODD)


def test_simple_roots_osp54_standard():
    roots, d = simple_roots(standard_vertex("osp_odd", 2, 2))
    assert roots[-1] == (0, 0, 0, 1)
    assert d.B[-1] == (0, 0, -1, 1)
    assert d.tau == (EVEN, ODD, EVEN, ODD)


def test_simple_roots_osp44_full_row():
    roots, d = simple_roots(V("osp_even", 2, 2, (2, 1), "±"))
    assert d.B[1] == (-1, 0, 1, 1)
    assert d.B[2] == (0, -1, 0, 2)
    # sigma = (3,1,4,2): alpha_4 = eps_4 + eps_2
    assert roots[-1] == (0, 1, 0, 1)


def test_simple_roots_osp_even_minus_swaps_last_two():
    plus, dp = simple_roots(V("osp_even", 2, 2, (1,), "+"))
    minus, dm = simple_roots(V("osp_even", 2, 2, (1,), "-"))
    assert minus[-2] == plus[-1] == (0, 0, 0, 2)
    flip = lambda r: tuple(-c if k == 1 else c for k, c in enumerate(r))
    assert minus[-1] == flip(plus[-2])
    assert dm.B[0] == (dp.B[0][0], dp.B[0][1], dp.B[0][3], dp.B[0][2])


def test_family_serre_examples():
    a3 = ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert all(family_serre_matrix(v) == a3 for v in family_vertices("sl", 2, 2))
    assert family_serre_matrix(standard_vertex("osp_even", 2, 2)) == \
        ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -2), (0, 0, -1, 2))
    assert family_serre_matrix(V("osp_even", 2, 2, (2, 1), "±")) == \
        ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, -1), (0, -1, -1, 2))


ALL6 = [v for fam in FAMILIES for s in range(2, 7) for m in range(1, s)
        if fam != "gl" or 2 * m == s for v in family_vertices(fam, m, s - m)]


@pytest.mark.parametrize("fam", FAMILIES)
def test_family_serre_equals_datum_serre(fam):
    for v in ALL6:
        if v.family == fam:
            assert family_serre_matrix(v) == serre_matrix(simple_roots(v)[1]), str(v)


@given(st.sampled_from(ALL6))
def test_box_move_colors_are_odd_isotropic(v):
    _, d = simple_roots(v)
    iso = {i for i in range(1, d.n + 1) if d.tau[i - 1] == ODD and d.b(i, i) == 0}
    assert {i for i, _ in box_moves(v)} == iso


@given(st.sampled_from(ALL6))
def test_box_moves_are_involutive(v):
    for i, w in box_moves(v):
        assert dict(box_moves(w))[i] == v


@given(st.sampled_from(ALL6))
def test_simple_root_shapes(v):
    roots, _ = simple_roots(v)
    for r in roots:
        nz = [c for c in r if c]
        assert 1 <= len(nz) <= 2 and set(nz) <= {-2, -1, 1, 2}


def test_vertex_counts():
    for fam in FAMILIES:
        for s in range(2, 8):
            for m in range(1, s):
                if fam == "gl" and 2 * m != s:
                    continue
                assert len(family_vertices(fam, m, s - m)) == expected_vertex_count(fam, m, s - m)


def test_family_graph_gl22_shape():
    g = family_cartan_graph("gl", 2, 2)
    assert [g.label(x) for x in range(6)] == ["()", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"]
    assert g.neighbor(0, 2) == 1 and g.neighbor(1, 3) == 2 and g.neighbor(1, 1) == 3


def test_family_graph_osp44_order():
    g = family_cartan_graph("osp_even", 2, 2)
    assert [g.label(x) for x in range(len(g))] == \
        ["()+", "()-", "(1)+", "(1)-", "(2)±", "(1,1)+", "(1,1)-", "(2,1)±", "(2,2)±"]


@pytest.mark.parametrize("fam,m,n", [("gl", 2, 2), ("osp_even", 2, 2), ("osp_odd", 1, 3)])
def test_isomorphic_to_engine(fam, m, n):
    fg, eg = family_cartan_graph(fam, m, n), engine_graph(fam, m, n)
    phi = graphs_isomorphic(fg, eg, anchor=(0, 0))
    assert phi is not None
    assert all(fg.serre(x) == eg.serre(y) for x, y in phi.items())


def test_isomorphism_none_on_size_mismatch():
    assert graphs_isomorphic(family_cartan_graph("gl", 2, 2), family_cartan_graph("sl", 1, 2)) is None


def test_isomorphism_respects_serre():
    a = ((2, -1), (-1, 2))
    b = ((2, -2), (-1, 2))
    g1 = CartanGraph(2, [Vertex(0, a)], [Edge(0, 0, 1), Edge(0, 0, 2)])
    g2 = CartanGraph(2, [Vertex(0, b)], [Edge(0, 0, 1), Edge(0, 0, 2)])
    assert graphs_isomorphic(g1, g2) is None
    assert graphs_isomorphic(g1, g1) == {0: 0}
