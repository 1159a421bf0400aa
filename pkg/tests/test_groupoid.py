import pytest
from hypothesis import given, strategies as st

from weylgrpd.errors import StateCapExceeded
from weylgrpd.families import engine_graph, family_cartan_graph
from weylgrpd.groupoid import (
    GroupoidMorphism,
    apply,
    aut_order,
    braid_relation_holds,
    coxeter_exponent,
    coxeter_from_serre,
    coxeter_matrix,
    coxeter_rule_violations,
    evaluate_word,
    generator_matrix,
    hom_set,
    identity,
    real_roots,
)


@pytest.fixture(scope="module")
def gl22():
    return engine_graph("gl", 2, 2)


def test_generator_matrix(gl22):
    s = generator_matrix(gl22, 0, 1)
    assert s.source == 0 and s.target == 0
    assert s.matrix == ((-1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert apply(s.matrix, (1, 0, 0)) == (-1, 0, 0)


def test_word_is_read_left_to_right(gl22):
    w = evaluate_word(gl22, 0, (2, 1))
    assert w == generator_matrix(gl22, 0, 2).then(generator_matrix(gl22, 1, 1))
    assert w.target == gl22.neighbor(gl22.neighbor(0, 2), 1)
    assert w.word == ((0, 2), (1, 1))


def test_compose_rejects_mismatch(gl22):
    with pytest.raises(ValueError):
        identity(gl22, 0).then(identity(gl22, 1))


def test_morphism_equality_ignores_word():
    a = GroupoidMorphism(0, 0, ((1,),), ((0, 1), (0, 1)))
    assert a == GroupoidMorphism(0, 0, ((1,),))
    assert a.is_identity


def test_real_roots_gl22(gl22):
    roots = real_roots(gl22)
    assert {len(r) for r in roots.values()} == {12}
    assert (1, 1, 1) in roots[0] and (-1, -1, -1) in roots[0]


def test_real_roots_push_cap(gl22):
    with pytest.raises(StateCapExceeded):
        real_roots(gl22, max_pushes=5)


def test_coxeter_gl22(gl22):
    cox = coxeter_matrix(gl22, real_roots(gl22))
    assert set(cox.values()) == {((1, 3, 2), (3, 1, 3), (2, 3, 1))}
    assert coxeter_rule_violations(gl22, cox) == []


def test_coxeter_exponent_counts_cone():
    roots = {(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)}
    assert coxeter_exponent(roots, 1, 2) == 3
    assert coxeter_exponent(roots, 1, 1) == 1


def test_coxeter_from_serre():
    assert [coxeter_from_serre(a, b) for a, b in ((0, 0), (-1, -1), (-1, -2))] == [2, 3, 4]
    assert coxeter_from_serre(-1, -3) is None


def test_braid_relations(gl22):
    assert braid_relation_holds(gl22, 0, 1, 2, 3)
    assert not braid_relation_holds(gl22, 0, 1, 2, 2)
    assert braid_relation_holds(gl22, 0, 1, 3, 2)


def test_aut_and_hom_sets(gl22):
    assert aut_order(gl22, 0) == 4
    for y in range(len(gl22)):
        homs = hom_set(gl22, 0, y)
        assert len(homs) == 4
        assert all(h.source == 0 and h.target == y for h in homs)


def test_hom_state_cap(gl22):
    with pytest.raises(StateCapExceeded):
        hom_set(gl22, 0, 0, cap=3)


GRAPHS = [family_cartan_graph(f, m, n) for f, m, n in
          [("sl", 1, 2), ("gl", 2, 2), ("sl", 2, 3), ("osp_odd", 2, 2),
           ("osp_even", 2, 2), ("osp_even", 1, 3)]]


@given(st.sampled_from(GRAPHS), st.data())
def test_generators_are_involutions(g, data):
    x = data.draw(st.integers(0, len(g) - 1))
    i = data.draw(st.sampled_from(list(g.colors)))
    s = generator_matrix(g, x, i)
    back = generator_matrix(g, s.target, i)
    assert s.then(back).is_identity


@given(st.sampled_from(GRAPHS), st.data())
def test_generators_map_real_roots_to_real_roots(g, data):
    roots = real_roots(g)
    x = data.draw(st.integers(0, len(g) - 1))
    i = data.draw(st.sampled_from(list(g.colors)))
    s = generator_matrix(g, x, i)
    assert {apply(s.matrix, r) for r in roots[x]} == roots[s.target]
