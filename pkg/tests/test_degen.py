"""Component catalogues of the diagonal degenerations over every stratum."""

import pytest

from conftest import SWEEP_TYPES, all_subsets, faithful_subsets, from_word
from diagdegen import (
    UnfaithfulActionError,
    closed_fiber,
    component_count,
    fiber_components,
    fixed_point_profile,
    full_flag_fiber,
    min_reps,
    weight_set,
)


def test_p1_total_degeneration(groups):
    # P^1 x {pt} union {pt} x P^1
    g = groups("A1")
    comps = fiber_components(g, (), ())
    assert [(c.schubert_pair, (c.xminus_dim, c.x_dim)) for c in comps] == [
        ((0, 0), (1, 0)),
        ((1, 1), (0, 1)),
    ]
    assert all(c.levi_quotient_dim == 0 and c.total_dim == 1 for c in comps)


def test_p2_minimal_degeneration(groups):
    # two components over the divisor stratum of P^2
    g = groups("A2")
    comps = fiber_components(g, {2}, {1})
    assert len(comps) == 2
    assert all(c.total_dim == 2 for c in comps)
    assert [g.reduced_word(c.w) for c in comps] == [(), (2, 1)]


@pytest.mark.parametrize("type_str,I", [("A2", {2}), ("A3", {2, 3}), ("B2", {1})])
def test_open_stratum_is_the_diagonal(type_str, I, groups):
    g = groups(type_str)
    comps = fiber_components(g, I, g.rs.delta())
    q = min_reps(g, I)
    assert len(comps) == 1
    c = comps[0]
    assert c.w == 0
    assert c.x_dim == 0 and c.xminus_dim == 0
    assert c.levi_quotient_dim == q.dim_x == c.total_dim


def test_component_count_examples(groups):
    g = groups("A2")
    assert component_count(g, {2}, ()) == 3
    assert component_count(g, {2}, {1}) == 2
    g3 = groups("A3")
    assert component_count(g3, {2, 3}, {1, 2, 3}) == 1


def test_unfaithful_I_is_rejected(groups):
    g = groups("A1xA1")
    with pytest.raises(UnfaithfulActionError):
        fiber_components(g, {1}, {1})
    with pytest.raises(UnfaithfulActionError):
        component_count(g, {1, 2}, ())
    with pytest.raises(UnfaithfulActionError):
        closed_fiber(g, {2})


def test_closed_fiber_examples(groups):
    g1 = groups("A1")
    assert closed_fiber(g1, ()) == [(0, 0), (1, 1)]
    g = groups("A2")
    q = min_reps(g, {2})
    pairs = closed_fiber(g, {2})
    assert pairs == [(w, w) for w in q.reps]
    assert [q.cell_dims(w) for w, _ in pairs] == [(0, 2), (1, 1), (2, 0)]
    q0 = min_reps(g, ())
    full = closed_fiber(g, ())
    assert len(full) == 6
    assert all(sum(q0.cell_dims(w)) == 3 for w, _ in full)


@pytest.mark.parametrize("type_str", SWEEP_TYPES)
def test_closed_fiber_matches_fiber_components(type_str, groups):
    g = groups(type_str)
    for I in faithful_subsets(g.rs):
        comps = fiber_components(g, I, ())
        assert [c.schubert_pair for c in comps] == closed_fiber(g, I)
        assert all(c.levi_quotient_dim == 0 for c in comps)


def test_fixed_point_profile_examples(groups):
    g1 = groups("A1")
    assert fixed_point_profile(g1, (), 0) == {(0, 0)}
    g = groups("A2")
    s1 = g.simple(1)
    assert fixed_point_profile(g, {2}, s1) == {(s1, s1)}
    w = from_word(g, (1, 2))
    assert fixed_point_profile(g, (), w) == {(w, w)}


def test_weight_set_examples(groups):
    g = groups("A2")
    rs = g.rs
    negatives = frozenset(range(rs.n_positive, rs.n_roots))
    assert weight_set(g, (), 0) == negatives
    got = weight_set(g, {2}, 0)
    assert got == negatives - {rs.neg(rs.simple_index(2))}
    assert {rs.coords(r) for r in got} == {(-1, 0), (-1, -1)}


def test_weight_set_coverage(groups):
    g = groups("A2")
    rs = g.rs
    neg_delta = {rs.neg(rs.simple_index(i)) for i in (1, 2)}
    covered = set()
    for w in min_reps(g, {2}).reps:
        covered |= weight_set(g, {2}, w) & neg_delta
    assert covered == neg_delta


@pytest.mark.parametrize("type_str", SWEEP_TYPES)
def test_weight_set_size_is_dim_x(type_str, groups):
    g = groups(type_str)
    for I in faithful_subsets(g.rs):
        q = min_reps(g, I)
        for w in q.reps:
            assert len(weight_set(g, I, w)) == q.dim_x


def test_full_flag_fiber_examples(groups):
    g1 = groups("A1")
    assert len(full_flag_fiber(g1, ())) == 2
    g = groups("A2")
    assert len(full_flag_fiber(g, {1, 2})) == 1
    comps = full_flag_fiber(g, {1})
    assert len(comps) == 3
    assert all(c.total_dim == 3 for c in comps)


@pytest.mark.parametrize("type_str", SWEEP_TYPES)
def test_full_flag_levi_dims(type_str, groups):
    # with I empty every component sweeps the full L_J/B_J
    g = groups(type_str)
    for J in all_subsets(g.rs.rank):
        half = len(g.rs.sub_system(J)) // 2
        for c in full_flag_fiber(g, J):
            assert c.levi_quotient_dim == half


@pytest.mark.parametrize("type_str", SWEEP_TYPES)
def test_component_count_antitone_in_J(type_str, groups):
    g = groups(type_str)
    subsets = all_subsets(g.rs.rank)
    for I in faithful_subsets(g.rs):
        counts = {J: component_count(g, I, J) for J in subsets}
        for J in subsets:
            for j in g.rs.delta() - J:
                assert counts[J] >= counts[J | {j}]


def test_components_are_sorted_and_deterministic(groups):
    g = groups("B3")
    first = fiber_components(g, {1}, {2})
    second = fiber_components(g, {1}, {2})
    assert first == second
    ws = [c.w for c in first]
    assert ws == sorted(ws)
