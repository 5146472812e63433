"""Group enumeration, words, longest elements, and the two Bruhat routes."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BRUHAT_TYPES, SWEEP_TYPES, all_subsets, from_word
from diagdegen import build_root_system, generate
from diagdegen.oracles import (
    bruhat_rows_by_covers,
    inversions,
    one_line_permutation,
    subgroup_ids,
)

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A2xA1"]


@pytest.mark.parametrize(
    "type_str,order",
    [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("B3", 48), ("D4", 192),
     ("A1xA1", 4), ("F4", 1152)],
)
def test_orders(type_str, order, groups):
    assert groups(type_str).order == order


@pytest.mark.parametrize("n", range(1, 6))
def test_type_a_is_the_symmetric_group(n, groups):
    # oracle: one-line permutations with inversion counts
    g = groups(f"A{n}")
    lines = {}
    for w in range(g.order):
        line = one_line_permutation(g, w)
        assert inversions(line) == g.lengths[w]
        lines[w] = line
    assert sorted(lines.values()) == sorted(permutations(range(1, n + 2)))
    # the assignment is a homomorphism (sampled exhaustively for small n)
    if n <= 3:
        for u in range(g.order):
            for w in range(g.order):
                composed = tuple(lines[u][lines[w][k] - 1] for k in range(n + 1))
                assert composed == lines[g.multiply(u, w)]


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_group_laws(type_str, groups):
    g = groups(type_str)
    for w in range(g.order):
        assert g.multiply(0, w) == w == g.multiply(w, 0)
        assert g.multiply(w, g.inverse(w)) == 0
        assert g.lengths[g.inverse(w)] == g.lengths[w]


def test_element_accessor(groups):
    g = groups("A2")
    e = g.element(g.longest_id)
    assert e.id == g.longest_id
    assert e.length == 3
    assert e.word == (1, 2, 1)
    assert e.perm == g.perms[g.longest_id]


def test_act_example(groups):
    g = groups("A2")
    rs = g.rs
    s1 = g.simple(1)
    assert g.act(s1, rs.simple_index(2)) == rs.root_index((1, 1))


def test_inverse_by_word_reversal(groups):
    g = groups("A2")
    s1s2 = from_word(g, (1, 2))
    assert g.inverse(s1s2) == from_word(g, (2, 1))


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_perm_commutes_with_negation(type_str, groups):
    g = groups(type_str)
    rs = g.rs
    for w in range(g.order):
        for r in range(rs.n_roots):
            assert g.act(w, rs.neg(r)) == rs.neg(g.act(w, r))


def test_longest_in_examples(groups):
    g = groups("A2")
    assert g.longest_in(()) == 0
    top = g.longest_in({1, 2})
    assert top == g.longest_id
    assert g.reduced_word(top) == (1, 2, 1)
    assert g.lengths[top] == 3
    assert g.longest_in({1}) == g.simple(1)


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_longest_in_against_subgroup_scan(type_str, groups):
    g = groups(type_str)
    for I in all_subsets(g.rs.rank):
        sub = subgroup_ids(g, I)
        top_len = max(g.lengths[w] for w in sub)
        candidates = [w for w in sub if g.lengths[w] == top_len]
        assert candidates == [g.longest_in(I)]


def test_reduced_word_examples(groups):
    g = groups("A2")
    assert g.reduced_word(0) == ()
    assert g.reduced_word(g.simple(1)) == (1,)
    assert g.reduced_word(g.longest_id) == (1, 2, 1)


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_reduced_word_reconstructs(type_str, groups):
    g = groups(type_str)
    for w in range(g.order):
        word = g.reduced_word(w)
        assert len(word) == g.lengths[w]
        assert from_word(g, word) == w


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_exchange_condition(type_str, groups):
    g = groups(type_str)
    for w in range(g.order):
        for i in range(g.rs.rank):
            assert abs(g.lengths[g.gen_table[w][i]] - g.lengths[w]) == 1


@pytest.mark.parametrize("type_str", SWEEP_TYPES + ["F4"])
def test_unique_longest_element(type_str, groups):
    g = groups(type_str)
    top = g.rs.n_positive
    assert [w for w in range(g.order) if g.lengths[w] == top] == [g.longest_id]
    assert g.multiply(g.longest_id, g.longest_id) == 0


@pytest.mark.parametrize("type_str", ["A1", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_longest_element_acts_as_minus_one(type_str, groups):
    g = groups(type_str)
    rs = g.rs
    for r in range(rs.n_roots):
        assert g.act(g.longest_id, r) == rs.neg(r)


def test_longest_element_of_a2_is_not_minus_one(groups):
    g = groups("A2")
    rs = g.rs
    assert g.act(g.longest_id, rs.simple_index(1)) == rs.neg(rs.simple_index(2))


def test_bruhat_examples(groups):
    g = groups("A2")
    s1, s2 = g.simple(1), g.simple(2)
    for w in range(g.order):
        assert g.bruhat_leq(0, w)
    assert g.bruhat_leq(s1, from_word(g, (1, 2)))
    assert not g.bruhat_leq(s1, s2)


@pytest.mark.parametrize("type_str", BRUHAT_TYPES)
def test_bruhat_matrix_equals_cover_closure(type_str, groups):
    g = groups(type_str)
    assert g.bruhat_rows() == bruhat_rows_by_covers(g)


@pytest.mark.parametrize("type_str", SMALL_TYPES + ["D4"])
def test_bruhat_walk_equals_matrix_exhaustively(type_str, groups):
    g = groups(type_str)
    rows = g.bruhat_rows()
    for u in range(g.order):
        for w in range(g.order):
            assert g._bruhat_leq_walk(u, w) == bool((rows[w] >> u) & 1)


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_bruhat_walk_sampled_on_f4(groups, data):
    g = groups("F4")
    rows = g.bruhat_rows()
    u = data.draw(st.integers(0, g.order - 1))
    w = data.draw(st.integers(0, g.order - 1))
    assert g._bruhat_leq_walk(u, w) == bool((rows[w] >> u) & 1)


@pytest.mark.parametrize("type_str", BRUHAT_TYPES)
def test_bruhat_is_a_partial_order(type_str, groups):
    g = groups(type_str)
    rows = g.bruhat_rows()
    for w in range(g.order):
        assert (rows[w] >> w) & 1  # reflexive
        m = rows[w]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            assert rows[u] | rows[w] == rows[w]  # transitive
            if u != w:
                assert not (rows[u] >> w) & 1  # antisymmetric
            m ^= b


@pytest.mark.parametrize("type_str", SMALL_TYPES)
def test_bruhat_respects_length(type_str, groups):
    g = groups(type_str)
    rows = g.bruhat_rows()
    for w in range(g.order):
        m = rows[w]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            assert g.lengths[u] <= g.lengths[w]
            m ^= b


def test_w_orbit_in_subsystem_examples(groups):
    g = groups("A2")
    assert g.w_orbit_in_subsystem(1, {1, 2})
    assert not g.w_orbit_in_subsystem(1, {1})
    g2 = groups("A1xA1")
    assert g2.w_orbit_in_subsystem(1, {1})


def test_generation_is_deterministic():
    a = generate(build_root_system("B3"))
    b = generate(build_root_system("B3"))
    assert a.perms == b.perms
    assert a.words == b.words
    assert a.gen_table == b.gen_table


def test_ids_sorted_by_length_then_word(groups):
    g = groups("B3")
    keys = [(g.lengths[w], g.words[w]) for w in range(g.order)]
    assert keys == sorted(keys)


def test_gen_table_matches_multiply(groups):
    g = groups("B2")
    for w in range(g.order):
        for i in range(1, 3):
            assert g.gen_table[w][i - 1] == g.multiply(w, g.simple(i))


@settings(max_examples=80, deadline=None)
@given(type_str=st.sampled_from(SMALL_TYPES), letters=st.lists(st.integers(1, 2), max_size=8))
def test_word_products_respect_length_parity(groups, type_str, letters):
    g = groups(type_str)
    word = tuple(1 + (l - 1) % g.rs.rank for l in letters)
    w = from_word(g, word)
    assert g.lengths[w] <= len(word)
    assert g.lengths[w] % 2 == len(word) % 2
