from __future__ import annotations

import pytest

from coxkit import IncompleteSliceError, enumerate_ball, named_matrix
from coxkit.orders import (intermediate_poset, interval_poset,
                           k_absolute_length_all, k_absolute_poset,
                           omega_graph, refinement_chain_check)
from coxkit.reflections import reflections_in_ball, t_k_set

from oracles import perm_of_word


def _cycles(perm):
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return count


def test_omega_graph_arcs(ball_b3, table_b3):
    g = omega_graph(ball_b3, t_k_set(table_b3, 1))
    assert g.boundary_skips == 0  # complete group: nothing leaves the ball
    for a, b, t in g.arcs:
        assert ball_b3.multiply(t, a) == b
        assert ball_b3.length(b) > ball_b3.length(a)


def test_omega_graph_truncated_skips():
    ball = enumerate_ball(named_matrix("B3"), 4)
    table = reflections_in_ball(ball)
    g = omega_graph(ball, t_k_set(table, 0))
    assert g.boundary_skips > 0


def test_k0_is_left_weak_order(ball_a3, table_a3):
    # reachability along length-increasing left multiplication by
    # generators is exactly l(v) = l(u) + l(v u^-1)
    poset = intermediate_poset(ball_a3, t_k_set(table_a3, 0))
    ball = ball_a3
    for u in range(len(ball)):
        iu = ball.inverse(u)
        for v in range(len(ball)):
            expected = (ball.length(v)
                        == ball.length(u) + ball.length(ball.multiply(v, iu)))
            assert poset.leq(poset.index(u), poset.index(v)) == expected


def test_full_slice_gives_bruhat_s4(ball_a3, table_a3):
    poset = intermediate_poset(ball_a3, t_k_set(table_a3, 2))
    ball = ball_a3
    for u in range(len(ball)):
        for v in range(len(ball)):
            assert poset.leq(poset.index(u), poset.index(v)) == ball.bruhat_leq(u, v)


def test_l0_is_coxeter_length(ball_a3, table_a3, ball_b3, table_b3):
    for ball, table in ((ball_a3, table_a3), (ball_b3, table_b3)):
        lk = k_absolute_length_all(table, 0).lk
        assert lk == [ball.length(w) for w in range(len(ball))]


def test_lmax_is_absolute_length_s4(ball_a3, table_a3):
    # with the full reflection set, the graph distance from the identity
    # counts n minus the number of cycles of the permutation
    lk = k_absolute_length_all(table_a3, 2).lk
    for w in range(len(ball_a3)):
        perm = perm_of_word(ball_a3.word(w), 4)
        assert lk[w] == 4 - _cycles(perm)


def test_lk_monotone_in_k(ball_b3, table_b3):
    tables = [k_absolute_length_all(table_b3, k) for k in range(5)]
    for a, b in zip(tables, tables[1:]):
        assert all(x >= y for x, y in zip(a.lk, b.lk))


def test_witness_paths(ball_a3, table_a3):
    t = k_absolute_length_all(table_a3, 1)
    ball = ball_a3
    for v in range(len(ball)):
        steps = 0
        x = v
        while x != ball.identity:
            p, r = t.witness_pred[x], t.witness_arc[x]
            assert ball.multiply(r, p) == x
            assert ball.length(x) > ball.length(p)
            x = p
            steps += 1
        assert steps == t.lk[v]


def test_k_absolute_poset_basics(ball_a3, table_a3):
    t = k_absolute_length_all(table_a3, 1)
    poset = k_absolute_poset(t)
    assert poset.metadata["flagged_pairs"] == 0
    e = poset.index(ball_a3.identity)
    for i in range(poset.n):
        assert poset.leq(e, i)
        assert poset.leq(i, i)
        if poset.lt(e, i):
            assert t.lk[poset.nodes[i]] > 0


def test_k1_maximal_elements_s4(ball_a3, table_a3):
    t = k_absolute_length_all(table_a3, 1)
    poset = k_absolute_poset(t)
    maximal = [i for i in range(poset.n)
               if not any(poset.lt(i, j) for j in range(poset.n))]
    got = {tuple(ball_a3.word(poset.nodes[i])): t.lk[poset.nodes[i]]
           for i in maximal}
    assert got == {(0, 2, 1): 3, (1, 0, 2): 3, (0, 1, 0, 2, 1, 0): 4}


def test_refinement_chain_s4(table_a3):
    report = refinement_chain_check(table_a3, 2)
    assert report.ok
    assert report.equals_bruhat_at == 2
    assert all(holds for _a, _b, holds in report.containments)


def test_refinement_chain_b3(table_b3):
    report = refinement_chain_check(table_b3, 4)
    assert report.ok
    assert report.equals_bruhat_at is not None


def test_incomplete_slice_raises():
    ball = enumerate_ball(named_matrix("I2(inf)"), 5)
    table = reflections_in_ball(ball)
    with pytest.raises(IncompleteSliceError):
        k_absolute_length_all(table, 3)


def test_flagged_pairs_on_truncated_ball():
    ball = enumerate_ball(named_matrix("B3"), 4)
    table = reflections_in_ball(ball)
    poset = k_absolute_poset(k_absolute_length_all(table, 0))
    assert poset.metadata["flagged_pairs"] > 0


def test_interval_poset(ball_a3, table_a3):
    poset = intermediate_poset(ball_a3, t_k_set(table_a3, 2))
    w0 = max(range(len(ball_a3)), key=ball_a3.length)
    whole = interval_poset(poset, ball_a3.identity, w0)
    assert whole.n == poset.n
    s = ball_a3.id_of_word((0,))
    st = ball_a3.id_of_word((0, 1))
    small = interval_poset(poset, s, st)
    assert sorted(small.nodes) == sorted([s, st])
