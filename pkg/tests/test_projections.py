from __future__ import annotations

from itertools import chain, combinations

import pytest

from coxkit import DomainError, enumerate_ball, named_matrix
from coxkit.orders import intermediate_poset
from coxkit.posets import poset_isomorphic
from coxkit.projections import (is_order_preserving, parabolic_decompose,
                                phi_k_image_poset, project_PJ, project_QJ,
                                projection_map, projection_monoid)
from coxkit.reflections import reflections_in_ball, t_k_set


def _subsets(gens):
    gens = sorted(gens)
    return chain.from_iterable(combinations(gens, r) for r in range(len(gens) + 1))


def _bruhat_poset(ball, table):
    k = (max(ball.length(t) for t in table.reflections) - 1) // 2
    return intermediate_poset(ball, t_k_set(table, k))


def _in_parabolic(ball, w, J):
    return set(ball.word(w)) <= set(J)


def test_decomposition_laws(ball_a3, ball_b3):
    for ball in (ball_a3, ball_b3):
        for J in _subsets(ball.matrix.generators):
            for w in range(len(ball)):
                d = parabolic_decompose(ball, w, J, "right")
                assert ball.multiply(d.coset_rep, d.parabolic_part) == w
                assert (ball.length(d.coset_rep) + ball.length(d.parabolic_part)
                        == ball.length(w))
                assert _in_parabolic(ball, d.parabolic_part, J)
                assert not (ball.right_descents(d.coset_rep) & set(J))

                d = parabolic_decompose(ball, w, J, "left")
                assert ball.multiply(d.parabolic_part, d.coset_rep) == w
                assert (ball.length(d.coset_rep) + ball.length(d.parabolic_part)
                        == ball.length(w))
                assert _in_parabolic(ball, d.parabolic_part, J)
                assert not (ball.left_descents(d.coset_rep) & set(J))


def test_projection_is_coset_minimum(ball_a3):
    ball = ball_a3
    for J in _subsets(ball.matrix.generators):
        wj = [u for u in range(len(ball)) if _in_parabolic(ball, u, J)]
        for w in range(len(ball)):
            p = project_PJ(ball, w, J)
            assert project_PJ(ball, p, J) == p
            assert all(ball.length(p) <= ball.length(ball.multiply(w, u))
                       for u in wj)
            q = project_QJ(ball, w, J)
            assert all(ball.length(q) <= ball.length(ball.multiply(u, w))
                       for u in wj)


def test_pj_preserves_bruhat(ball_a3, table_a3, ball_b3, table_b3):
    for ball, table in ((ball_a3, table_a3), (ball_b3, table_b3)):
        poset = _bruhat_poset(ball, table)
        for J in _subsets(ball.matrix.generators):
            report = is_order_preserving(projection_map(ball, J, "P"), poset)
            assert report.ok, (J, report.violations)


def test_qj_breaks_weak_order_in_a2(ball_a2, table_a2):
    # Q^J need not preserve the weak order: with J = {1},
    # ts -> s and sts -> st, but s is not weakly below st
    ball = ball_a2
    poset = intermediate_poset(ball, t_k_set(table_a2, 0))
    report = is_order_preserving(projection_map(ball, [1], "Q"), poset)
    assert not report.ok
    words = {(tuple(ball.word(u)), tuple(ball.word(v)))
             for u, v in report.violations}
    assert ((1, 0), (0, 1, 0)) in words
    report = is_order_preserving(projection_map(ball, [0], "Q"), poset)
    assert not report.ok
    words = {(tuple(ball.word(u)), tuple(ball.word(v)))
             for u, v in report.violations}
    assert ((0, 1), (0, 1, 0)) in words


def test_phi_image_isomorphic_to_bruhat(ball_a2, table_a2, ball_a3, table_a3):
    for ball, table in ((ball_a2, table_a2), (ball_a3, table_a3)):
        bruhat = _bruhat_poset(ball, table)
        image = phi_k_image_poset(ball, bruhat)
        ok, bijection = poset_isomorphic(image, bruhat)
        assert ok
        assert len(bijection) == len(ball)


def test_projection_monoid_a2(ball_a2, table_a2):
    ball = ball_a2
    gens = [projection_map(ball, [s], "P") for s in ball.matrix.generators]
    report = projection_monoid(ball, gens, poset=_bruhat_poset(ball, table_a2))
    assert report.size == 6
    assert report.idempotent
    assert report.braid_ok
    assert report.order_preserving


def test_projection_monoid_a3(ball_a3, table_a3):
    ball = ball_a3
    gens = [projection_map(ball, [s], "P") for s in ball.matrix.generators]
    report = projection_monoid(ball, gens)
    assert report.idempotent and report.braid_ok
    # 0-Hecke monoid of S4: one idempotent-generated map per element
    assert report.size == 24


def test_errors(ball_a2):
    with pytest.raises(DomainError):
        projection_map(ball_a2, [0], "X")
    with pytest.raises(DomainError):
        parabolic_decompose(ball_a2, 0, [5])
    with pytest.raises(DomainError):
        parabolic_decompose(ball_a2, 0, [0], side="up")
    truncated = enumerate_ball(named_matrix("I2(inf)"), 3)
    with pytest.raises(DomainError):
        phi_k_image_poset(truncated, _bruhat_poset(
            truncated, reflections_in_ball(truncated)))
