"""Enumeration oracle and pruned branch-and-bound for maximum contrast."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

import greycontrast as gc
from greycontrast import BudgetExceededError, DomainError, Greyscale, SearchConfig

from conftest import (
    brute_best_vector,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_bipartite,
    wheel6_graph,
)

F = Fraction

WHEEL_VECTOR = (
    F(1, 3), F(1, 3), F(1, 3), F(1, 2), F(1, 2), F(1, 2),
    F(2, 3), F(2, 3), F(1), F(1),
)


class TestOracle:
    def test_k4_over_f3(self, k4):
        res = gc.oracle_max_contrast(k4, gc.maximal_enchained_set(3).values)
        assert res.vector.tones == (F(1, 3), F(1, 3), F(1, 3), F(2, 3), F(2, 3), F(1))
        assert res.witness.tones == (F(0), F(1, 3), F(2, 3), F(1))
        assert res.nodes == 5**4

    def test_single_edge(self):
        res = gc.oracle_max_contrast(path_graph(2), (F(0), F(1)))
        assert res.vector.tones == (F(1),)
        assert res.witness.tones == (F(0), F(1))

    def test_wheel_over_f3(self, wheel6):
        res = gc.oracle_max_contrast(wheel6, gc.maximal_enchained_set(3).values)
        assert res.vector.tones == WHEEL_VECTOR
        assert sum(res.vector.tones) == F(35, 6)

    def test_matches_naive_enumeration(self):
        rng = random.Random(5)
        values = tuple(gc.maximal_enchained_set(2).values)
        for _ in range(10):
            g = random_connected_bipartite(rng, rng.randint(2, 6))
            vec, tones = brute_best_vector(g, values)
            res = gc.oracle_max_contrast(g, values)
            assert res.vector.tones == vec
            assert res.witness.tones == tones

    def test_requires_extremes_in_values(self, k4):
        with pytest.raises(DomainError):
            gc.oracle_max_contrast(k4, (F(0), F(1, 2)))

    def test_budget_carries_partial(self, k4):
        with pytest.raises(BudgetExceededError) as err:
            gc.oracle_max_contrast(k4, (F(0), F(1, 2), F(1)), budget=20)
        partial = err.value.details["partial"]
        assert partial is not None and len(partial[0]) == k4.m

    def test_jobs_identical(self, wheel6):
        values = gc.maximal_enchained_set(3).values
        seq = gc.oracle_max_contrast(wheel6, values, jobs=1)
        par = gc.oracle_max_contrast(wheel6, values, jobs=4)
        assert seq.vector.tones == par.vector.tones
        assert seq.witness.tones == par.witness.tones
        assert seq.nodes == par.nodes


class TestSolve:
    def test_k4(self, k4):
        res = gc.solve_max_contrast(k4)
        assert res.vector.tones == (F(1, 3), F(1, 3), F(1, 3), F(2, 3), F(2, 3), F(1))
        assert res.chromatic_number == 4
        assert res.witness.tones == (F(0), F(1, 3), F(2, 3), F(1))

    def test_bipartite_shortcut(self):
        g = cycle_graph(6)
        res = gc.solve_max_contrast(g)
        assert res.vector.tones == (F(1),) * 6
        assert res.witness.tones == (F(0), F(1), F(0), F(1), F(0), F(1))
        assert res.nodes == 0

    def test_wheel_matches_paper_greyscale(self, wheel6):
        res = gc.solve_max_contrast(wheel6)
        assert res.vector.tones == WHEEL_VECTOR
        paper = Greyscale((F(1), F(0), F(1, 2), F(0), F(2, 3), F(1, 3)))
        assert gc.contrast_vector(wheel6, paper).tones == res.vector.tones

    def test_first_component_is_lightest_tone(self, wheel6):
        for g in [complete_graph(3), complete_graph(5), wheel6, cycle_graph(5)]:
            res = gc.solve_max_contrast(g)
            assert res.vector.tones[0] == F(1, res.chromatic_number - 1)

    def test_pruning_off_same_vector(self):
        rng = random.Random(9)
        graphs = [complete_graph(3), cycle_graph(5), wheel6_graph()]
        for _ in range(5):
            graphs.append(random_connected_bipartite(rng, rng.randint(3, 6)))
        for g in graphs:
            on = gc.solve_max_contrast(g, SearchConfig(pruning=True))
            off = gc.solve_max_contrast(g, SearchConfig(pruning=False))
            assert on.vector.tones == off.vector.tones
            assert on.witness.tones == off.witness.tones

    def test_explicit_values(self, k4):
        res = gc.solve_max_contrast(
            k4, SearchConfig(values=(F(0), F(1, 3), F(2, 3), F(1)))
        )
        assert res.vector.tones == (F(1, 3), F(1, 3), F(1, 3), F(2, 3), F(2, 3), F(1))

    def test_explicit_values_need_extremes(self):
        with pytest.raises(DomainError):
            SearchConfig(values=(F(0), F(1, 2)))

    def test_budget(self, k4):
        with pytest.raises(BudgetExceededError):
            gc.solve_max_contrast(k4, SearchConfig(budget=3))

    def test_edgeless_rejected(self):
        with pytest.raises(DomainError):
            gc.solve_max_contrast(complete_graph(1))

    def test_witness_is_canonical(self, wheel6):
        # the complementary witness attains the same vector, so the solver
        # must have picked the lexicographically smaller tone sequence
        res = gc.solve_max_contrast(wheel6)
        comp = gc.complementary(res.witness)
        assert gc.contrast_vector(wheel6, comp).tones == res.vector.tones
        assert res.witness.tones < comp.tones

    def test_deterministic(self, wheel6):
        a = gc.solve_max_contrast(wheel6)
        b = gc.solve_max_contrast(wheel6)
        assert a.vector.tones == b.vector.tones
        assert a.witness.tones == b.witness.tones
        assert a.nodes == b.nodes


class TestSolveAgainstOracle:
    def test_small_triangles_and_odd_cycles(self):
        for g in [complete_graph(3), cycle_graph(5), cycle_graph(7)]:
            values = gc.maximal_enchained_set(2).values
            solved = gc.solve_max_contrast(g)
            oracle = gc.oracle_max_contrast(g, values)
            assert solved.vector.tones == oracle.vector.tones
            assert solved.witness.tones == oracle.witness.tones

    def test_k5_against_oracle(self):
        g = complete_graph(5)
        solved = gc.solve_max_contrast(g)
        oracle = gc.oracle_max_contrast(g, gc.maximal_enchained_set(4).values)
        assert solved.vector.tones == oracle.vector.tones
        assert solved.witness.tones == oracle.witness.tones
