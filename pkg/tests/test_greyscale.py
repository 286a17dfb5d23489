"""Contrast/gradation vectors, lexicographic order, complementary
greyscales, tone-bucket colourings, incremental paths, verification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import greycontrast as gc
from greycontrast import (
    DomainError,
    Greyscale,
    GreyscaleError,
    ImproperColouringError,
)

from conftest import complete_graph, path_graph, random_connected_bipartite, wheel6_graph

F = Fraction

K4 = complete_graph(4)
K4_F = Greyscale((F(0), F(1, 2), F(1, 2), F(1)))
K4_FPRIME = Greyscale((F(0), F(1, 3), F(2, 3), F(1)))
WHEEL = wheel6_graph()
WHEEL_OPT = Greyscale((F(1), F(0), F(1, 2), F(0), F(2, 3), F(1, 3)))

TONES = st.sampled_from(
    [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
)


def random_greyscale(rng: random.Random, n: int) -> Greyscale:
    pool = [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
    tones = [rng.choice(pool) for _ in range(n)]
    tones[rng.randrange(n)] = F(0)
    while True:
        i = rng.randrange(n)
        if tones[i] != F(0) or tones.count(F(0)) > 1:
            tones[i] = F(1)
            break
    return Greyscale(tuple(tones))


class TestGreyscaleType:
    def test_requires_extremes(self):
        with pytest.raises(GreyscaleError):
            Greyscale((F(0), F(1, 2)))
        with pytest.raises(GreyscaleError):
            Greyscale((F(1, 2), F(1)))

    def test_requires_unit_interval(self):
        with pytest.raises(GreyscaleError):
            Greyscale((F(0), F(1), F(3, 2)))

    def test_file_roundtrip(self):
        text = gc.write_greyscale(K4_FPRIME)
        assert gc.parse_greyscale(text, 4).tones == K4_FPRIME.tones

    def test_parse_rejects_partial(self):
        with pytest.raises(GreyscaleError):
            gc.parse_greyscale("0 0\n1 1\n", 3)
        with pytest.raises(GreyscaleError):
            gc.parse_greyscale("0 0\n0 1\n1 1\n", 2)


class TestContrastVectors:
    def test_k4_paper_pair(self):
        assert gc.contrast_vector(K4, K4_F).tones == (
            F(0), F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1),
        )
        assert gc.contrast_vector(K4, K4_FPRIME).tones == (
            F(1, 3), F(1, 3), F(1, 3), F(2, 3), F(2, 3), F(1),
        )

    def test_gradation_is_reverse(self):
        grad = gc.gradation_vector(K4, K4_F)
        assert grad.tones == (F(1), F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(0))
        assert grad.reversed().tones == gc.contrast_vector(K4, K4_F).tones

    def test_single_edge(self):
        g = path_graph(2)
        f = Greyscale((F(0), F(1)))
        assert gc.contrast_vector(g, f).tones == (F(1),)
        assert gc.gradation_vector(g, f).tones == (F(1),)

    def test_lex_compare(self):
        cf = gc.contrast_vector(K4, K4_F)
        cfp = gc.contrast_vector(K4, K4_FPRIME)
        assert gc.lex_compare(cf, cfp) == -1  # f' has better contrast
        assert gc.lex_compare(cf, cf) == 0
        a = gc.ContrastVector((F(1, 3), F(1)))
        b = gc.ContrastVector((F(1, 2), F(1, 2)))
        assert gc.lex_compare(a, b) == -1

    def test_lex_compare_length_mismatch(self):
        with pytest.raises(DomainError):
            gc.lex_compare(
                gc.ContrastVector((F(1),)), gc.ContrastVector((F(1), F(1)))
            )

    def test_size_mismatch_rejected(self):
        with pytest.raises(GreyscaleError):
            gc.contrast_vector(K4, Greyscale((F(0), F(1))))

    def test_complementary(self):
        f = Greyscale((F(0), F(1, 2), F(1)))
        assert gc.complementary(f).tones == (F(1), F(1, 2), F(0))
        assert gc.complementary(gc.complementary(f)).tones == f.tones

    def test_complementary_same_contrast_on_k4(self):
        assert (
            gc.contrast_vector(K4, K4_F).tones
            == gc.contrast_vector(K4, gc.complementary(K4_F)).tones
        )

    def test_random_invariants(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_connected_bipartite(rng, rng.randint(2, 8))
            f = random_greyscale(rng, g.n)
            cv = gc.contrast_vector(g, f)
            assert len(cv) == g.m
            assert all(a <= b for a, b in zip(cv.tones, cv.tones[1:]))
            assert gc.contrast_vector(g, gc.complementary(f)).tones == cv.tones
            assert gc.gradation_vector(g, f).tones == tuple(reversed(cv.tones))

    @given(st.lists(TONES, min_size=1, max_size=6), st.lists(TONES, min_size=1, max_size=6), st.lists(TONES, min_size=1, max_size=6))
    def test_lex_total_order(self, xs, ys, zs):
        n = min(len(xs), len(ys), len(zs))
        a = gc.ContrastVector(tuple(sorted(xs[:n])))
        b = gc.ContrastVector(tuple(sorted(ys[:n])))
        c = gc.ContrastVector(tuple(sorted(zs[:n])))
        assert gc.lex_compare(a, b) == -gc.lex_compare(b, a)
        if gc.lex_compare(a, b) <= 0 and gc.lex_compare(b, c) <= 0:
            assert gc.lex_compare(a, c) <= 0


class TestLightestTone:
    def test_values(self):
        assert gc.lightest_tone(K4) == F(1, 3)
        assert gc.lightest_tone(complete_graph(3)) == F(1, 2)
        assert gc.lightest_tone(path_graph(4)) == F(1)

    def test_edgeless_rejected(self):
        with pytest.raises(DomainError):
            gc.lightest_tone(complete_graph(1))


class TestColouringFromGreyscale:
    def test_wheel_buckets(self):
        classes = gc.colouring_from_greyscale(WHEEL, WHEEL_OPT, 3)
        assert classes == (3, 0, 1, 0, 2, 1)

    def test_k4_distinct_tones(self):
        assert gc.colouring_from_greyscale(K4, K4_FPRIME, 3) == (0, 1, 2, 3)

    def test_improper_reports_edge(self):
        g = complete_graph(3)
        f = Greyscale((F(0), F(1, 4), F(1)))
        with pytest.raises(ImproperColouringError) as err:
            gc.colouring_from_greyscale(g, f, 3)
        assert err.value.details["edge"] == (0, 1)


class TestIncrementalPaths:
    def test_single_edge_is_its_own_path(self):
        g = path_graph(2)
        f = Greyscale((F(0), F(1)))
        paths = gc.find_incremental_paths(g, f, (0, 1))
        assert [p.vertices for p in paths] == [(0, 1)]
        assert paths[0].step == F(1)

    def test_wheel_edge(self):
        paths = gc.find_incremental_paths(WHEEL, WHEEL_OPT, (1, 5))
        assert (1, 5, 4, 0) in [p.vertices for p in paths]
        for p in paths:
            assert [WHEEL_OPT[v] for v in p.vertices] == [
                F(i, 3) for i in range(4)
            ]

    def test_k4_edge(self):
        paths = gc.find_incremental_paths(K4, K4_FPRIME, (0, 1))
        assert [p.vertices for p in paths] == [(0, 1, 2, 3)]

    def test_wrong_edge_rejected(self):
        with pytest.raises(DomainError):
            gc.find_incremental_paths(K4, K4_FPRIME, (0, 3))  # tone 1, not 1/3


class TestVerifyMaxConditions:
    def test_wheel_optimum_passes(self):
        report = gc.verify_max_conditions(WHEEL, WHEEL_OPT)
        assert report.passed and report.violations == () and report.k == 3

    def test_zero_component_detected(self):
        report = gc.verify_max_conditions(K4, K4_F)
        assert not report.passed
        assert ("zero_component", (1, 2)) in report.violations

    def test_closest_pair_detected(self):
        g = path_graph(3)
        f = Greyscale((F(0), F(1, 4), F(1)))
        report = gc.verify_max_conditions(g, f)
        assert not report.passed
        assert any(c == "closest_pair" and w == 1 for c, w in report.violations)

    def test_passing_implies_proper_colouring(self):
        # spot the linkage between the checks and the bucket colouring
        report = gc.verify_max_conditions(WHEEL, WHEEL_OPT)
        assert report.passed
        gc.colouring_from_greyscale(WHEEL, WHEEL_OPT, report.k)

    def test_report_consistency_guard(self):
        with pytest.raises(DomainError):
            gc.VerificationReport(True, (("zero_component", (0, 1)),), 2)
