import math

import numpy as np
import pytest

from rudin_shapiro.core import generate_pair
from rudin_shapiro.norms import Arc, FULL_CIRCLE, mq_arc
from rudin_shapiro.verify import (GAMMA, MAHLER_LIMIT_RATIO, bernstein_ratio,
                                  check_certified_intervals,
                                  check_lattice_pair_bound,
                                  check_level_set_measure,
                                  check_subarc_moment_bounds,
                                  mahler_asymptote_ratio, min_modulus_excluding_poles,
                                  random_arcs, run_verification, saffari_ratio,
                                  subarc_mahler_ratio, trend_nonincreasing,
                                  value_distribution)

TAU = math.tau


class TestGamma:
    def test_value(self):
        assert GAMMA == pytest.approx(0.14644660940672624)

    def test_half_angle_identity(self):
        assert 2 * GAMMA == pytest.approx(1 - math.cos(math.pi / 4), abs=1e-15)

    def test_mahler_limit_value(self):
        assert MAHLER_LIMIT_RATIO == pytest.approx(0.8577638849607068)


class TestLatticePairBound:
    def test_k1_exact_lattice(self):
        # lattice {1, -1}: |P_1(1)|^2 = 4 dominates every pair
        report = check_lattice_pair_bound(1)
        assert report.passed
        assert report.margin == pytest.approx(4 - 4 * GAMMA, abs=1e-12)

    @pytest.mark.parametrize("k", [2, 4, 8, 10])
    def test_proved_bound_holds(self, k):
        report = check_lattice_pair_bound(k)
        assert report.passed
        assert report.margin > 0

    def test_k16_passes(self):
        assert check_lattice_pair_bound(16).passed


class TestCertifiedIntervals:
    def test_k1_interval_around_zero(self):
        report = check_certified_intervals(1)
        assert report.passed
        assert report.lhs >= GAMMA * 2

    @pytest.mark.parametrize("k", [4, 8, 12])
    def test_proved_bound_holds(self, k):
        report = check_certified_intervals(k)
        assert report.passed
        assert report.details["certified_intervals"] > 0

    def test_k16_passes(self):
        assert check_certified_intervals(16).passed


class TestBernsteinRatio:
    def test_k0_constant(self):
        report = bernstein_ratio(0)
        assert report.passed
        assert report.details["ratio"] == 0.0

    @pytest.mark.parametrize("k", [1, 4, 8])
    def test_ratio_below_one(self, k):
        report = bernstein_ratio(k)
        assert report.passed
        assert report.details["ratio"] <= 1 + 1e-9

    def test_k12_strictly_below_one(self):
        # grid maxima undershoot the true extrema slightly
        report = bernstein_ratio(12)
        assert report.details["ratio"] < 1.0

    def test_count_precondition(self):
        with pytest.raises(ValueError, match="16n"):
            bernstein_ratio(6, count=100)


class TestLevelSetMeasure:
    def test_full_circle_passes_widely(self):
        report = check_level_set_measure(10, FULL_CIRCLE)
        assert report.passed
        assert report.lhs > 10 * report.rhs

    def test_minimal_arc(self):
        k = 10
        length = 32 * math.pi / (1 << k)
        report = check_level_set_measure(k, Arc(0.7, 0.7 + length))
        assert report.passed

    def test_boundary_arc_random_position(self):
        k = 14
        length = 32 * math.pi / (1 << k)
        rng = np.random.default_rng(3)
        for _ in range(3):
            alpha = rng.uniform(0, TAU)
            assert check_level_set_measure(k, Arc(alpha, alpha + length)).passed

    def test_literal_reading_reported(self):
        report = check_level_set_measure(10, FULL_CIRCLE)
        assert "literal_measure" in report.details
        # gamma * n exceeds sqrt(2n) by k = 10, so the unsquared set is empty
        assert report.details["literal_measure"] == 0.0

    def test_short_arc_rejected(self):
        with pytest.raises(ValueError, match="32"):
            check_level_set_measure(10, Arc(0.0, 1e-4))


class TestSubarcMomentBounds:
    @pytest.mark.parametrize("q", [0.25, 1.0, 2.0, 4.0])
    def test_full_circle_k8(self, q):
        report = check_subarc_moment_bounds(8, FULL_CIRCLE, q)
        assert report.passed
        assert report.details["lower_margin"] > 0

    def test_m2_middle_value(self):
        # M_2^2 = n sits between the bounds with room on both sides
        report = check_subarc_moment_bounds(8, FULL_CIRCLE, 2.0)
        assert report.lhs == pytest.approx(256.0, rel=1e-8)

    def test_minimal_arc_k12(self):
        length = 32 * math.pi / (1 << 12)
        for q in (0.25, 1.0):
            report = check_subarc_moment_bounds(12, Arc(1.1, 1.1 + length), q)
            assert report.passed


class TestSaffariRatio:
    @pytest.mark.parametrize("k", [2, 6, 10, 14])
    def test_q2_ratio_exactly_one(self, k):
        report = saffari_ratio(k, 2.0)
        assert report.passed
        assert abs(report.details["ratio"] - 1.0) <= 1e-8

    def test_p_q_discrepancy_vanishes(self):
        report = saffari_ratio(8, 1.0)
        assert report.details["pq_discrepancy"] <= 1e-8

    def test_q4_k12_close_to_limit(self):
        report = saffari_ratio(12, 4.0)
        assert abs(report.details["ratio"] - 1.0) <= 0.01


class TestTrendAcceptance:
    def test_monotone_sequence(self):
        assert trend_nonincreasing([0.5, 0.3, 0.1], floor=1e-3)

    def test_rise_above_floor_fails(self):
        assert not trend_nonincreasing([0.5, 0.3, 0.4], floor=1e-3)

    def test_noise_below_floor_tolerated(self):
        assert trend_nonincreasing([0.5, 1e-4, 5e-4, 2e-4], floor=1e-3)

    def test_no_overall_decrease_fails(self):
        assert not trend_nonincreasing([0.01, 0.011], floor=1e-3)


class TestValueDistribution:
    def test_total_measure_is_full_circle(self):
        report = value_distribution(6, bins=16, rectangles=())
        assert report.empirical_cdf[-1] == pytest.approx(1.0)
        assert np.all(np.diff(report.empirical_cdf) >= 0)

    def test_low_half_measure_near_pi(self):
        # the limiting law gives measure 2*pi*0.5 to |P|^2/(2n) <= 1/2
        report = value_distribution(12, bins=2, rectangles=())
        low_half = report.empirical_cdf[0] * TAU
        assert low_half == pytest.approx(math.pi, abs=0.05)

    def test_sup_distance_small_at_k12(self):
        report = value_distribution(12, rectangles=())
        assert report.sup_distance_to_uniform <= 0.01

    def test_rectangle_measures(self):
        rect = (0.0, 0.3, 0.0, 0.3)
        report = value_distribution(12, rectangles=(rect,))
        (_, empirical, expected), = report.rectangle_tests
        assert expected == pytest.approx(0.18)
        assert abs(empirical - expected) <= 0.05

    def test_rejects_rectangle_outside_disk(self):
        with pytest.raises(ValueError, match="disk"):
            value_distribution(4, rectangles=((0.5, 0.9, 0.5, 0.9),))

    def test_component_q_matches_p_statistics(self):
        p_report = value_distribution(10, rectangles=(), component="p")
        q_report = value_distribution(10, rectangles=(), component="q")
        # moduli of Q are a half-turn rotation of the moduli of P
        assert q_report.sup_distance_to_uniform == pytest.approx(
            p_report.sup_distance_to_uniform, abs=1e-3)

    def test_sup_distance_shrinks_along_k_ladder(self):
        distances = [value_distribution(k, rectangles=()).sup_distance_to_uniform
                     for k in (10, 12, 14, 16)]
        assert all(b <= a for a, b in zip(distances, distances[1:]))
        assert distances[-1] <= 0.05


class TestMahlerAsymptote:
    def test_k8_within_tolerance(self):
        report = mahler_asymptote_ratio(8)
        assert report.details["distance"] <= 0.05

    def test_q_component_matches_p(self):
        report = mahler_asymptote_ratio(10)
        assert report.details["ratio_q"] == pytest.approx(report.lhs, rel=1e-3)

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            mahler_asymptote_ratio(3)


class TestSubarcMahlerExperiment:
    def test_full_circle_consistent_with_asymptote(self):
        report = subarc_mahler_ratio(10, FULL_CIRCLE)
        asymptote = mahler_asymptote_ratio(10)
        assert report.lhs == pytest.approx(asymptote.lhs, rel=1e-6)

    def test_proved_regime_flagged(self):
        k, n = 12, 1 << 12
        proved_len = math.log(n) ** 1.5 / math.sqrt(n)
        report = subarc_mahler_ratio(k, Arc(0.4, 0.4 + proved_len))
        assert report.details["in_proved_length_regime"]
        assert report.lhs > 0

    def test_conjectured_regime_reported(self):
        k, n = 12, 1 << 12
        report = subarc_mahler_ratio(k, Arc(0.4, 0.4 + 32 * math.pi / n))
        assert not report.details["in_proved_length_regime"]
        assert report.passed  # evidence row, never a gate


class TestPQSymmetry:
    @pytest.mark.parametrize("q", [1.0, 2.0])
    def test_mq_on_shifted_arc(self, q):
        # |Q(e^it)| = |P(e^i(t+pi))|, so norms transport across a half turn
        pair = generate_pair(8)
        arc = Arc(0.3, 1.4)
        shifted = Arc(0.3 + math.pi, 1.4 + math.pi)
        est_q = mq_arc((pair, "q"), arc, q)
        est_p = mq_arc((pair, "p"), shifted, q)
        assert est_q.value == pytest.approx(est_p.value, rel=1e-9)


class TestDrivers:
    def test_random_arcs_meet_hypothesis(self):
        arcs = random_arcs(8, 5, seed=1)
        assert len(arcs) == 5
        for arc in arcs:
            assert arc.length >= 32 * math.pi / 256 - 1e-12
            assert arc.length <= TAU + 1e-12

    def test_random_arcs_seeded(self):
        first = random_arcs(8, 3, seed=9)
        second = random_arcs(8, 3, seed=9)
        assert [(a.alpha, a.beta) for a in first] == \
            [(a.alpha, a.beta) for a in second]

    def test_too_small_k_rejected(self):
        with pytest.raises(ValueError):
            random_arcs(3, 1)

    def test_run_verification_gated_subset(self):
        reports = run_verification(["lattice_pair", "bernstein"], ks=[2, 4],
                                   n_arcs=0)
        assert len(reports) == 4
        assert all(r.passed for r in reports)

    def test_run_verification_skips_vacuous_arcs(self):
        # k = 2 cannot satisfy the 32*pi/n hypothesis; no arc reports
        reports = run_verification(["level_set"], ks=[2], n_arcs=4)
        assert reports == []

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown"):
            run_verification(["nonsense"], ks=[4])

    def test_min_modulus_evidence(self):
        # strictly positive away from the parity zeros at +-1, though
        # near-zeros do occur (the open question is whether they vanish)
        value = min_modulus_excluding_poles(8)
        assert value > 1e-3
