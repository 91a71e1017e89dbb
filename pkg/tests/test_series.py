"""Tests for the generating series and asymptotic evaluators."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mealygrowth import (
    AsymptoteSpec,
    automaton_growth_coeffs,
    ball_growth_coeffs,
    count_distinct_congruent,
    enumerate_normal_forms,
    growth_asymptotes,
    odd_distinct_partitions,
    partial_sum_check,
    psi_sum_form,
    richmond_asymptote,
    tauberian_probe,
    word_growth_coeffs,
)
from mealygrowth.series import (
    BETA,
    Q_ASYMPTOTE,
    TAUBERIAN_ALPHA,
    divide_one_minus_xk,
    multiply_one_minus_xk,
)


class TestPartitions:
    def test_first_values(self):
        assert odd_distinct_partitions(9) == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2]

    def test_q16(self):
        # 16 = 1+15 = 3+13 = 5+11 = 7+9 = 1+3+5+7
        assert odd_distinct_partitions(16)[16] == 5

    @given(st.integers(0, 400))
    @settings(max_examples=40)
    def test_sum_form_agrees(self, N):
        assert psi_sum_form(N) == odd_distinct_partitions(N)

    @given(st.integers(0, 200))
    @settings(max_examples=40)
    def test_congruence_oracle(self, n):
        assert count_distinct_congruent(n, [1], 2) == odd_distinct_partitions(n)[n]

    def test_distinct_parts_special_case(self):
        # partitions of 6 into distinct parts: 6, 5+1, 4+2, 3+2+1
        assert count_distinct_congruent(6, [0, 1], 2) == 4


class TestGrowthCoefficients:
    def test_word_growth_prefix(self):
        assert word_growth_coeffs(9) == [1, 2, 3, 4, 5, 7, 9, 11, 13, 16]

    def test_automaton_growth_prefix(self):
        assert automaton_growth_coeffs(6)[1:] == [2, 4, 6, 9, 13, 18]

    def test_ball_growth_prefix(self):
        assert ball_growth_coeffs(5) == [1, 3, 6, 10, 15, 22]

    def test_census_agrees_with_series(self):
        delta = word_growth_coeffs(14)
        assert [enumerate_normal_forms(n) for n in range(15)] == delta

    @given(st.integers(1, 300))
    @settings(max_examples=30)
    def test_series_identities(self, N):
        delta = word_growth_coeffs(N)
        gamma = automaton_growth_coeffs(N)
        ball = ball_growth_coeffs(N)
        assert gamma == divide_one_minus_xk(list(delta), 2)
        assert ball == divide_one_minus_xk(list(delta), 1)
        assert list(delta) == multiply_one_minus_xk(list(ball), 1)
        # sphere counts inside the ball
        assert all(g <= b for g, b in zip(gamma, ball))

    def test_parity_sum(self):
        delta = word_growth_coeffs(40)
        gamma = automaton_growth_coeffs(40)
        for n in (0, 1, 7, 40):
            assert gamma[n] == sum(delta[i] for i in range(n % 2, n + 1, 2))


class TestAsymptotes:
    def test_spec_rejects_bad_prefactor(self):
        with pytest.raises(ValueError):
            AsymptoteSpec(-1.0, 0.0, 1.0)

    def test_log_evaluate_consistent(self):
        spec = AsymptoteSpec(2.0, 0.25, BETA)
        assert spec.evaluate(100) == pytest.approx(math.exp(spec.log_evaluate(100)))

    def test_ball_is_twice_automaton(self):
        a = growth_asymptotes(500)
        assert a.ball_qform == pytest.approx(2 * a.automaton_qform)
        assert a.ball_closed == pytest.approx(2 * a.automaton_closed)

    def test_qform_matches_exact_at_1000(self):
        n = 1000
        coeffs = ball_growth_coeffs(n)
        a = growth_asymptotes(n)
        assert coeffs[n] / a.ball_qform == pytest.approx(1.0, abs=0.05)

    def test_closed_form_matches_qform_through_q_asymptote(self):
        n = 2000
        a = growth_asymptotes(n)
        q_pred = Q_ASYMPTOTE.evaluate(n)
        q_exact = odd_distinct_partitions(n)[n]
        assert a.automaton_closed / a.automaton_qform == pytest.approx(
            q_pred / q_exact, rel=1e-9
        )


class TestRichmond:
    def test_odd_distinct_specialization(self):
        n = 5000
        q = odd_distinct_partitions(n)[n]
        assert q / richmond_asymptote([1], 2, 1, n) == pytest.approx(1.0, abs=0.02)

    def test_mod3_residues(self):
        n = 3000
        exact = count_distinct_congruent(n, [1, 2], 3)
        assert exact / richmond_asymptote([1, 2], 3, 2, n) == pytest.approx(1.0, abs=0.02)

    def test_gcd_precondition(self):
        with pytest.raises(ValueError):
            richmond_asymptote([2], 4, 1, 100)


class TestPartialSums:
    def test_ratio_approaches_one(self):
        rows = partial_sum_check(0.5, 2.0, 5000, samples=[100, 1000, 5000])
        ratios = [r.ratio for r in rows]
        assert ratios == sorted(ratios)
        assert ratios[-1] == pytest.approx(1.0, abs=0.02)

    def test_beta_scaling(self):
        # the prediction carries the 2/beta prefactor exactly
        r1 = partial_sum_check(0.0, 1.0, 100, samples=[100])[0]
        assert r1.asymptote == pytest.approx(2 * 100**0.5 * math.exp(10.0))

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            partial_sum_check(0.0, 30.0, 10**6, samples=[10**6])


class TestTauberian:
    def test_refuses_fat_tail(self):
        rows = tauberian_probe(500, [0.99])
        assert not rows[0].ok
        assert rows[0].value is None

    def test_accepts_and_targets_constant(self):
        rows = tauberian_probe(3000, [0.7, 0.8, 0.9])
        assert all(r.ok for r in rows)
        values = [r.value for r in rows]
        # monotone approach toward pi^2/24 from above as x -> 1
        assert values == sorted(values, reverse=True)
        assert all(v > TAUBERIAN_ALPHA for v in values)
