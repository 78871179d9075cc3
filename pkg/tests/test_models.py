"""The four laws: direct evaluation, tabulation, and the nesting identities."""

from __future__ import annotations

import math

import numpy as np
import pytest

import ranklaws as rl
from conftest import random_beta_like, random_lavalette, random_mandelbrot, random_zipf, ulp_diff


class TestEvaluate:
    def test_beta_like_direct_substitution(self):
        assert rl.evaluate(rl.BetaLikeParams(k=1, a=1, b=1, n=3), 1) == 3.0

    def test_beta_like_at_last_rank(self):
        # At r = n the numerator term is 1^b = 1, so f(n) = k * n^(-a).
        params = rl.BetaLikeParams(k=0.0273, a=0.4058, b=0.991, n=100)
        expected = 0.0273 * 100.0 ** (-0.4058)
        assert expected == pytest.approx(0.004212720509245773, rel=1e-15)
        assert rl.evaluate(params, 100) == pytest.approx(expected, rel=1e-14)

    def test_zipf_zero_exponent_is_constant(self):
        assert rl.evaluate(rl.ZipfParams(k=5, alpha=0), 17) == 5.0

    def test_lavalette_direct_substitution(self):
        assert rl.evaluate(rl.LavaletteParams(k=2, b=1, n=5), 5) == 0.4

    def test_zipf_any_rank_above_one(self):
        assert rl.evaluate(rl.ZipfParams(k=2, alpha=1), 4) == 0.5

    @pytest.mark.parametrize("rank", [0, -3, 101])
    def test_rank_outside_range_rejected(self, rank):
        params = rl.BetaLikeParams(k=1, a=0.5, b=0.5, n=100)
        with pytest.raises(rl.ValidationError, match="1..100"):
            rl.evaluate(params, rank)

    def test_zipf_rank_must_be_positive(self):
        with pytest.raises(rl.ValidationError, match="r >= 1"):
            rl.evaluate(rl.ZipfParams(k=1, alpha=1), 0)

    def test_rank_must_be_integer(self):
        with pytest.raises(rl.ValidationError, match="integer"):
            rl.evaluate(rl.ZipfParams(k=1, alpha=1), 2.0)

    def test_numpy_integer_rank_accepted(self):
        assert rl.evaluate(rl.ZipfParams(k=1, alpha=1), np.int64(2)) == 0.5


class TestCurve:
    def test_beta_like_b_zero_is_inverse_rank(self):
        series = rl.curve(rl.BetaLikeParams(k=1, a=1, b=0, n=4))
        assert series.values.tolist() == [1.0, 1 / 2, 1 / 3, 1 / 4]

    def test_lavalette_three_points(self):
        series = rl.curve(rl.LavaletteParams(k=1, b=1, n=3))
        assert series.values.tolist() == [3.0, 1.0, 1 / 3]

    def test_mandelbrot_reduces_to_n_over_r(self):
        series = rl.curve(rl.MandelbrotParams(rho=0, epsilon=0, n=4))
        assert series.values.tolist() == [4.0, 2.0, 4 / 3, 1.0]

    def test_zipf_needs_explicit_length(self):
        with pytest.raises(rl.ValidationError, match="explicit length"):
            rl.curve(rl.ZipfParams(k=1, alpha=1))

    def test_zero_length_rejected(self):
        with pytest.raises(rl.ValidationError):
            rl.curve(rl.ZipfParams(k=1, alpha=1), n=0)

    def test_mismatched_length_rejected(self):
        with pytest.raises(rl.ValidationError, match="does not match"):
            rl.curve(rl.LavaletteParams(k=1, b=1, n=3), n=5)

    def test_increasing_params_cannot_form_series(self):
        with pytest.raises(rl.ValidationError, match="non-increasing"):
            rl.curve(rl.ZipfParams(k=1, alpha=-1), n=5)

    def test_matches_evaluate_pointwise(self):
        # Tabulation is vectorized, evaluate is scalar; the two pow
        # implementations may differ in the last couple of ulps.
        params = rl.BetaLikeParams(k=0.5, a=0.7, b=1.2, n=25)
        series = rl.curve(params)
        for rank, value, _ in series.entries():
            assert ulp_diff(value, rl.evaluate(params, rank)) <= 4


class TestNestingIdentities:
    def test_b_zero_equals_zipf_exactly(self):
        rng = np.random.default_rng(101)
        for _ in range(50):
            zipf = random_zipf(rng)
            n = int(rng.integers(1, 60))
            beta = rl.BetaLikeParams(k=zipf.k, a=zipf.alpha, b=0.0, n=n)
            for r in range(1, n + 1):
                assert rl.evaluate(beta, r) == rl.evaluate(zipf, r)
            assert np.array_equal(rl.model_values(beta, n), rl.model_values(zipf, n))

    def test_a_equals_b_matches_lavalette(self):
        # Contract allows 2 ulps; the shared expression shape makes the
        # reduction exact, so assert the stronger bit equality.
        rng = np.random.default_rng(202)
        for _ in range(50):
            lav = random_lavalette(rng, int(rng.integers(1, 60)))
            beta = rl.BetaLikeParams(k=lav.k, a=lav.b, b=lav.b, n=lav.n)
            for r in range(1, lav.n + 1):
                assert rl.evaluate(beta, r) == rl.evaluate(lav, r)
            assert np.array_equal(rl.model_values(beta, lav.n), rl.model_values(lav, lav.n))

    def test_reflection_swaps_negated_exponents(self):
        # Substituting r -> n+1-r in k (n+1-r)^b / r^a gives k r^b / (n+1-r)^a,
        # i.e. the law with exponents swapped AND negated.
        rng = np.random.default_rng(303)
        for _ in range(50):
            beta = random_beta_like(rng, int(rng.integers(1, 40)))
            mirrored = rl.BetaLikeParams(k=beta.k, a=-beta.b, b=-beta.a, n=beta.n)
            for r in range(1, beta.n + 1):
                lhs = rl.evaluate(beta, r)
                rhs = rl.evaluate(mirrored, beta.n + 1 - r)
                assert ulp_diff(lhs, rhs) <= 4

    def test_all_evaluations_finite_and_positive(self):
        rng = np.random.default_rng(404)
        for _ in range(25):
            n = int(rng.integers(1, 50))
            for params in (
                random_zipf(rng),
                random_mandelbrot(rng, n),
                random_lavalette(rng, n),
                random_beta_like(rng, n),
            ):
                values = rl.model_values(params, n)
                assert np.all(np.isfinite(values))
                assert np.all(values > 0)


class TestParamValidation:
    @pytest.mark.parametrize(
        "build",
        [
            lambda: rl.ZipfParams(k=0, alpha=1),
            lambda: rl.ZipfParams(k=-1, alpha=1),
            lambda: rl.ZipfParams(k=math.nan, alpha=1),
            lambda: rl.ZipfParams(k=1, alpha=math.inf),
            lambda: rl.MandelbrotParams(rho=-1.0, epsilon=0, n=5),
            lambda: rl.MandelbrotParams(rho=0, epsilon=0, n=0),
            lambda: rl.LavaletteParams(k=0, b=1, n=5),
            lambda: rl.BetaLikeParams(k=1, a=1, b=math.nan, n=5),
            lambda: rl.BetaLikeParams(k=1, a=1, b=1, n=0),
        ],
    )
    def test_invalid_params_rejected(self, build):
        with pytest.raises(rl.ValidationError):
            build()

    def test_params_are_immutable(self):
        params = rl.ZipfParams(k=1, alpha=1)
        with pytest.raises(Exception):
            params.k = 2.0
