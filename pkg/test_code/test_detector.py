#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""포화 광검출기: 응답 함수, 역함수, 복합 분포 모멘트"""

import math

import numpy as np
import pytest
from scipy import stats

from common.errors import DomainError, OversaturatedError
from modules.detector import (
    DetectorModel,
    NoiseWidthSpec,
    Regime,
    SigmaMode,
    classify_regime,
    current_variance,
    exact_electron_moments,
    expm1x,
    invert_current,
    inverse_slope,
    is_oversaturated,
    linear_current,
    mean_current,
    mean_electrons,
    saturation_excess,
)


def _brute_force_moments(det, mean_photons):
    """절단한 푸아송 합으로 복합 분포의 평균/분산 계산"""
    upper = int(mean_photons + 40 * math.sqrt(mean_photons) + 60)
    n = np.arange(upper + 1)
    weights = stats.poisson.pmf(n, mean_photons)
    mu = det.k_max * -np.expm1(-n / det.n_sat)
    mean = math.fsum(weights * mu)
    sigma_sq = det.sigma_model.sigma_at(mu) ** 2
    variance = math.fsum(weights * (sigma_sq + (mu - mean) ** 2))
    return mean, variance


class TestMeanResponse:

    def test_mean_electrons_examples(self, table_detector):
        assert mean_electrons(table_detector, 0.0) == 0.0
        assert mean_electrons(table_detector, 1e17) == pytest.approx(1e16 * (1 - math.exp(-1)), rel=1e-12)
        assert mean_electrons(table_detector, 1e17) == pytest.approx(6.3212e15, rel=1e-4)
        assert mean_electrons(table_detector, 40 * 1e17) == pytest.approx(1e16, rel=1e-12)

    def test_mean_electrons_accepts_arrays(self, table_detector):
        result = mean_electrons(table_detector, np.array([0.0, 1e17, 2e17]))
        assert result.shape == (3,)
        assert np.all(np.diff(result) > 0)

    def test_negative_photons_rejected(self, table_detector):
        with pytest.raises(DomainError):
            mean_electrons(table_detector, -1.0)
        with pytest.raises(DomainError):
            mean_current(table_detector, -1.0)
        with pytest.raises(DomainError):
            linear_current(table_detector, -1.0)

    def test_saturation_current(self, table_detector):
        assert table_detector.i_max == pytest.approx(16.02, abs=0.01)

    @pytest.mark.parametrize("ratio,expected", [(1.0, 10.13), (2.0, 13.85)])
    def test_mean_current_table_values(self, table_detector, ratio, expected):
        assert mean_current(table_detector, ratio * 1e17) == pytest.approx(expected, abs=0.01)

    @pytest.mark.parametrize("ratio,expected", [(1.0, 16.02), (3.0, 48.07)])
    def test_linear_current_table_values(self, table_detector, ratio, expected):
        assert linear_current(table_detector, ratio * 1e17) == pytest.approx(expected, abs=0.01)

    def test_zero_photons_zero_current(self, table_detector):
        assert mean_current(table_detector, 0.0) == 0.0
        assert linear_current(table_detector, 0.0) == 0.0

    def test_mean_current_below_saturation(self, table_detector):
        currents = mean_current(table_detector, np.logspace(12, 19, 30))
        assert np.all(currents <= table_detector.i_max)
        assert np.all(np.diff(currents) >= 0)


class TestInverse:

    def test_zero_current(self, table_detector):
        assert invert_current(table_detector, 0.0) == 0.0

    def test_table_current_inverts_to_n_sat(self, table_detector):
        assert invert_current(table_detector, 10.13) == pytest.approx(1e17, rel=1e-3)

    @pytest.mark.parametrize("photons", [1e12, 1e15, 1e17, 3e17, 5e17])
    def test_round_trip(self, table_detector, photons):
        current = mean_current(table_detector, photons)
        assert invert_current(table_detector, current) == pytest.approx(photons, rel=1e-9)

    def test_oversaturated_current(self, table_detector):
        with pytest.raises(OversaturatedError) as excinfo:
            invert_current(table_detector, table_detector.i_max)
        assert excinfo.value.current == table_detector.i_max
        assert excinfo.value.i_max == table_detector.i_max
        assert excinfo.value.exit_code == 3

        just_inside = table_detector.i_max * (1 - 1e-13)
        assert is_oversaturated(table_detector, just_inside)
        with pytest.raises(OversaturatedError):
            invert_current(table_detector, just_inside)

    def test_invalid_current(self, table_detector):
        with pytest.raises(DomainError):
            invert_current(table_detector, -0.1)
        with pytest.raises(DomainError):
            invert_current(table_detector, float('nan'))

    def test_inverse_slope_matches_finite_difference(self, table_detector):
        current = 8.0
        step = 1e-6
        numeric = (invert_current(table_detector, current + step)
                   - invert_current(table_detector, current - step)) / (2 * step)
        assert inverse_slope(table_detector, current) == pytest.approx(numeric, rel=1e-5)

    def test_strictly_increasing(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            det = DetectorModel(k_max=10.0 ** rng.uniform(2.0, 16.0), n_sat=10.0 ** rng.uniform(1.0, 17.0), tau_w=1e-4)
            currents = det.i_max * np.sort(rng.uniform(0.0, 1.0 - 1e-6, 500))
            currents = currents[np.diff(currents, prepend=-1.0) > det.i_max * 1e-9]
            photons = np.array([invert_current(det, float(c)) for c in currents])
            assert np.all(np.diff(photons) > 0)


class TestNumericalStability:

    def test_effective_saturation_excess_at_large_n_sat(self, table_detector):
        assert abs(table_detector.n_sat_eff_excess - 0.5) < 1e-2
        assert table_detector.n_sat_eff == pytest.approx(1e17, rel=1e-15)

    def test_excess_small_n_sat(self):
        assert saturation_excess(1.0) == pytest.approx(1 / (1 - math.exp(-1)) - 1, rel=1e-12)
        assert saturation_excess(1e3) == pytest.approx(0.5 + 1 / 12e3, rel=1e-9)

    def test_expm1x(self):
        assert expm1x(1e-10) == pytest.approx(5e-21, rel=1e-9)
        assert expm1x(-0.5) == pytest.approx(math.exp(-0.5) - 1 + 0.5, rel=1e-14)
        assert expm1x(2.0) == pytest.approx(math.exp(2.0) - 3.0, rel=1e-14)


class TestElectronMoments:

    def test_no_photons_only_electronic_noise(self, table_detector):
        mean, variance = exact_electron_moments(table_detector, 0.0)
        assert mean == 0.0
        assert variance == pytest.approx(table_detector.sigma ** 2, rel=1e-15)

    def test_matches_brute_force_sum(self):
        det = DetectorModel(k_max=5.0, n_sat=50.0, tau_w=1e-4,
                            sigma_model=NoiseWidthSpec(SigmaMode.CONSTANT, 0.3))
        mean, variance = exact_electron_moments(det, 10.0)
        oracle_mean, oracle_variance = _brute_force_moments(det, 10.0)
        assert mean == pytest.approx(oracle_mean, rel=1e-10)
        assert variance == pytest.approx(oracle_variance, rel=1e-10)

    def test_shot_scaled_width_matches_brute_force(self):
        det = DetectorModel(k_max=20.0, n_sat=30.0, tau_w=1e-4,
                            sigma_model=NoiseWidthSpec(SigmaMode.SHOT_SCALED, 0.8))
        mean, variance = exact_electron_moments(det, 25.0)
        oracle_mean, oracle_variance = _brute_force_moments(det, 25.0)
        assert mean == pytest.approx(oracle_mean, rel=1e-10)
        assert variance == pytest.approx(oracle_variance, rel=1e-10)

    def test_mean_response_differs_from_poisson_average_by_order_inverse_n_sat(self):
        rng = np.random.default_rng(47)
        for _ in range(500):
            n_sat = float(10.0 ** rng.uniform(2.0, 4.0))
            k_max = float(10.0 ** rng.uniform(0.0, 6.0))
            x = float(rng.uniform(0.05, 5.0))
            det = DetectorModel(k_max=k_max, n_sat=n_sat, tau_w=1e-4)
            averaged, _ = exact_electron_moments(det, x * n_sat)
            gap = mean_electrons(det, x * n_sat) - averaged
            # μ 는 오목하므로 푸아송 평균이 더 작고, 차이는 k_max·x e^{-x}/(2N_sat) 근처
            assert gap > 0
            assert gap <= k_max / n_sat
            assert gap == pytest.approx(k_max * x * math.exp(-x) / (2 * n_sat), rel=0.05)

    def test_random_triples_mean_identity(self):
        rng = np.random.default_rng(20240601)
        for _ in range(100):
            mean_photons = rng.uniform(0.0, 1e3)
            n_sat = rng.uniform(1.0, 1e3)
            k_max = rng.uniform(1.0, 1e6)
            det = DetectorModel(k_max=k_max, n_sat=n_sat, tau_w=1e-4)
            mean, _ = exact_electron_moments(det, mean_photons)
            oracle_mean, _ = _brute_force_moments(det, mean_photons)
            assert mean == pytest.approx(oracle_mean, rel=1e-10)

    def test_linear_limit_is_pure_shot_noise(self):
        det = DetectorModel(k_max=1e9, n_sat=1e12, tau_w=1e-4,
                            sigma_model=NoiseWidthSpec(SigmaMode.CONSTANT, 0.0))
        _, variance = exact_electron_moments(det, 100.0)
        assert variance == pytest.approx((1e9 / 1e12) ** 2 * 100.0, rel=1e-6)

    def test_current_variance_scaling(self, table_detector):
        _, variance = exact_electron_moments(table_detector, 1e17)
        expected = (1.602176634e-19 / 1e-4) ** 2 * variance
        assert current_variance(table_detector, 1e17) == pytest.approx(expected, rel=1e-12)

    def test_negative_mean_rejected(self, table_detector):
        with pytest.raises(DomainError):
            exact_electron_moments(table_detector, -1.0)


class TestRegimes:

    @pytest.mark.parametrize("ratio,regime", [
        (0.01, Regime.LINEAR),
        (1.0, Regime.NONLINEAR),
        (20.0, Regime.OVERSATURATED),
    ])
    def test_classification(self, table_detector, ratio, regime):
        assert classify_regime(table_detector, ratio * 1e17) is regime

    def test_custom_thresholds(self):
        det = DetectorModel(k_max=1.0, n_sat=1.0, tau_w=1.0,
                            linear_threshold=0.5, oversaturation_threshold=2.0)
        assert classify_regime(det, 0.4) is Regime.LINEAR
        assert classify_regime(det, 1.0) is Regime.NONLINEAR
        assert classify_regime(det, 2.0) is Regime.OVERSATURATED


class TestDetectorModel:

    def test_default_sigma(self, table_detector):
        assert table_detector.sigma_model.mode is SigmaMode.CONSTANT
        assert table_detector.sigma == pytest.approx(math.sqrt(1e16 * 0.01))

    def test_responsivity(self, table_detector):
        assert table_detector.responsivity * 1e17 == pytest.approx(table_detector.i_max, rel=1e-15)

    @pytest.mark.parametrize("kwargs", [
        {'k_max': 0.0, 'n_sat': 1.0, 'tau_w': 1.0},
        {'k_max': 1.0, 'n_sat': -1.0, 'tau_w': 1.0},
        {'k_max': 1.0, 'n_sat': 1.0, 'tau_w': float('inf')},
        {'k_max': 1.0, 'n_sat': 1.0, 'tau_w': 1.0, 'linear_threshold': 5.0, 'oversaturation_threshold': 1.0},
    ])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(DomainError):
            DetectorModel(**kwargs)

    def test_negative_sigma_rejected(self):
        with pytest.raises(DomainError):
            NoiseWidthSpec(SigmaMode.CONSTANT, -1.0)

    def test_identical_models_compare_equal(self):
        assert DetectorModel(1.0, 2.0, 3.0) == DetectorModel(1.0, 2.0, 3.0)
        assert DetectorModel(1.0, 2.0, 3.0) != DetectorModel(1.0, 2.0, 4.0)
