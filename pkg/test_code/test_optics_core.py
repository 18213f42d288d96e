#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""광학 코어: 빔스플리터 혼합과 직교 성분 신호"""

import math

import numpy as np
import pytest

from common.errors import DomainError
from modules.optics_core import (
    HBAR,
    CoherentField,
    detector_photons,
    mix_on_beam_splitter,
    normalize_phase,
    photon_number_difference,
    photons_from_power,
    quadrature_expectation,
)


def _fields(alpha_sq, chi, beta_sq, phi):
    return CoherentField.from_photons(alpha_sq, chi), CoherentField.from_photons(beta_sq, phi)


class TestBeamSplitter:

    def test_vacuum_signal_splits_lo_evenly(self):
        signal, lo = _fields(0.0, 0.0, 1e15, 0.7)
        photons1, photons2 = detector_photons(signal, lo)
        assert photons1 == pytest.approx(5e14, rel=1e-15)
        assert photons2 == pytest.approx(5e14, rel=1e-15)

        pair = mix_on_beam_splitter(signal, lo)
        assert pair.photons1 == pytest.approx(5e14, rel=1e-12)
        assert pair.photons2 == pytest.approx(5e14, rel=1e-12)

    def test_maximal_quadrature_difference(self):
        signal, lo = _fields(1e16, math.pi / 2, 1e15, 0.0)
        expected = 2.0 * math.sqrt(1e31)
        assert photon_number_difference(signal, lo) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(6.325e15, rel=1e-3)
        # 복소 진폭 혼합과 닫힌 형태가 일치
        assert mix_on_beam_splitter(signal, lo).photon_difference == pytest.approx(expected, rel=1e-9)

    def test_equal_phases_give_no_difference(self):
        signal, lo = _fields(1e16, 0.3, 1e15, 0.3)
        assert photon_number_difference(signal, lo) == 0.0
        photons1, photons2 = detector_photons(signal, lo)
        assert photons1 == photons2

    @pytest.mark.parametrize("alpha,beta,delta,expected", [
        (1.0, 1.0, math.pi / 6, 1.0),
        (2.0, 3.0, math.pi / 2, 12.0),
    ])
    def test_difference_examples(self, alpha, beta, delta, expected):
        signal = CoherentField(alpha, delta)
        lo = CoherentField(beta, 0.0)
        assert photon_number_difference(signal, lo) == pytest.approx(expected, rel=1e-12)

    def test_figure_parameters_difference(self):
        signal, lo = _fields(1e16, 0.01, 1e15, 0.0)
        assert photon_number_difference(signal, lo) == pytest.approx(6.3245e13, rel=1e-4)

    def test_mixing_conserves_photons(self):
        signal, lo = _fields(3.0, 1.1, 5.0, -0.4)
        pair = mix_on_beam_splitter(signal, lo)
        assert pair.photons1 + pair.photons2 == pytest.approx(8.0, rel=1e-12)

    def test_closed_form_matches_complex_mixing(self):
        signal, lo = _fields(40.0, 0.9, 25.0, 0.2)
        pair = mix_on_beam_splitter(signal, lo)
        photons1, photons2 = detector_photons(signal, lo)
        assert photons1 == pytest.approx(pair.photons1, rel=1e-12)
        assert photons2 == pytest.approx(pair.photons2, rel=1e-12)

    def test_random_mixing_conserves_and_matches_closed_form(self):
        rng = np.random.default_rng(101)
        alpha_sq = 10.0 ** rng.uniform(-3.0, 18.0, 10_000)
        beta_sq = 10.0 ** rng.uniform(-3.0, 18.0, 10_000)
        chi = rng.uniform(-math.pi, math.pi, 10_000)
        phi = rng.uniform(-math.pi, math.pi, 10_000)
        for a_sq, c, b_sq, p in zip(alpha_sq, chi, beta_sq, phi):
            signal, lo = _fields(float(a_sq), float(c), float(b_sq), float(p))
            total = signal.mean_photons + lo.mean_photons
            pair = mix_on_beam_splitter(signal, lo)
            photons1, photons2 = detector_photons(signal, lo)
            assert pair.photons1 + pair.photons2 == pytest.approx(total, rel=1e-12)
            assert photons1 + photons2 == pytest.approx(total, rel=1e-12)
            assert abs(photons1 - pair.photons1) <= 1e-12 * total
            assert abs(photons2 - pair.photons2) <= 1e-12 * total

    def test_balanced_quarter_period_stays_nonnegative(self):
        signal, lo = _fields(63.68052668482938, -2.040764807061156, 63.680526684829374, 2.6716241733235337)
        photons1, photons2 = detector_photons(signal, lo)
        assert photons1 >= 0.0
        assert photons2 == pytest.approx(signal.mean_photons + lo.mean_photons, rel=1e-12)

        rng = np.random.default_rng(202)
        for _ in range(10_000):
            beta_sq = float(10.0 ** rng.uniform(0.0, 17.0))
            alpha_sq = float(beta_sq * (1.0 + rng.uniform(-1e-15, 1e-15)))
            phi = float(rng.uniform(-math.pi, math.pi))
            delta = float(math.pi / 2 * rng.choice([-1.0, 1.0]) + rng.uniform(-1e-9, 1e-9))
            photons1, photons2 = detector_photons(*_fields(alpha_sq, phi + delta, beta_sq, phi))
            assert photons1 >= 0.0
            assert photons2 >= 0.0


class TestQuadrature:

    @pytest.mark.parametrize("alpha_sq,delta,expected", [
        (1.0, 0.0, 0.0),
        (1e16, 0.01, 9.99983e5),
        (25.0, math.pi / 2, 5.0),
    ])
    def test_examples(self, alpha_sq, delta, expected):
        signal = CoherentField.from_photons(alpha_sq, delta)
        assert quadrature_expectation(signal, 0.0) == pytest.approx(expected, rel=1e-6, abs=1e-12)

    def test_phase_periodicity(self):
        lo = CoherentField(2.0, 0.1)
        for chi in (0.3, -1.2, 2.9):
            shifted = CoherentField(3.0, chi + 2 * math.pi)
            original = CoherentField(3.0, chi)
            assert photon_number_difference(shifted, lo) == pytest.approx(
                photon_number_difference(original, lo), rel=1e-12)
            assert quadrature_expectation(shifted, 0.1) == pytest.approx(
                quadrature_expectation(original, 0.1), rel=1e-12)

    def test_antisymmetry(self):
        lo = CoherentField(2.0, 0.0)
        for delta in (0.2, 1.0, 1.4):
            forward = photon_number_difference(CoherentField(3.0, delta), lo)
            backward = photon_number_difference(CoherentField(3.0, -delta), lo)
            assert forward == pytest.approx(-backward, rel=1e-12)


class TestFields:

    def test_normalize_phase_range(self):
        assert normalize_phase(math.pi) == pytest.approx(math.pi)
        assert normalize_phase(-math.pi) == pytest.approx(math.pi)
        assert normalize_phase(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
        assert normalize_phase(0.25) == 0.25

    def test_amplitude_and_photons(self):
        field = CoherentField.from_photons(4.0, math.pi / 2)
        assert field.magnitude == 2.0
        assert field.mean_photons == 4.0
        assert field.amplitude.imag == pytest.approx(2.0)
        assert abs(field.amplitude.real) < 1e-12

    def test_negative_inputs_rejected(self):
        with pytest.raises(DomainError):
            CoherentField(-1.0)
        with pytest.raises(DomainError):
            CoherentField.from_photons(-5.0)

    def test_photons_from_power(self):
        # 1 mW, τ_w = 0.1 ms
        omega = 2 * math.pi * 2.8e14
        photons = photons_from_power(1e-3, omega, 1e-4)
        assert photons == pytest.approx(1e-7 / (HBAR * omega), rel=1e-12)
        assert 1e11 < photons < 1e12

        with pytest.raises(DomainError):
            photons_from_power(1e-3, 0.0, 1e-4)
        with pytest.raises(DomainError):
            photons_from_power(-1.0, omega, 1e-4)
