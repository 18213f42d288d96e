#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
위상 추정 정밀도 (오차 전파)
- 일반형: δχ = [Σ_j (dF/dI_j)² δ²I_j]^{1/2} / (2|αβ cos(χ − φ)|)
- 동일 검출기: δχ = e σ Ñ_sat (Δ₁² + Δ₂²)^{1/2} / (2 τ_w |αβ cos(χ − φ)|) / √M,
  Δ_j = 1/(I_max − I_j)
"""

import math
from typing import Sequence

import numpy as np

from common.errors import DegenerateSignalError, DivergentPrecisionError, DomainError, NonIdenticalDetectorsError
from modules.detector import current_variance, inverse_slope, ELEMENTARY_CHARGE
from modules.optics_core import detector_photons
from .estimator import forward_currents
from .models import HomodyneSetup

# |cos(χ − φ)| 가 이보다 작으면 발산으로 본다
COS_EPSILON = 1e-12


def _sensitivity(setup: HomodyneSetup) -> float:
    """|∂(N₂ − N₁)/∂χ| = 2|αβ cos(χ − φ)|"""
    if setup.signal.magnitude == 0:
        raise DegenerateSignalError("신호광 진폭이 0 이라 정밀도가 정의되지 않습니다 (|α| = 0)")
    cosine = math.cos(setup.signal.phase - setup.lo.phase)
    if abs(cosine) < COS_EPSILON:
        raise DivergentPrecisionError(
            f"χ − φ = ±π/2 에서 정밀도가 발산합니다 (cos = {cosine:.3g})")
    return 2.0 * setup.signal.magnitude * setup.lo.magnitude * abs(cosine)


def precision_from_currents(setup: HomodyneSetup, current1: float, current2: float,
                            sigma: float, shots: int = 1) -> float:
    """주어진 전류에서의 동일 검출기 δχ"""
    if not setup.identical_detectors:
        raise NonIdenticalDetectorsError("동일 검출기 가정이 깨졌습니다. general_precision 을 사용하세요")
    if shots < 1:
        raise DomainError(f"측정 횟수 M 은 1 이상이어야 합니다: {shots}")

    det = setup.det1
    sensitivity = _sensitivity(setup)
    # inverse_slope 가 과포화 검사를 겸한다
    slope1 = inverse_slope(det, current1)
    slope2 = inverse_slope(det, current2)
    delta1 = slope1 / det.n_sat_eff
    delta2 = slope2 / det.n_sat_eff

    prefactor = ELEMENTARY_CHARGE * sigma * det.n_sat_eff / (det.tau_w * sensitivity)
    return prefactor * math.hypot(delta1, delta2) / math.sqrt(shots)


def analytic_precision(setup: HomodyneSetup, sigma: float, shots: int = 1) -> float:
    """전방 모델 전류에서의 δχ, M 회 반복이면 1/√M 배"""
    record = forward_currents(setup)
    return precision_from_currents(setup, record.current1, record.current2, sigma, shots)


def general_precision(setup: HomodyneSetup, var1: float, var2: float) -> float:
    """검출기별 전류 분산을 받는 일반 오차 전파 (비동일 검출기 허용)"""
    if var1 < 0 or var2 < 0:
        raise DomainError(f"전류 분산은 0 이상이어야 합니다: {var1}, {var2}")

    sensitivity = _sensitivity(setup)
    record = forward_currents(setup)
    slope1 = inverse_slope(setup.det1, record.current1)
    slope2 = inverse_slope(setup.det2, record.current2)
    return math.sqrt(slope1 ** 2 * var1 + slope2 ** 2 * var2) / sensitivity


def total_precision(setup: HomodyneSetup, shots: int = 1) -> float:
    """광자 잡음 항을 포함한 정확한 전류 분산으로 계산한 δχ"""
    photons1, photons2 = detector_photons(setup.signal, setup.lo)
    var1 = current_variance(setup.det1, photons1) / shots
    var2 = current_variance(setup.det2, photons2) / shots
    return general_precision(setup, var1, var2)


def precision_scaling_slope(photon_numbers: Sequence[float], precisions: Sequence[float]) -> float:
    """log δχ – log N 최소제곱 기울기 (SQL 이면 −1/2)"""
    x = np.asarray(photon_numbers, dtype=float)
    y = np.asarray(precisions, dtype=float)
    mask = np.isfinite(x) & np.isfinite(y) & (x > 0) & (y > 0)
    if mask.sum() < 2:
        return float('nan')
    slope, _ = np.polyfit(np.log(x[mask]), np.log(y[mask]), 1)
    return float(slope)
