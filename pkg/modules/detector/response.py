#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
포화 광검출기 응답
- μ(n), 평균 전류의 닫힌 형태와 그 역함수 F
- 푸아송–가우시안 복합 분포의 정확한 1·2차 모멘트
- 응답 영역 분류
"""

import math
from typing import Tuple, Union

import numpy as np

from common.errors import DomainError, OversaturatedError
from .models import DetectorModel, Regime, SigmaMode, OVERSATURATION_GUARD
from .utils import one_minus_exp

ArrayLike = Union[float, np.ndarray]


def _check_nonnegative(value: ArrayLike, name: str):
    """음수 입력 차단 (스칼라/배열 공용)"""
    if np.any(np.asarray(value) < 0):
        raise DomainError(f"{name} 는 0 이상이어야 합니다: {value}")


def _as_output(result, like):
    """스칼라 입력이면 float 로 반환"""
    if np.ndim(like) == 0:
        return float(result)
    return result


def mean_electrons(det: DetectorModel, n: ArrayLike) -> ArrayLike:
    """광자 n 개 입사 시 평균 광전자수 μ(n) = k_max (1 − e^{−n/N_sat})"""
    _check_nonnegative(n, '광자수')
    result = det.k_max * one_minus_exp(np.asarray(n, dtype=float) / det.n_sat)
    return _as_output(result, n)


def mean_current(det: DetectorModel, mean_photons: ArrayLike) -> ArrayLike:
    """푸아송 평균 전류 I = I_max (1 − e^{−N/Ñ_sat}) [A]"""
    _check_nonnegative(mean_photons, '평균 광자수')
    result = det.i_max * one_minus_exp(np.asarray(mean_photons, dtype=float) / det.n_sat_eff)
    return _as_output(result, mean_photons)


def linear_current(det: DetectorModel, mean_photons: ArrayLike) -> ArrayLike:
    """선형 응답 근사 전류 I = r N [A]"""
    _check_nonnegative(mean_photons, '평균 광자수')
    result = det.responsivity * np.asarray(mean_photons, dtype=float)
    return _as_output(result, mean_photons)


def oversaturation_limit(det: DetectorModel) -> float:
    """역변환이 허용되는 전류 상한 I_max (1 − ε_sat)"""
    return det.i_max * (1.0 - OVERSATURATION_GUARD)


def is_oversaturated(det: DetectorModel, current: float) -> bool:
    """역변환 불가 여부"""
    return current >= oversaturation_limit(det)


def invert_current(det: DetectorModel, current: float) -> float:
    """
    평균 전류 → 평균 광자수 역함수 F(I) = −Ñ_sat ln(1 − I/I_max)

    Raises:
        DomainError: 음수 전류
        OversaturatedError: I ≥ I_max (1 − ε_sat)
    """
    current = float(current)
    if current < 0 or math.isnan(current):
        raise DomainError(f"전류는 0 이상이어야 합니다: {current}")
    if is_oversaturated(det, current):
        raise OversaturatedError(current, det.i_max)
    return -det.n_sat_eff * math.log1p(-current / det.i_max)


def inverse_slope(det: DetectorModel, current: float) -> float:
    """dF/dI = Ñ_sat / (I_max − I) [photon/A]"""
    if is_oversaturated(det, current):
        raise OversaturatedError(current, det.i_max)
    return det.n_sat_eff / (det.i_max - current)


def exact_electron_moments(det: DetectorModel, mean_photons: float) -> Tuple[float, float]:
    """
    복합 분포 P̃(k) = Σ_n P(k|n) P(n) 의 정확한 평균과 분산

    분산 = E[σ(n)²] + Var[μ(n)], 광자 잡음 항은
    k_max² [e^{−N(1−e^{−2/N_sat})} − e^{−2N(1−e^{−1/N_sat})}] = k_max² e^{−2Nu} (e^{Nu²} − 1),
    u = 1 − e^{−1/N_sat}.
    """
    _check_nonnegative(mean_photons, '평균 광자수')
    mean_photons = float(mean_photons)

    mean = det.k_max * -math.expm1(-mean_photons / det.n_sat_eff)

    u = det.inverse_n_sat_eff
    photon_term = det.k_max ** 2 * math.exp(-2.0 * mean_photons * u) * math.expm1(mean_photons * u * u)

    if det.sigma_model.mode is SigmaMode.CONSTANT:
        electronic_term = det.sigma_model.value ** 2
    else:
        # σ(n)² = c² μ(n) 이므로 E[σ²] = c² E[μ]
        electronic_term = det.sigma_model.value ** 2 * mean

    return mean, electronic_term + photon_term


def current_variance(det: DetectorModel, mean_photons: float) -> float:
    """단일 샷 전류 분산 δ²I = (e/τ_w)² δ²k [A²]"""
    _, variance = exact_electron_moments(det, mean_photons)
    return det.charge_per_electron ** 2 * variance


def classify_regime(det: DetectorModel, mean_photons: float) -> Regime:
    """N/N_sat 로 선형/비선형/과포화 영역 구분"""
    ratio = mean_photons / det.n_sat
    if ratio < det.linear_threshold:
        return Regime.LINEAR
    if ratio < det.oversaturation_threshold:
        return Regime.NONLINEAR
    return Regime.OVERSATURATED
