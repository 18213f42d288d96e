#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
포화 광검출기 모델
- 평균 광전자수 μ(n) = k_max (1 − e^{−n/N_sat})
- I_max = e k_max / τ_w, Ñ_sat = 1/(1 − e^{−1/N_sat})
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from common.errors import DomainError
from .utils import saturation_excess

# 기본 전하량 [C] (SI 정의값)
ELEMENTARY_CHARGE = 1.602176634e-19

# 역변환에 필요한 I_max 아래 상대 여유
OVERSATURATION_GUARD = 1e-12

# 영역 구분 임계값 (N/N_sat)
DEFAULT_LINEAR_THRESHOLD = 0.05
DEFAULT_OVERSATURATION_THRESHOLD = 10.0

# σ 기본값: σ² = k_max × 0.01
DEFAULT_SIGMA_FRACTION = 0.01


class SigmaMode(str, Enum):
    """전자수 가우시안 폭 모델"""
    CONSTANT = 'constant'
    SHOT_SCALED = 'shot_scaled'


class Regime(str, Enum):
    """검출기 응답 영역"""
    LINEAR = 'linear'
    NONLINEAR = 'nonlinear'
    OVERSATURATED = 'oversaturated'


@dataclass(frozen=True)
class NoiseWidthSpec:
    """
    조건부 전자수 분포의 폭 σ

    CONSTANT: σ = value, SHOT_SCALED: σ(n) = value·√μ(n).
    CONSTANT 이고 value = 0 이면 잡음 없는 전자수.
    """
    mode: SigmaMode = SigmaMode.CONSTANT
    value: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'mode', SigmaMode(self.mode))
        value = float(self.value)
        if not math.isfinite(value) or value < 0:
            raise DomainError(f"σ 값은 0 이상이어야 합니다: {self.value}")
        object.__setattr__(self, 'value', value)

    def sigma_at(self, mean_electrons):
        """평균 전자수 μ 에서의 σ"""
        if self.mode is SigmaMode.CONSTANT:
            return self.value
        return self.value * np.sqrt(np.maximum(mean_electrons, 0.0))

    def to_dict(self):
        return {'mode': self.mode.value, 'value': self.value}


@dataclass(frozen=True)
class DetectorModel:
    """포화 광검출기 파라미터 (불변)"""
    k_max: float
    n_sat: float
    tau_w: float
    sigma_model: Optional[NoiseWidthSpec] = None
    linear_threshold: float = DEFAULT_LINEAR_THRESHOLD
    oversaturation_threshold: float = DEFAULT_OVERSATURATION_THRESHOLD
    n_sat_eff_excess: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ('k_max', 'n_sat', 'tau_w'):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{name} 는 양수여야 합니다: {value}")
            object.__setattr__(self, name, value)

        if not 0 < self.linear_threshold < self.oversaturation_threshold:
            raise DomainError(
                f"영역 임계값 오류: 0 < {self.linear_threshold} < {self.oversaturation_threshold} 이어야 합니다")

        if self.sigma_model is None:
            default_sigma = math.sqrt(self.k_max * DEFAULT_SIGMA_FRACTION)
            object.__setattr__(self, 'sigma_model', NoiseWidthSpec(SigmaMode.CONSTANT, default_sigma))

        object.__setattr__(self, 'n_sat_eff_excess', saturation_excess(self.n_sat))

    @property
    def i_max(self) -> float:
        """포화 전류 I_max = e k_max / τ_w [A]"""
        return ELEMENTARY_CHARGE * self.k_max / self.tau_w

    @property
    def n_sat_eff(self) -> float:
        """유효 포화 광자수 Ñ_sat = 1/(1 − e^{−1/N_sat})"""
        return self.n_sat + self.n_sat_eff_excess

    @property
    def inverse_n_sat_eff(self) -> float:
        """1/Ñ_sat = 1 − e^{−1/N_sat}"""
        return -math.expm1(-1.0 / self.n_sat)

    @property
    def responsivity(self) -> float:
        """선형 응답 계수 r = e (k_max/N_sat) / τ_w [A/photon]"""
        return ELEMENTARY_CHARGE * (self.k_max / self.n_sat) / self.tau_w

    @property
    def charge_per_electron(self) -> float:
        """전자 1개당 전류 e/τ_w [A]"""
        return ELEMENTARY_CHARGE / self.tau_w

    @property
    def sigma(self) -> float:
        """CONSTANT 모드의 σ (SHOT_SCALED 면 배율 c)"""
        return self.sigma_model.value

    def to_dict(self):
        return {
            'k_max': self.k_max,
            'n_sat': self.n_sat,
            'tau_w': self.tau_w,
            'sigma_model': self.sigma_model.to_dict(),
            'linear_threshold': self.linear_threshold,
            'oversaturation_threshold': self.oversaturation_threshold,
            'i_max': self.i_max,
            'n_sat_eff': self.n_sat_eff,
        }
