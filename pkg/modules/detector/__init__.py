#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
포화 광검출기 모듈
- 조건부 가우시안 전자수, 푸아송 광자수
- 닫힌 형태 평균 전류와 수치 안정 역함수
- 복합 분포의 정확한 모멘트, 응답 영역 분류
"""

__version__ = '1.0.0'

from .models import (
    DetectorModel,
    NoiseWidthSpec,
    SigmaMode,
    Regime,
    ELEMENTARY_CHARGE,
    OVERSATURATION_GUARD,
)
from .response import (
    mean_electrons,
    mean_current,
    linear_current,
    invert_current,
    inverse_slope,
    exact_electron_moments,
    current_variance,
    classify_regime,
    is_oversaturated,
    oversaturation_limit,
)
from .utils import expm1x, saturation_excess

__all__ = [
    'DetectorModel',
    'NoiseWidthSpec',
    'SigmaMode',
    'Regime',
    'ELEMENTARY_CHARGE',
    'OVERSATURATION_GUARD',
    'mean_electrons',
    'mean_current',
    'linear_current',
    'invert_current',
    'inverse_slope',
    'exact_electron_moments',
    'current_variance',
    'classify_regime',
    'is_oversaturated',
    'oversaturation_limit',
    'expm1x',
    'saturation_excess',
]
