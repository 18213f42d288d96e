#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
수치 안정 헬퍼
- 1 − e^{−x}, ln(1 − y) 는 반드시 expm1/log1p 계열로 계산
- N_sat = 1e17 에서 1/N_sat 는 배정밀도 ε 보다 작으므로 순진한 계산은 0 이 된다
"""

import math

import numpy as np

# e^x − 1 − x 급수 계수 (1/n!, ..., 1/2!) (최고차항부터)
_SERIES_ORDER = 17
_EXPM1X_COEFFS = 1.0 / np.cumprod(np.arange(2, _SERIES_ORDER + 1, dtype=float))[::-1]


def expm1x(x: float) -> float:
    """e^x − 1 − x 를 상쇄 없이 계산 (|x| < 1 에서는 급수)"""
    if abs(x) < 1.0:
        return float(x * x * np.polyval(_EXPM1X_COEFFS, x))
    return math.expm1(x) - x


def one_minus_exp(x):
    """1 − e^{−x} (스칼라/배열 공용)"""
    return -np.expm1(-x)


def saturation_excess(n_sat: float) -> float:
    """
    Ñ_sat − N_sat = 1/(1 − e^{−1/N_sat}) − N_sat

    N_sat ≫ 1 에서 1/2 + 1/(12 N_sat) 로 수렴한다.
    """
    x = 1.0 / n_sat
    return expm1x(-x) / (x * -math.expm1(-x))
