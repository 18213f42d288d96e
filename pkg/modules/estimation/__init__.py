#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
위상 추정 모듈
- 선형/비선형 프로토콜 위상 추출
- 오차비 η_e
- 오차 전파 정밀도 δχ
"""

__version__ = '1.0.0'

from .models import HomodyneSetup, MeasurementRecord, EstimateReport, Protocol
from .estimator import (
    forward_currents,
    estimate_phase,
    estimate_phase_linear,
    estimate_phase_nonlinear,
    error_ratio,
)
from .precision import (
    analytic_precision,
    general_precision,
    total_precision,
    precision_from_currents,
    precision_scaling_slope,
)

__all__ = [
    'HomodyneSetup',
    'MeasurementRecord',
    'EstimateReport',
    'Protocol',
    'forward_currents',
    'estimate_phase',
    'estimate_phase_linear',
    'estimate_phase_nonlinear',
    'error_ratio',
    'analytic_precision',
    'general_precision',
    'total_precision',
    'precision_from_currents',
    'precision_scaling_slope',
]
