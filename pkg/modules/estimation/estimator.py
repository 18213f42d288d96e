#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
위상 추정기
- 전방 모델: 빔스플리터 혼합 → 포화 검출기 평균 전류
- 선형 프로토콜: (I₂ − I₁)/(2|β| r) = |α| sin(χ − φ)
- 비선형 프로토콜: F(I₂) − F(I₁) = 2|αβ| sin(χ − φ)
- 오차비 η_e = |χ̃ − χ|/χ
"""

import logging
import math
from typing import Tuple

from common.errors import DegenerateSignalError, DivergentPrecisionError, NonIdenticalDetectorsError, UndefinedRatioError
from modules.optics_core import detector_photons, normalize_phase
from modules.detector import (
    Regime,
    SigmaMode,
    classify_regime,
    invert_current,
    is_oversaturated,
    mean_current,
)
from .models import EstimateReport, HomodyneSetup, MeasurementRecord, Protocol

logger = logging.getLogger(__name__)


def forward_currents(setup: HomodyneSetup) -> MeasurementRecord:
    """전방 모델 평균 전류 (I₁, I₂), shots = 1"""
    photons1, photons2 = detector_photons(setup.signal, setup.lo)
    return MeasurementRecord(
        current1=mean_current(setup.det1, photons1),
        current2=mean_current(setup.det2, photons2),
        shots=1,
    )


def _clamped_arcsin(argument: float) -> Tuple[float, bool]:
    """arcsin 주가지, |인자| > 1 이면 ±1 로 자르고 플래그"""
    if argument > 1.0:
        return math.pi / 2, True
    if argument < -1.0:
        return -math.pi / 2, True
    return math.asin(argument), False


def _record_regimes(record: MeasurementRecord, setup: HomodyneSetup) -> Tuple[Regime, Regime]:
    """측정 전류로부터 검출기별 응답 영역 판정"""
    regimes = []
    for det, current in ((setup.det1, record.current1), (setup.det2, record.current2)):
        if is_oversaturated(det, current):
            regimes.append(Regime.OVERSATURATED)
        else:
            regimes.append(classify_regime(det, invert_current(det, current)))
    return regimes[0], regimes[1]


def _require_signal(setup: HomodyneSetup):
    if setup.signal.magnitude == 0:
        raise DegenerateSignalError("신호광 진폭이 0 이라 위상을 추정할 수 없습니다 (|α| = 0)")


def estimate_phase_linear(record: MeasurementRecord, setup: HomodyneSetup) -> EstimateReport:
    """
    선형 응답 프로토콜 위상 추정

    r 은 det1 의 값을 쓴다 (r₁ = r₂ = r 가정).
    """
    _require_signal(setup)
    responsivity = setup.det1.responsivity
    difference_current = (record.current2 - record.current1) / (2.0 * setup.lo.magnitude * responsivity)
    offset, clamped = _clamped_arcsin(difference_current / setup.signal.magnitude)

    regime1, regime2 = _record_regimes(record, setup)
    return EstimateReport(
        phase_estimate=setup.lo.phase + offset,
        precision=None,
        regime1=regime1,
        regime2=regime2,
        protocol=Protocol.LINEAR,
        clamped=clamped,
    )


def estimate_phase_nonlinear(record: MeasurementRecord, setup: HomodyneSetup) -> EstimateReport:
    """
    비선형 응답 프로토콜 위상 추정

    Raises:
        OversaturatedError: 어느 한 전류라도 역변환 불가
        DegenerateSignalError: |α| = 0
    """
    _require_signal(setup)
    photons1 = invert_current(setup.det1, record.current1)
    photons2 = invert_current(setup.det2, record.current2)

    argument = (photons2 - photons1) / (2.0 * setup.signal.magnitude * setup.lo.magnitude)
    offset, clamped = _clamped_arcsin(argument)

    return EstimateReport(
        phase_estimate=setup.lo.phase + offset,
        precision=_record_precision(record, setup),
        regime1=classify_regime(setup.det1, photons1),
        regime2=classify_regime(setup.det2, photons2),
        protocol=Protocol.NONLINEAR,
        clamped=clamped,
    )


def _record_precision(record: MeasurementRecord, setup: HomodyneSetup):
    """측정 전류 기준 δχ (계산 불가하면 None)"""
    from .precision import precision_from_currents

    if setup.det1.sigma_model.mode is not SigmaMode.CONSTANT:
        return None
    try:
        return precision_from_currents(setup, record.current1, record.current2,
                                       setup.det1.sigma, record.shots)
    except (DivergentPrecisionError, NonIdenticalDetectorsError):
        return None


def estimate_phase(record: MeasurementRecord, setup: HomodyneSetup, protocol: Protocol) -> EstimateReport:
    """프로토콜 선택 래퍼"""
    if Protocol(protocol) is Protocol.LINEAR:
        return estimate_phase_linear(record, setup)
    return estimate_phase_nonlinear(record, setup)


def error_ratio(setup: HomodyneSetup, protocol: Protocol) -> float:
    """오차비 η_e = |χ̃ − χ| / χ (전방 모델 전류 사용)"""
    chi = setup.signal.phase
    if chi == 0:
        raise UndefinedRatioError("χ = 0 에서는 오차비가 정의되지 않습니다")

    report = estimate_phase(forward_currents(setup), setup, protocol)
    # 추정값은 φ 기준으로 펼쳐져 있으므로 차이를 (−π, π] 로 접는다
    return abs(normalize_phase(report.phase_estimate - chi)) / abs(chi)
