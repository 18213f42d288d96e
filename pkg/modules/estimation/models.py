#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
호모다인 측정 데이터 구조
- HomodyneSetup: 신호광 + LO + 검출기 2개 (전방 모델 전체)
- MeasurementRecord: 측정 전류 (I₁, I₂) 와 반복 횟수 M
- EstimateReport: 위상 추정 결과
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from common.errors import DomainError
from modules.optics_core import CoherentField
from modules.detector import DetectorModel, Regime


class Protocol(str, Enum):
    """위상 추출 방식"""
    LINEAR = 'linear'
    NONLINEAR = 'nonlinear'


@dataclass(frozen=True)
class HomodyneSetup:
    """호모다인 측정 전방 모델"""
    signal: CoherentField
    lo: CoherentField
    det1: DetectorModel
    det2: DetectorModel

    def __post_init__(self):
        if self.lo.magnitude <= 0:
            raise DomainError("호모다인 측정에는 진공이 아닌 LO 가 필요합니다 (|β| > 0)")

    @property
    def identical_detectors(self) -> bool:
        return self.det1 == self.det2

    def with_signal(self, mean_photons: Optional[float] = None, phase: Optional[float] = None) -> 'HomodyneSetup':
        """신호광만 바꾼 새 setup"""
        signal = CoherentField.from_photons(
            self.signal.mean_photons if mean_photons is None else mean_photons,
            self.signal.phase if phase is None else phase,
        )
        return replace(self, signal=signal)

    def to_dict(self):
        return {
            'signal': self.signal.to_dict(),
            'lo': self.lo.to_dict(),
            'det1': self.det1.to_dict(),
            'det2': self.det2.to_dict(),
        }


@dataclass(frozen=True)
class MeasurementRecord:
    """측정 전류 기록 (앙상블 평균)"""
    current1: float
    current2: float
    shots: int = 1

    def __post_init__(self):
        for name in ('current1', 'current2'):
            value = float(getattr(self, name))
            if math.isnan(value) or value < 0:
                raise DomainError(f"{name} 는 0 이상이어야 합니다: {value}")
            object.__setattr__(self, name, value)
        if int(self.shots) < 1:
            raise DomainError(f"측정 횟수 M 은 1 이상이어야 합니다: {self.shots}")
        object.__setattr__(self, 'shots', int(self.shots))


@dataclass(frozen=True)
class EstimateReport:
    """위상 추정 결과"""
    phase_estimate: float
    precision: Optional[float]
    regime1: Regime
    regime2: Regime
    protocol: Protocol
    clamped: bool = False

    def to_dict(self):
        return {
            'phase_estimate': self.phase_estimate,
            'precision': self.precision,
            'regime1': self.regime1.value,
            'regime2': self.regime2.value,
            'protocol': self.protocol.value,
            'clamped': self.clamped,
        }
