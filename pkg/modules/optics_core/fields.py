#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
결맞음 상태 광장(field)과 50/50 빔스플리터
- 신호광 α = |α| e^{iχ}, 국부발진기(LO) β = |β| e^{iφ}
- 출력 진폭 α̃₁ = (β + iα)/√2, α̃₂ = (α + iβ)/√2
- N₂ − N₁ = 2|αβ| sin(χ − φ) 가 성립하도록 LO 위상 규약을 둔다
"""

import cmath
import math
from dataclasses import dataclass

from common.errors import DomainError

# 환산 플랑크 상수 [J·s]
HBAR = 1.054571817e-34

SQRT2 = math.sqrt(2.0)


def normalize_phase(phase: float) -> float:
    """위상을 (−π, π] 로 정규화"""
    wrapped = math.remainder(phase, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True)
class CoherentField:
    """단일 모드 결맞음 상태의 복소 진폭 (크기 + 위상)"""
    magnitude: float
    phase: float = 0.0

    def __post_init__(self):
        magnitude = float(self.magnitude)
        if not math.isfinite(magnitude) or magnitude < 0:
            raise DomainError(f"진폭 크기는 0 이상이어야 합니다: {self.magnitude}")
        object.__setattr__(self, 'magnitude', magnitude)
        object.__setattr__(self, 'phase', normalize_phase(float(self.phase)))

    @classmethod
    def from_photons(cls, mean_photons: float, phase: float = 0.0) -> 'CoherentField':
        """평균 광자수 |α|² 로부터 생성"""
        if mean_photons < 0:
            raise DomainError(f"평균 광자수는 0 이상이어야 합니다: {mean_photons}")
        return cls(math.sqrt(mean_photons), phase)

    @property
    def mean_photons(self) -> float:
        return self.magnitude * self.magnitude

    @property
    def amplitude(self) -> complex:
        return cmath.rect(self.magnitude, self.phase)

    def to_dict(self):
        return {
            'magnitude': self.magnitude,
            'phase': self.phase,
            'mean_photons': self.mean_photons,
        }


@dataclass(frozen=True)
class MixedPair:
    """빔스플리터 출력 진폭 쌍"""
    out1: complex
    out2: complex

    @property
    def photons1(self) -> float:
        return abs(self.out1) ** 2

    @property
    def photons2(self) -> float:
        return abs(self.out2) ** 2

    @property
    def photon_difference(self) -> float:
        return self.photons2 - self.photons1


def mix_on_beam_splitter(signal: CoherentField, lo: CoherentField) -> MixedPair:
    """50/50 빔스플리터 혼합: α̃₁ = (β + iα)/√2, α̃₂ = (α + iβ)/√2"""
    alpha = signal.amplitude
    beta = lo.amplitude
    return MixedPair(
        out1=(beta + 1j * alpha) / SQRT2,
        out2=(alpha + 1j * beta) / SQRT2,
    )


def photon_number_difference(signal: CoherentField, lo: CoherentField) -> float:
    """N₂ − N₁ = 2|α||β| sin(χ − φ)"""
    return 2.0 * signal.magnitude * lo.magnitude * math.sin(signal.phase - lo.phase)


def detector_photons(signal: CoherentField, lo: CoherentField) -> tuple:
    """
    검출기별 평균 광자수 (N₁, N₂)

    N₁ = ½[(|α| − |β|)² + 2|α||β|(1 − sin(χ − φ))], N₂ 는 sin 부호만 반대.
    두 항이 모두 0 이상이라 |α| ≈ |β| 에서도 음수로 반올림되지 않는다.
    """
    a, b = signal.magnitude, lo.magnitude
    gap = (a - b) ** 2
    cross = 2.0 * a * b
    s = math.sin(signal.phase - lo.phase)
    return 0.5 * (gap + cross * (1.0 - s)), 0.5 * (gap + cross * (1.0 + s))


def quadrature_expectation(signal: CoherentField, lo_phase: float) -> float:
    """직교 성분 기댓값 ⟨X⟩ = |α| sin(χ − φ)"""
    return signal.magnitude * math.sin(signal.phase - lo_phase)


def photons_from_power(power_w: float, angular_frequency: float, tau_w: float) -> float:
    """
    연속파 레이저 출력에서 응답 시간창당 광자수 N = P·τ_w/(ħω)

    Args:
        power_w: 레이저 출력 [W]
        angular_frequency: 각주파수 ω [rad/s]
        tau_w: 검출기 응답 시간창 [s]
    """
    if angular_frequency <= 0:
        raise DomainError(f"각주파수는 양수여야 합니다: {angular_frequency}")
    if power_w < 0 or tau_w < 0:
        raise DomainError(f"출력과 시간창은 0 이상이어야 합니다: P={power_w}, τ_w={tau_w}")
    return power_w * tau_w / (HBAR * angular_frequency)
