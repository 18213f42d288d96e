#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
샷 단위 확률 표본 추출
- 광자수 n ~ Poisson(N_j)  (평균 1e6 이상은 가우시안 근사)
- 전자수 k ~ Gaussian(μ(n), σ(n))  (음수 꼬리 유지)
- 전류 i = e k / τ_w
"""

import math
from dataclasses import dataclass

import numpy as np

from modules.optics_core import detector_photons
from modules.detector import DetectorModel, ELEMENTARY_CHARGE, mean_electrons
from modules.estimation import HomodyneSetup

# 이 평균 미만에서는 정확한 푸아송 표본
EXACT_POISSON_LIMIT = 1e6


@dataclass(frozen=True)
class ShotSample:
    """단일 샷 표본"""
    photons1: int
    photons2: int
    electrons1: float
    electrons2: float
    current1: float
    current2: float


@dataclass(frozen=True)
class ShotBatch:
    """여러 샷 표본 (배열). 광자수는 정수값을 담은 float64"""
    photons1: np.ndarray
    photons2: np.ndarray
    electrons1: np.ndarray
    electrons2: np.ndarray
    current1: np.ndarray
    current2: np.ndarray

    def __len__(self):
        return len(self.current1)

    def shot(self, index: int) -> ShotSample:
        return ShotSample(
            photons1=int(self.photons1[index]),
            photons2=int(self.photons2[index]),
            electrons1=float(self.electrons1[index]),
            electrons2=float(self.electrons2[index]),
            current1=float(self.current1[index]),
            current2=float(self.current2[index]),
        )


def ensemble_generator(seed: int, index: int = 0) -> np.random.Generator:
    """(seed, 앙상블 번호) 로 결정되는 카운터 기반 난수 생성기"""
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(sequence))


def sample_photons(mean: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """푸아송 광자수 표본 (큰 평균은 반올림한 가우시안, 0 에서 자름)"""
    if mean < EXACT_POISSON_LIMIT:
        return rng.poisson(mean, size).astype(float)
    draws = mean + math.sqrt(mean) * rng.standard_normal(size)
    return np.maximum(np.rint(draws), 0.0)


def sample_electrons(det: DetectorModel, photons: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """조건부 가우시안 전자수 표본"""
    mu = mean_electrons(det, photons)
    sigma = det.sigma_model.sigma_at(mu)
    return mu + sigma * rng.standard_normal(np.shape(photons))


def electrons_to_current(det: DetectorModel, electrons):
    """i = e k / τ_w"""
    return ELEMENTARY_CHARGE * electrons / det.tau_w


def sample_shots(setup: HomodyneSetup, shots: int, rng: np.random.Generator) -> ShotBatch:
    """
    M 샷 일괄 추출

    추출 순서는 n₁, n₂, k₁, k₂ 로 고정된다 (같은 생성기 상태면 같은 결과).
    """
    photon_mean1, photon_mean2 = detector_photons(setup.signal, setup.lo)
    photons1 = sample_photons(photon_mean1, shots, rng)
    photons2 = sample_photons(photon_mean2, shots, rng)
    electrons1 = sample_electrons(setup.det1, photons1, rng)
    electrons2 = sample_electrons(setup.det2, photons2, rng)
    return ShotBatch(
        photons1=photons1,
        photons2=photons2,
        electrons1=electrons1,
        electrons2=electrons2,
        current1=electrons_to_current(setup.det1, electrons1),
        current2=electrons_to_current(setup.det2, electrons2),
    )


def sample_shot(setup: HomodyneSetup, rng: np.random.Generator) -> ShotSample:
    """단일 샷 추출"""
    return sample_shots(setup, 1, rng).shot(0)
