#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
몬테카를로 앙상블
- M 샷 평균 전류와 분산
- 블록(B 샷) 평균 전류마다 위상 추정 → 추정기 분포
- R 개 독립 앙상블을 스레드 풀에서 계산하고 번호 순서대로 병합
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional

import numpy as np

from common.errors import DomainError, OversaturatedError
from modules.estimation import HomodyneSetup, MeasurementRecord, Protocol, estimate_phase
from .sampler import ensemble_generator, sample_shots

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, str], None]


@dataclass(frozen=True)
class EnsembleStats:
    """앙상블 통계 (전류는 샷 단위, 추정기는 블록 단위)"""
    shots: int
    mean_current1: float
    mean_current2: float
    var_current1: float
    var_current2: float
    estimator_mean: float
    estimator_std: float
    clamp_fraction: float
    ensembles: int = 1
    block_size: int = 0
    blocks: int = 0
    protocol: str = Protocol.NONLINEAR.value
    seed: int = 0
    mean_electrons1: float = 0.0
    mean_electrons2: float = 0.0
    var_electrons1: float = 0.0
    var_electrons2: float = 0.0
    oversaturated_blocks: int = 0
    estimated: bool = True

    def to_dict(self):
        return asdict(self)


@dataclass
class _Moments:
    """개수/평균/편차제곱합 (병합 가능)"""
    count: int = 0
    mean: float = 0.0
    m2: float = 0.0

    @classmethod
    def from_values(cls, values: np.ndarray) -> '_Moments':
        mean = float(np.mean(values))
        return cls(count=len(values), mean=mean, m2=float(np.sum((values - mean) ** 2)))

    def merge(self, other: '_Moments') -> '_Moments':
        if self.count == 0:
            return other
        if other.count == 0:
            return self
        count = self.count + other.count
        delta = other.mean - self.mean
        return _Moments(
            count=count,
            mean=self.mean + delta * other.count / count,
            m2=self.m2 + other.m2 + delta * delta * self.count * other.count / count,
        )

    @property
    def variance(self) -> float:
        return self.m2 / (self.count - 1) if self.count >= 2 else 0.0


@dataclass
class _EnsemblePartial:
    """앙상블 1개 결과"""
    current1: _Moments
    current2: _Moments
    electrons1: _Moments
    electrons2: _Moments
    estimates: List[float] = field(default_factory=list)
    blocks: int = 0
    clamped_blocks: int = 0
    oversaturated_blocks: int = 0


def _validate(shots: int, block_size: Optional[int], ensembles: int = 1) -> int:
    if shots < 2:
        raise DomainError(f"샷 수는 2 이상이어야 합니다 (M = {shots} 이면 분산이 정의되지 않음)")
    if ensembles < 1:
        raise DomainError(f"앙상블 수는 1 이상이어야 합니다: {ensembles}")
    block_size = shots if block_size is None else int(block_size)
    if not 1 <= block_size <= shots:
        raise DomainError(f"블록 크기는 1 이상 {shots} 이하여야 합니다: {block_size}")
    return block_size


def _block_estimates(partial: _EnsemblePartial, setup: HomodyneSetup, protocol: Protocol,
                     current1: np.ndarray, current2: np.ndarray, block_size: int):
    """블록 평균 전류마다 위상 추정 (남는 샷은 추정에서 제외)"""
    n_blocks = len(current1) // block_size
    usable = n_blocks * block_size
    block_means1 = current1[:usable].reshape(n_blocks, block_size).mean(axis=1)
    block_means2 = current2[:usable].reshape(n_blocks, block_size).mean(axis=1)
    partial.blocks = n_blocks

    for mean1, mean2 in zip(block_means1, block_means2):
        # 가우시안 꼬리로 음수가 된 평균 전류는 0 으로 자르고 clamp 로 센다
        clipped = mean1 < 0 or mean2 < 0
        record = MeasurementRecord(max(float(mean1), 0.0), max(float(mean2), 0.0), shots=block_size)
        try:
            report = estimate_phase(record, setup, protocol)
        except OversaturatedError:
            partial.oversaturated_blocks += 1
            continue
        partial.estimates.append(report.phase_estimate)
        if report.clamped or clipped:
            partial.clamped_blocks += 1


def _simulate_partial(setup: HomodyneSetup, shots: int, protocol: Protocol, seed: int,
                      index: int, block_size: int) -> _EnsemblePartial:
    """(seed, index) 앙상블 하나 계산"""
    batch = sample_shots(setup, shots, ensemble_generator(seed, index))
    partial = _EnsemblePartial(
        current1=_Moments.from_values(batch.current1),
        current2=_Moments.from_values(batch.current2),
        electrons1=_Moments.from_values(batch.electrons1),
        electrons2=_Moments.from_values(batch.electrons2),
    )
    if setup.signal.magnitude > 0:
        _block_estimates(partial, setup, protocol, batch.current1, batch.current2, block_size)
    return partial


def _reduce(partials: List[_EnsemblePartial], setup: HomodyneSetup, shots: int, protocol: Protocol,
            seed: int, block_size: int) -> EnsembleStats:
    """앙상블 결과를 번호 순서대로 병합"""
    current1, current2, electrons1, electrons2 = _Moments(), _Moments(), _Moments(), _Moments()
    estimates = []
    blocks = clamped = oversaturated = 0
    for partial in partials:
        current1 = current1.merge(partial.current1)
        current2 = current2.merge(partial.current2)
        electrons1 = electrons1.merge(partial.electrons1)
        electrons2 = electrons2.merge(partial.electrons2)
        estimates.extend(partial.estimates)
        blocks += partial.blocks
        clamped += partial.clamped_blocks
        oversaturated += partial.oversaturated_blocks

    estimated = setup.signal.magnitude > 0
    if not estimated:
        # 진공 신호: 위상 정의 불가, 차 전류 0 에 해당하는 φ 를 기록
        estimator_mean, estimator_std = setup.lo.phase, 0.0
    elif estimates:
        values = np.asarray(estimates)
        estimator_mean = float(np.mean(values))
        estimator_std = float(np.std(values, ddof=1)) if len(values) >= 2 else 0.0
    else:
        estimator_mean, estimator_std = math.nan, math.nan

    return EnsembleStats(
        shots=shots,
        mean_current1=current1.mean,
        mean_current2=current2.mean,
        var_current1=current1.variance,
        var_current2=current2.variance,
        estimator_mean=estimator_mean,
        estimator_std=estimator_std,
        clamp_fraction=(clamped + oversaturated) / blocks if blocks else 0.0,
        ensembles=len(partials),
        block_size=block_size,
        blocks=blocks,
        protocol=Protocol(protocol).value,
        seed=int(seed),
        mean_electrons1=electrons1.mean,
        mean_electrons2=electrons2.mean,
        var_electrons1=electrons1.variance,
        var_electrons2=electrons2.variance,
        oversaturated_blocks=oversaturated,
        estimated=estimated,
    )


def run_ensemble(setup: HomodyneSetup, shots: int, protocol: Protocol = Protocol.NONLINEAR,
                 seed: int = 0, block_size: Optional[int] = None) -> EnsembleStats:
    """
    M 샷 앙상블 1개

    Args:
        setup: 전방 모델
        shots: 샷 수 M (≥ 2)
        protocol: 블록 위상 추정 방식
        seed: 난수 시드
        block_size: 블록 크기 B (기본 M → 추정값 1개)
    """
    block_size = _validate(shots, block_size)
    partial = _simulate_partial(setup, shots, Protocol(protocol), seed, 0, block_size)
    return _reduce([partial], setup, shots, protocol, seed, block_size)


def run_ensembles(setup: HomodyneSetup, shots: int, ensembles: int,
                  protocol: Protocol = Protocol.NONLINEAR, seed: int = 0,
                  block_size: Optional[int] = None, workers: int = 1,
                  progress_callback: Optional[ProgressCallback] = None) -> EnsembleStats:
    """
    R 개 독립 앙상블 (추정기 분포용)

    각 앙상블은 (seed, 번호) 로만 결정되므로 workers 수와 무관하게 같은 결과가 나온다.
    """
    block_size = _validate(shots, block_size, ensembles)
    protocol = Protocol(protocol)
    logger.info(f"🚀 몬테카를로 시작: R={ensembles}, M={shots}, B={block_size}, seed={seed}")

    partials = []
    with ThreadPoolExecutor(max_workers=max(1, int(workers))) as pool:
        futures = [
            pool.submit(_simulate_partial, setup, shots, protocol, seed, index, block_size)
            for index in range(ensembles)
        ]
        for done, future in enumerate(futures, start=1):
            partials.append(future.result())
            if progress_callback:
                progress_callback(int(100 * done / ensembles), f"앙상블 {done}/{ensembles} 완료")

    stats = _reduce(partials, setup, shots, protocol, seed, block_size)
    logger.info(f"✅ 몬테카를로 완료: 추정 표준편차 {stats.estimator_std:.4g} rad, "
                f"clamp 비율 {stats.clamp_fraction:.3f}")
    return stats
