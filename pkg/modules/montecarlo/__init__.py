#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
몬테카를로 모듈
- 푸아송–가우시안 복합 측정의 샷 단위 시뮬레이션
- 경험적 전류 분포와 추정기 분산으로 닫힌 형태 검증
"""

__version__ = '1.0.0'

from .sampler import (
    ShotSample,
    ShotBatch,
    EXACT_POISSON_LIMIT,
    ensemble_generator,
    sample_photons,
    sample_electrons,
    sample_shot,
    sample_shots,
)
from .ensemble import EnsembleStats, run_ensemble, run_ensembles

__all__ = [
    'ShotSample',
    'ShotBatch',
    'EXACT_POISSON_LIMIT',
    'ensemble_generator',
    'sample_photons',
    'sample_electrons',
    'sample_shot',
    'sample_shots',
    'EnsembleStats',
    'run_ensemble',
    'run_ensembles',
]
