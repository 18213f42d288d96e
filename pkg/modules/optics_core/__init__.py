#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
광학 코어 모듈
- 결맞음 상태 진폭과 50/50 빔스플리터 혼합
- 호모다인 측정의 이상적 직교 성분 신호
"""

__version__ = '1.0.0'

from .fields import (
    CoherentField,
    MixedPair,
    HBAR,
    mix_on_beam_splitter,
    photon_number_difference,
    detector_photons,
    quadrature_expectation,
    photons_from_power,
    normalize_phase,
)

__all__ = [
    'CoherentField',
    'MixedPair',
    'HBAR',
    'mix_on_beam_splitter',
    'photon_number_difference',
    'detector_photons',
    'quadrature_expectation',
    'photons_from_power',
    'normalize_phase',
]
