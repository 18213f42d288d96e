#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
공용 pytest 픽스처
- 표 재현용 검출기 (k_max = 1e16, N_sat = 1e17, τ_w = 1e-4 s)
- 그림 파라미터 setup 생성기 (χ = 0.01, |β|² = 1e15)
- 데스크 스케일 검출기 (N_sat = 1e4, k_max = 1e3, σ = 30)
"""

import os
import sys

import pytest

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import DEFAULT_RUN_CONFIG  # noqa: E402
from modules.optics_core import CoherentField  # noqa: E402
from modules.detector import DetectorModel, NoiseWidthSpec, SigmaMode  # noqa: E402
from modules.estimation import HomodyneSetup  # noqa: E402


@pytest.fixture
def table_detector():
    return DetectorModel(k_max=1e16, n_sat=1e17, tau_w=1e-4)


@pytest.fixture
def desk_detector():
    return DetectorModel(k_max=1e3, n_sat=1e4, tau_w=1e-4,
                         sigma_model=NoiseWidthSpec(SigmaMode.CONSTANT, 30.0))


@pytest.fixture
def make_setup(table_detector):
    """setup 생성기: make_setup(alpha_sq, chi=0.01, phi=0.0, beta_sq=1e15, det=None, det2=None)"""
    def _make(alpha_sq, chi=0.01, phi=0.0, beta_sq=1e15, det=None, det2=None):
        det = det or table_detector
        return HomodyneSetup(
            signal=CoherentField.from_photons(alpha_sq, chi),
            lo=CoherentField.from_photons(beta_sq, phi),
            det1=det,
            det2=det2 or det,
        )
    return _make


@pytest.fixture
def default_values():
    """기본 실행 설정 사본"""
    return dict(DEFAULT_RUN_CONFIG)


@pytest.fixture
def desk_values(default_values):
    """몬테카를로 가능한 데스크 스케일 설정"""
    default_values.update({
        'detector.k_max': 1e3,
        'detector.n_sat': 1e4,
        'detector.sigma': 30.0,
        'optics.alpha_sq': 1e3,
        'optics.beta_sq': 1e2,
        'mc.shots': 1000,
        'mc.ensembles': 20,
        'mc.seed': 11,
        'output.format': 'json',
    })
    return default_values
