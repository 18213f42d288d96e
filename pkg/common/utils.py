#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
공통 유틸리티
- 숫자 포맷팅 (CSV 출력 규칙)
- 안전한 형 변환, --set 값 파싱
- 스윕 격자 생성
"""

import json
import math
from typing import Any, Dict

import numpy as np

# CSV 에서 고정소수점으로 쓰는 절댓값 구간
FIXED_NOTATION_MIN = 1e-3
FIXED_NOTATION_MAX = 1e6


def format_number(value: Any, digits: int = 6) -> str:
    """
    CSV 용 숫자 포맷팅

    |value| 가 [1e-3, 1e6] 밖이면 지수 표기, 안이면 고정소수점.
    0 은 '0', NaN 은 'nan'.
    """
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if not isinstance(value, (float, np.floating)):
        return str(value)

    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    if value == 0.0:
        return '0'
    if FIXED_NOTATION_MIN <= abs(value) <= FIXED_NOTATION_MAX:
        return f"{value:.{digits}f}".rstrip('0').rstrip('.')
    return f"{value:.{digits}e}"


def format_fixed(value: Any, digits: int = 2) -> str:
    """고정 소수점 포맷팅 (표 재현용)"""
    try:
        return f"{float(value):.{digits}f}"
    except (ValueError, TypeError):
        return str(value)


def safe_int(value, default=0):
    """안전한 정수 변환"""
    try:
        return int(value) if value is not None else default
    except (ValueError, TypeError):
        return default


def safe_float(value, default=None):
    """안전한 실수 변환"""
    try:
        return float(value) if value is not None else default
    except (ValueError, TypeError):
        return default


def parse_override_value(text: str) -> Any:
    """--set 값 파싱 (JSON 우선, 실패하면 문자열 그대로)"""
    try:
        return json.loads(text)
    except (ValueError, TypeError):
        return text


def flatten_dict(data: Dict[str, Any], prefix: str = '') -> Dict[str, Any]:
    """중첩 dict 를 점 표기 키의 평탄한 dict 로 변환"""
    flat = {}
    for key, value in data.items():
        full_key = f"{prefix}.{key}" if prefix else str(key)
        if isinstance(value, dict):
            flat.update(flatten_dict(value, full_key))
        else:
            flat[full_key] = value
    return flat


def sweep_grid(start: float, stop: float, points: int, scale: str = 'log') -> np.ndarray:
    """스윕 격자 (log 또는 linear)"""
    if scale == 'log':
        return np.logspace(math.log10(start), math.log10(stop), points)
    return np.linspace(start, stop, points)


def to_json_safe(value: Any) -> Any:
    """JSON 직렬화용 변환 (NaN/inf → None, numpy 스칼라 → 파이썬 스칼라)"""
    if isinstance(value, dict):
        return {k: to_json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_safe(v) for v in value]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value
