#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
실행 설정 (RunConfig)
- 기본값 < --config 파일 < --set key=value < 전용 플래그 순서로 병합
- 검증된 값으로 검출기 모델과 호모다인 setup 생성
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional

from config import DEFAULT_RUN_CONFIG
from common.errors import ConfigError, HomodyneError
from common.utils import flatten_dict, parse_override_value, safe_float, safe_int
from modules.optics_core import CoherentField, photons_from_power
from modules.detector import DetectorModel, NoiseWidthSpec, SigmaMode
from modules.estimation import HomodyneSetup, Protocol

logger = logging.getLogger(__name__)

SWEEP_VARIABLES = ('alpha_sq', 'shots')
SWEEP_SCALES = ('log', 'linear')
OUTPUT_FORMATS = ('csv', 'json')
DETECTOR_KEYS = ('k_max', 'n_sat', 'tau_w', 'sigma', 'sigma_mode')


@dataclass(frozen=True)
class SweepSpec:
    """스윕 설정"""
    variable: str
    start: float
    stop: float
    points: int
    scale: str


@dataclass(frozen=True)
class MonteCarloSpec:
    """몬테카를로 설정"""
    enabled: bool
    shots: int
    ensembles: int
    block_size: Optional[int]
    seed: int
    workers: int
    protocol: Protocol
    allow_gaussian: bool


@dataclass(frozen=True)
class OutputSpec:
    """출력 설정"""
    path: Optional[str]
    format: str


@dataclass(frozen=True)
class RunConfig:
    """검증된 실행 설정"""
    detector1: DetectorModel
    detector2: DetectorModel
    alpha_sq: float
    beta_sq: float
    chi: float
    phi: float
    sweep: SweepSpec
    mc: MonteCarloSpec
    output: OutputSpec
    values: Dict[str, Any] = field(default_factory=dict, compare=False)

    def setup(self, alpha_sq: Optional[float] = None) -> HomodyneSetup:
        """호모다인 setup 생성 (alpha_sq 만 바꿔 스윕에 사용)"""
        base = HomodyneSetup(
            signal=CoherentField.from_photons(self.alpha_sq, self.chi),
            lo=CoherentField.from_photons(self.beta_sq, self.phi),
            det1=self.detector1,
            det2=self.detector2,
        )
        return base if alpha_sq is None else base.with_signal(alpha_sq)

    def to_dict(self) -> Dict[str, Any]:
        """출력에 함께 기록할 확정 설정값 (기본 σ, 광자수 환산값 포함)"""
        resolved = dict(self.values)
        for prefix, det in (('detector', self.detector1), ('detector2', self.detector2)):
            resolved[f'{prefix}.k_max'] = det.k_max
            resolved[f'{prefix}.n_sat'] = det.n_sat
            resolved[f'{prefix}.tau_w'] = det.tau_w
            resolved[f'{prefix}.sigma'] = det.sigma
            resolved[f'{prefix}.sigma_mode'] = det.sigma_model.mode.value
        resolved['optics.alpha_sq'] = self.alpha_sq
        resolved['mc.block_size'] = self.mc.block_size
        return resolved


def _require(condition: bool, message: str):
    if not condition:
        raise ConfigError(message)


def _number(values: Dict[str, Any], key: str, positive: bool = False, allow_none: bool = False) -> Optional[float]:
    raw = values.get(key)
    if raw is None and allow_none:
        return None
    number = safe_float(raw)
    _require(number is not None and math.isfinite(number), f"{key} 는 유한한 숫자여야 합니다: {raw!r}")
    if positive:
        _require(number > 0, f"{key} 는 양수여야 합니다: {raw!r}")
    return number


def _integer(values: Dict[str, Any], key: str, minimum: int) -> int:
    raw = values.get(key)
    number = safe_int(raw, default=None)
    _require(number is not None and number == safe_float(raw), f"{key} 는 정수여야 합니다: {raw!r}")
    _require(number >= minimum, f"{key} 는 {minimum} 이상이어야 합니다: {raw!r}")
    return number


def _boolean(values: Dict[str, Any], key: str) -> bool:
    raw = values.get(key)
    _require(isinstance(raw, bool), f"{key} 는 true/false 여야 합니다: {raw!r}")
    return raw


def _build_detector(values: Dict[str, Any], prefix: str, fallback: Optional[Dict[str, Any]] = None) -> DetectorModel:
    """detector.* (또는 detector2.*) 키로 검출기 모델 생성"""
    merged = {}
    for key in DETECTOR_KEYS:
        value = values.get(f'{prefix}.{key}')
        if value is None and fallback is not None:
            value = fallback.get(f'detector.{key}')
        merged[f'{prefix}.{key}'] = value

    k_max = _number(merged, f'{prefix}.k_max', positive=True)
    n_sat = _number(merged, f'{prefix}.n_sat', positive=True)
    tau_w = _number(merged, f'{prefix}.tau_w', positive=True)
    sigma = _number(merged, f'{prefix}.sigma', allow_none=True)
    mode = merged[f'{prefix}.sigma_mode'] or SigmaMode.CONSTANT.value
    _require(mode in [m.value for m in SigmaMode], f"{prefix}.sigma_mode 오류: {mode!r}")

    sigma_model = None
    if sigma is not None:
        _require(sigma >= 0, f"{prefix}.sigma 는 0 이상이어야 합니다: {sigma}")
        sigma_model = NoiseWidthSpec(SigmaMode(mode), sigma)
    else:
        _require(mode == SigmaMode.CONSTANT.value, f"{prefix}.sigma_mode={mode} 에는 sigma 값이 필요합니다")

    return DetectorModel(
        k_max=k_max,
        n_sat=n_sat,
        tau_w=tau_w,
        sigma_model=sigma_model,
        linear_threshold=_number(values, 'detector.linear_threshold', positive=True),
        oversaturation_threshold=_number(values, 'detector.oversaturation_threshold', positive=True),
    )


def build_run_config(values: Dict[str, Any]) -> RunConfig:
    """평탄한 설정 dict 검증 → RunConfig"""
    try:
        detector1 = _build_detector(values, 'detector')
        detector2 = _build_detector(values, 'detector2', fallback=values)

        power = _number(values, 'optics.power_w', allow_none=True)
        if power is not None:
            alpha_sq = photons_from_power(power, _number(values, 'optics.omega', positive=True), detector1.tau_w)
            logger.info(f"ℹ️ 레이저 출력 {power} W → 신호 광자수 {alpha_sq:.4g}")
        else:
            alpha_sq = _number(values, 'optics.alpha_sq')
        _require(alpha_sq >= 0, f"optics.alpha_sq 는 0 이상이어야 합니다: {alpha_sq}")
        beta_sq = _number(values, 'optics.beta_sq', positive=True)

        variable = values.get('sweep.variable')
        _require(variable in SWEEP_VARIABLES, f"sweep.variable 은 {SWEEP_VARIABLES} 중 하나여야 합니다: {variable!r}")
        scale = values.get('sweep.scale')
        _require(scale in SWEEP_SCALES, f"sweep.scale 은 {SWEEP_SCALES} 중 하나여야 합니다: {scale!r}")
        start = _number(values, 'sweep.min')
        stop = _number(values, 'sweep.max')
        _require(start < stop, f"sweep.min < sweep.max 이어야 합니다: {start} ≥ {stop}")
        if scale == 'log':
            _require(start > 0, f"로그 스윕에는 양수 sweep.min 이 필요합니다: {start}")
        sweep = SweepSpec(variable, start, stop, _integer(values, 'sweep.points', 2), scale)

        shots = _integer(values, 'mc.shots', 1)
        _require(shots >= 2, f"mc.shots = {shots} 이면 분산이 정의되지 않습니다 (2 이상 필요)")
        block_size = values.get('mc.block_size')
        if block_size is not None:
            block_size = _integer(values, 'mc.block_size', 1)
            _require(block_size <= shots, f"mc.block_size 는 mc.shots 이하여야 합니다: {block_size}")
        protocol = values.get('mc.protocol')
        _require(protocol in [p.value for p in Protocol], f"mc.protocol 오류: {protocol!r}")
        mc = MonteCarloSpec(
            enabled=_boolean(values, 'mc.enabled'),
            shots=shots,
            ensembles=_integer(values, 'mc.ensembles', 1),
            block_size=block_size,
            seed=_integer(values, 'mc.seed', 0),
            workers=_integer(values, 'mc.workers', 1),
            protocol=Protocol(protocol),
            allow_gaussian=_boolean(values, 'mc.allow_gaussian'),
        )

        fmt = values.get('output.format')
        _require(fmt in OUTPUT_FORMATS, f"output.format 은 {OUTPUT_FORMATS} 중 하나여야 합니다: {fmt!r}")
        output = OutputSpec(values.get('output.path'), fmt)

        return RunConfig(
            detector1=detector1,
            detector2=detector2,
            alpha_sq=alpha_sq,
            beta_sq=beta_sq,
            chi=_number(values, 'optics.chi'),
            phi=_number(values, 'optics.phi'),
            sweep=sweep,
            mc=mc,
            output=output,
            values=dict(values),
        )
    except ConfigError:
        raise
    except HomodyneError as e:
        raise ConfigError(f"설정값 오류: {e}") from e


def _apply(values: Dict[str, Any], updates: Dict[str, Any], source: str):
    for key, value in updates.items():
        if key not in DEFAULT_RUN_CONFIG:
            raise ConfigError(f"알 수 없는 설정 키 ({source}): {key}")
        values[key] = value


def load_run_config(config_path: Optional[str] = None, overrides: Iterable[str] = (),
                    seed: Optional[int] = None, out: Optional[str] = None,
                    fmt: Optional[str] = None) -> RunConfig:
    """
    설정 병합 및 검증

    Args:
        config_path: 평탄한 JSON 설정 파일 (중첩 객체는 점 표기로 펼침)
        overrides: 'key=value' 문자열 목록
        seed, out, fmt: 전용 플래그 값
    """
    values = dict(DEFAULT_RUN_CONFIG)

    if config_path:
        try:
            with open(config_path, 'r', encoding='utf-8') as handle:
                data = json.load(handle)
        except OSError as e:
            raise ConfigError(f"설정 파일을 읽을 수 없습니다 ({config_path}): {e}") from e
        except ValueError as e:
            raise ConfigError(f"설정 파일 JSON 파싱 실패 ({config_path}): {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"설정 파일은 JSON 객체여야 합니다: {config_path}")
        _apply(values, flatten_dict(data), config_path)

    for item in overrides or ():
        key, sep, raw = item.partition('=')
        if not sep:
            raise ConfigError(f"--set 형식은 key=value 입니다: {item!r}")
        _apply(values, {key.strip(): parse_override_value(raw.strip())}, '--set')

    if seed is not None:
        values['mc.seed'] = seed
    if out is not None:
        values['output.path'] = out
    if fmt is not None:
        values['output.format'] = fmt

    return build_run_config(values)
