#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
재현 CLI 모듈
- table1 / fig2 / precision / simulate / operating-point 하위 명령
- 설정 병합: 기본값 < --config < --set < 전용 플래그
"""

__version__ = '1.0.0'

import argparse
import logging

from .models import RunConfig, SweepSpec, MonteCarloSpec, OutputSpec, build_run_config, load_run_config
from .commands import (
    cmd_table1,
    cmd_fig2,
    cmd_precision,
    cmd_simulate,
    cmd_operating_point,
    table1_frame,
    fig2_frame,
    precision_frame,
    simulate_payload,
    operating_point_frame,
)

__all__ = [
    'RunConfig',
    'SweepSpec',
    'MonteCarloSpec',
    'OutputSpec',
    'build_run_config',
    'load_run_config',
    'cmd_table1',
    'cmd_fig2',
    'cmd_precision',
    'cmd_simulate',
    'cmd_operating_point',
    'table1_frame',
    'fig2_frame',
    'precision_frame',
    'simulate_payload',
    'operating_point_frame',
    'common_arguments',
    'register_module',
]

logger = logging.getLogger(__name__)

# (명령, 핸들러, 도움말)
COMMANDS = [
    ('table1', cmd_table1, '선형/비선형 응답 비교표'),
    ('fig2', cmd_fig2, '오차비 η_e 대 신호 광자수'),
    ('precision', cmd_precision, 'δχ 스윕 (N 또는 M)'),
    ('simulate', cmd_simulate, '몬테카를로 앙상블 통계 (JSON)'),
    ('operating-point', cmd_operating_point, '검출기별 동작점 요약'),
]


def common_arguments() -> argparse.ArgumentParser:
    """
    공통 플래그 부모 파서

    default=SUPPRESS 로 두어 명령 앞/뒤 어디에 써도 값이 덮이지 않게 한다.
    """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--config', default=argparse.SUPPRESS, help='JSON 설정 파일 경로')
    parent.add_argument('--set', action='append', default=argparse.SUPPRESS, metavar='KEY=VALUE',
                        help='설정값 덮어쓰기 (여러 번 사용 가능)')
    parent.add_argument('--out', default=argparse.SUPPRESS, help='출력 파일 경로 (기본: 표준 출력)')
    parent.add_argument('--format', choices=['csv', 'json'], default=argparse.SUPPRESS, help='출력 형식')
    parent.add_argument('--seed', type=int, default=argparse.SUPPRESS, help='몬테카를로 시드')
    return parent


def register_module(subparsers, parent: argparse.ArgumentParser) -> bool:
    """하위 명령 등록"""
    try:
        for name, handler, help_text in COMMANDS:
            command = subparsers.add_parser(name, parents=[parent], help=help_text)
            command.set_defaults(handler=handler)
        logger.debug(f"CLI 명령 {len(COMMANDS)}개 등록")
        return True

    except Exception as e:
        logger.error(f"❌ CLI 명령 등록 실패: {e}")
        return False
