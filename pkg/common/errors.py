#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
공통 예외 정의
- 모든 예외는 HomodyneError 를 상속
- exit_code 는 CLI 종료 코드로 그대로 사용
"""

from typing import Optional


class HomodyneError(Exception):
    """프로젝트 공통 예외"""
    exit_code = 1


class ConfigError(HomodyneError, ValueError):
    """설정값 오류"""
    exit_code = 2


class DomainError(HomodyneError, ValueError):
    """정의역 밖의 입력 (음수 광자수, 음수 전류 등)"""
    exit_code = 2


class OversaturatedError(HomodyneError):
    """과포화: 전류가 I_max 에 너무 가까워 역변환 불가"""
    exit_code = 3

    def __init__(self, current: float, i_max: float, message: Optional[str] = None):
        self.current = current
        self.i_max = i_max
        if message is None:
            message = (f"과포화 전류 {current:.6g} A (I_max = {i_max:.6g} A): "
                       f"검출기가 더 이상 광자에 반응하지 않아 위상을 추출할 수 없습니다")
        super().__init__(message)


class OutputError(HomodyneError, OSError):
    """출력 파일 쓰기 실패"""
    exit_code = 4


class DegenerateSignalError(HomodyneError, ValueError):
    """신호광 진폭이 0 이라 위상이 정의되지 않음"""
    exit_code = 5


class UndefinedRatioError(HomodyneError, ValueError):
    """χ = 0 이면 오차비 η_e 가 정의되지 않음"""
    exit_code = 5


class DivergentPrecisionError(HomodyneError, ArithmeticError):
    """cos(χ − φ) = 0 에서 정밀도 발산"""
    exit_code = 5


class NonIdenticalDetectorsError(HomodyneError, ValueError):
    """동일 검출기 가정이 깨짐 (general_precision 사용 필요)"""
    exit_code = 5


class InfeasibleSimulationError(HomodyneError):
    """데스크 스케일을 넘는 몬테카를로 요청 거부"""
    exit_code = 6
