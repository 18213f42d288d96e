#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
결과 출력 관리
- CSV: '#' 주석 줄로 설정값을 먼저 기록한 뒤 표 본문
- JSON: {"config": ..., 본문} 형태
- 경로가 없으면 표준 출력
"""

import io
import json
import logging
import sys
from typing import Any, Callable, Dict, Optional

import pandas as pd

from .errors import OutputError
from .utils import format_number, to_json_safe

logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ('csv', 'json')


class ResultWriter:
    """결과 출력 관리 클래스"""

    def __init__(self, path: Optional[str] = None, fmt: str = 'csv'):
        if fmt not in SUPPORTED_FORMATS:
            raise OutputError(f"지원하지 않는 출력 형식: {fmt}")
        self.path = path
        self.fmt = fmt

    def write_table(self, frame: pd.DataFrame, config: Dict[str, Any],
                    comments: Optional[Dict[str, Any]] = None,
                    formatters: Optional[Dict[str, Callable[[Any], str]]] = None) -> str:
        """표 출력 (CSV 또는 JSON rows)"""
        if self.fmt == 'json':
            payload = {
                'config': config,
                'summary': comments or {},
                'rows': frame.to_dict(orient='records'),
            }
            return self.write_json(payload)

        formatted = frame.copy()
        formatters = formatters or {}
        for column in formatted.columns:
            fmt = formatters.get(column, format_number)
            formatted[column] = formatted[column].map(fmt)

        buffer = io.StringIO()
        for key, value in config.items():
            buffer.write(f"# {key}={format_number(value) if value is not None else 'null'}\n")
        for key, value in (comments or {}).items():
            buffer.write(f"# {key}={format_number(value)}\n")
        formatted.to_csv(buffer, index=False, lineterminator='\n')
        return self._emit(buffer.getvalue())

    def write_json(self, payload: Dict[str, Any]) -> str:
        """JSON 출력"""
        text = json.dumps(to_json_safe(payload), indent=2, ensure_ascii=False, allow_nan=False)
        return self._emit(text + '\n')

    def _emit(self, text: str) -> str:
        """파일 또는 표준 출력으로 쓰기"""
        if not self.path:
            sys.stdout.write(text)
            sys.stdout.flush()
            return text

        try:
            with open(self.path, 'w', encoding='utf-8', newline='\n') as handle:
                handle.write(text)
        except OSError as e:
            logger.error(f"❌ 출력 파일 쓰기 실패 ({self.path}): {e}")
            raise OutputError(f"출력 파일 쓰기 실패 ({self.path}): {e}") from e

        logger.info(f"✅ 결과 저장 완료: {self.path}")
        return text
