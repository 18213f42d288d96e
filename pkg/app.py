#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
포화 광검출기 호모다인 위상 추정 재현 도구

사용 예:
    python app.py table1
    python app.py fig2 --out fig2.csv
    python app.py precision --set sweep.variable=shots --set sweep.min=1 --set sweep.max=10000 --set sweep.points=3
    python app.py simulate --set optics.alpha_sq=1000 --set optics.beta_sq=100 --format json
"""

import argparse
import logging
import sys
import traceback  # 디버깅용

from config import get_config
from common.errors import HomodyneError

logger = logging.getLogger('homodyne')


def create_app() -> argparse.ArgumentParser:
    """CLI 애플리케이션 팩토리"""
    # 환경별 설정 로드
    config_class = get_config()

    # 로깅 설정 (결과는 stdout, 로그는 stderr)
    logging.basicConfig(
        level=getattr(logging, str(config_class.LOG_LEVEL).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    from modules.cli import common_arguments
    parent = common_arguments()
    parser = argparse.ArgumentParser(
        prog='app.py',
        description='포화 광검출기 호모다인 위상 추정 재현 도구',
        parents=[parent],
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    register_commands(subparsers, parent)
    return parser


def register_commands(subparsers, parent):
    """명령 모듈 등록"""
    try:
        from modules import register_all_modules
        count = register_all_modules(subparsers, parent, logger)
        if not count:
            logger.warning("⚠️ 등록된 명령 모듈이 없습니다")
    except ImportError as e:
        logger.error(f"❌ 명령 모듈 import 실패: {e}")
    except Exception as e:
        logger.error(f"❌ 명령 모듈 등록 중 오류: {e}")
        logger.error(f"   스택 트레이스: {traceback.format_exc()}")


def main(argv=None) -> int:
    """진입점: 종료 코드 반환"""
    parser = create_app()
    args = parser.parse_args(argv)
    config_class = get_config()

    try:
        from modules.cli import load_run_config
        run_config = load_run_config(
            config_path=getattr(args, 'config', None) or config_class.DEFAULT_CONFIG_PATH,
            overrides=getattr(args, 'set', None) or [],
            seed=getattr(args, 'seed', None),
            out=getattr(args, 'out', None),
            fmt=getattr(args, 'format', None),
        )
        logger.info(f"🚀 {args.command} 실행")
        if config_class.DEBUG:
            logger.debug(f"확정 설정: {run_config.to_dict()}")
        args.handler(run_config)
        return 0

    except HomodyneError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except Exception as e:
        logger.error(f"❌ 예상하지 못한 오류: {e}")
        logger.error(f"   스택 트레이스: {traceback.format_exc()}")
        return 1


if __name__ == '__main__':
    sys.exit(main())
