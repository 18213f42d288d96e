#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Modules 패키지 초기화
각 독립 모듈들의 컨테이너 역할
"""

__version__ = '1.0.0'

# 계산 모듈(optics_core, detector, estimation, montecarlo)은 import 로 사용하고,
# 명령을 노출하는 모듈만 register_module 로 등록한다.

# 사용 가능한 명령 모듈 목록
AVAILABLE_MODULES = [
    'cli',  # 재현 명령
]


def register_all_modules(subparsers, parent, logger):
    """모든 사용 가능한 모듈의 하위 명령 등록"""
    registered_count = 0

    for module_name in AVAILABLE_MODULES:
        try:
            # 동적 import
            module = __import__(f'modules.{module_name}', fromlist=['register_module'])
            if hasattr(module, 'register_module'):
                success = module.register_module(subparsers, parent)
                if success:
                    registered_count += 1
                    logger.debug(f"✅ {module_name} 모듈 등록 완료")
                else:
                    logger.warning(f"⚠️ {module_name} 모듈 등록 실패")
            else:
                logger.warning(f"⚠️ {module_name} 모듈에 register_module 함수가 없습니다")

        except ImportError as e:
            logger.warning(f"⚠️ {module_name} 모듈을 찾을 수 없습니다: {e}")
        except Exception as e:
            logger.error(f"❌ {module_name} 모듈 등록 중 오류: {e}")

    logger.debug(f"📦 총 {registered_count}/{len(AVAILABLE_MODULES)}개 모듈 등록 완료")
    return registered_count
