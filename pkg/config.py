import os
from dotenv import load_dotenv

# .env 파일 로드
load_dotenv()


class Config:
    """기본 설정 클래스"""
    # 로그 레벨 (비어 있으면 환경별 기본값)
    LOG_LEVEL = os.getenv('HOMODYNE_LOG_LEVEL', '')

    # 기본 실행 설정 파일 (--config 미지정 시)
    DEFAULT_CONFIG_PATH = os.getenv('HOMODYNE_CONFIG')

    # 몬테카를로 기본 시드와 스레드 수
    DEFAULT_SEED = int(os.getenv('HOMODYNE_SEED', 0))
    MC_WORKERS = int(os.getenv('HOMODYNE_WORKERS', 1))

    # 개발/운영 환경 구분
    ENV = os.getenv('HOMODYNE_ENV', 'production')
    DEBUG = ENV == 'development'


class DevelopmentConfig(Config):
    """개발환경 설정"""
    DEBUG = True
    LOG_LEVEL = Config.LOG_LEVEL or 'DEBUG'


class ProductionConfig(Config):
    """운영환경 설정"""
    DEBUG = False
    LOG_LEVEL = Config.LOG_LEVEL or 'INFO'


# 기본 실행 설정 (그림 재현 파라미터: χ = 0.01, N_sat = 1e17, k_max/N_sat = 0.1, |β|² = 1e15)
DEFAULT_RUN_CONFIG = {
    # 검출기
    'detector.k_max': 1e16,
    'detector.n_sat': 1e17,
    'detector.tau_w': 1e-4,
    'detector.sigma': None,            # None 이면 √(k_max × 0.01)
    'detector.sigma_mode': 'constant',
    'detector.linear_threshold': 0.05,
    'detector.oversaturation_threshold': 10.0,
    # 두 번째 검출기 (None 이면 detector.* 값 사용)
    'detector2.k_max': None,
    'detector2.n_sat': None,
    'detector2.tau_w': None,
    'detector2.sigma': None,
    'detector2.sigma_mode': None,
    # 광학
    'optics.alpha_sq': 1e16,
    'optics.beta_sq': 1e15,
    'optics.chi': 0.01,
    'optics.phi': 0.0,
    'optics.power_w': None,            # 지정하면 alpha_sq 대신 P τ_w / ħω 사용
    'optics.omega': 1e14,
    # 스윕
    'sweep.variable': 'alpha_sq',      # alpha_sq 또는 shots
    'sweep.min': 1e14,
    'sweep.max': 1e19,
    'sweep.points': 60,
    'sweep.scale': 'log',
    # 몬테카를로
    'mc.enabled': False,
    'mc.shots': 10000,
    'mc.ensembles': 200,
    'mc.block_size': None,             # None 이면 shots (앙상블당 추정 1개)
    'mc.seed': Config.DEFAULT_SEED,
    'mc.workers': Config.MC_WORKERS,
    'mc.protocol': 'nonlinear',
    'mc.allow_gaussian': False,
    # 출력
    'output.path': None,
    'output.format': 'csv',
}


# 기본 설정 (운영환경)
def get_config():
    """환경에 따른 설정 반환"""
    env = os.getenv('HOMODYNE_ENV', 'production')
    if env == 'development':
        return DevelopmentConfig
    else:
        return ProductionConfig
