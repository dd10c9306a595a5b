import os
import logging
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

class Config:
    """应用配置类"""

    # Flask基础配置
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'your-secret-key-here'
    DEBUG = os.environ.get('FLASK_DEBUG', 'False').lower() == 'true'
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO').upper()

    # 报告配置
    APP_VERSION = os.environ.get('APP_VERSION', '1.0')
    REPORT_SCHEMA = 'toric-surface-lab/1'

    # 群分类配置（共轭搜索的矩阵元素上界）
    CONJUGATOR_BOUND = os.environ.get('CONJUGATOR_BOUND', '5')

    # 线丛基搜索的系数上界
    BASIS_SEARCH_BOUND = os.environ.get('BASIS_SEARCH_BOUND', '2')

    # 自检语料配置
    CORPUS_MAX_RAYS = os.environ.get('CORPUS_MAX_RAYS', '12')
    CORPUS_MAX_DEPTH = os.environ.get('CORPUS_MAX_DEPTH', '0')  # 0: 只受射线数限制
    CORPUS_RANDOM_CHAINS = os.environ.get('CORPUS_RANDOM_CHAINS', '200')
    CORPUS_SEED = os.environ.get('CORPUS_SEED', '0')
    HIRZEBRUCH_RANGE = os.environ.get('HIRZEBRUCH_RANGE', '2,3,4,5')

    # API配置
    RESTX_VALIDATE = True
    RESTX_MASK_SWAGGER = False

    _NUMERIC_DEFAULTS = {
        'CONJUGATOR_BOUND': 5,
        'BASIS_SEARCH_BOUND': 2,
        'CORPUS_MAX_RAYS': 12,
        'CORPUS_MAX_DEPTH': 0,
        'CORPUS_RANDOM_CHAINS': 200,
        'CORPUS_SEED': 0,
    }

    @staticmethod
    def get_int(key: str) -> int:
        """读取整数配置，非法值回退到默认值"""
        value = getattr(Config, key)
        try:
            number = int(value)
        except (TypeError, ValueError):
            return Config._NUMERIC_DEFAULTS[key]
        return number if number >= 0 else Config._NUMERIC_DEFAULTS[key]

    @staticmethod
    def hirzebruch_range() -> list:
        """F_a 种子的 a 值列表"""
        try:
            values = [int(x) for x in Config.HIRZEBRUCH_RANGE.split(',') if x.strip()]
        except ValueError:
            return [2, 3, 4, 5]
        return [a for a in values if a >= 0] or [2, 3, 4, 5]

    @staticmethod
    def init_app(app=None):
        """初始化应用配置"""
        # 验证数值配置
        invalid_keys = []
        for key, default in Config._NUMERIC_DEFAULTS.items():
            value = getattr(Config, key)
            try:
                if int(value) < 0:
                    invalid_keys.append(key)
            except (TypeError, ValueError):
                invalid_keys.append(key)

        if invalid_keys:
            logger.warning(f"警告: 配置项取值非法: {', '.join(invalid_keys)}，将使用默认配置")
            # 不抛出异常，允许使用默认配置

        if app is not None:
            app.config['CONJUGATOR_BOUND'] = Config.get_int('CONJUGATOR_BOUND')
            app.config['BASIS_SEARCH_BOUND'] = Config.get_int('BASIS_SEARCH_BOUND')
