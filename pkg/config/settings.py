"""
Hopf YD Verifier - Configuration Settings
Paramètres de vérification, de performance et de rapport
"""

import os
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

load_dotenv()

CONFIG_DIR = Path(__file__).resolve().parent

# === APPLICATION CONFIGURATION ===
APP_CONFIG = {
    'app_name': 'Hopf YD Verifier',
    'version': '1.0.0',
    'description': 'Exact verification of (alpha,beta)-Yetter-Drinfeld structures over finite-dimensional Hopf algebras',
    'console_script': 'hopf-yd',
}


def _load_verification_defaults() -> Dict[str, Any]:
    path = CONFIG_DIR / 'verification.yml'
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f) or {}


# === VERIFICATION CONFIGURATION ===
VERIFICATION_CONFIG: Dict[str, Any] = _load_verification_defaults()

# === PERFORMANCE CONFIGURATION ===
PERFORMANCE_CONFIG = {
    'cache_max_entries': 512,
    'max_dim': int(os.getenv('HOPFYD_MAX_DIM', VERIFICATION_CONFIG.get('max_dim', 200))),
    'parallel': int(os.getenv('HOPFYD_PARALLEL', 1)),
}

# === REPORT CONFIGURATION ===
REPORT_CONFIG = {
    'formats': ('text', 'json'),
    'default_format': 'text',
    'json_indent': 2,
    'text_anchor_width': 60,
}


def get_environment_config() -> Dict[str, Any]:
    """Configuration selon HOPFYD_ENV"""
    env = os.getenv('HOPFYD_ENV', 'development')

    if env == 'production':
        config = {
            'debug': False,
            'logging_level': 'WARNING',
            'cache_max_entries': 2048,
            'parallel': 4,
        }
    elif env == 'staging':
        config = {
            'debug': False,
            'logging_level': 'INFO',
            'cache_max_entries': 1024,
            'parallel': 2,
        }
    else:  # development
        config = {
            'debug': True,
            'logging_level': 'INFO',
            'cache_max_entries': 512,
            'parallel': 1,
        }
    config['environment'] = env
    if os.getenv('HOPFYD_LOG_LEVEL'):
        config['logging_level'] = os.environ['HOPFYD_LOG_LEVEL'].upper()
    return config


# === EXPORT CONFIGURATION ===
def get_config() -> Dict[str, Any]:
    """Dictionnaire de configuration complet"""
    return {
        'app': APP_CONFIG,
        'verification': VERIFICATION_CONFIG,
        'performance': PERFORMANCE_CONFIG,
        'report': REPORT_CONFIG,
        'environment': get_environment_config(),
    }
