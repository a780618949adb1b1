import os

from django_docker_helpers.utils import load_yaml_config

from . import __version__

# PATHS
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
ROOT_PATH = BASE_DIR
PROJECT_NAME = 'czx_verify'

LOCAL_SETTINGS_FILE = os.path.join(BASE_DIR, PROJECT_NAME, 'local_settings.py')


# =================== LOAD YAML CONFIG =================== #
CONFIG, configure = load_yaml_config(
    '',
    os.path.join(
        BASE_DIR, PROJECT_NAME, 'config',
        os.environ.get('DJANGO_CONFIG_FILE_NAME', 'default.yml')
    )
)
# ======================================================== #

DEBUG = configure('debug', False)

SECRET_KEY = configure('secret_key', '')
if not SECRET_KEY:
    from django.utils.crypto import get_random_string
    SECRET_KEY = get_random_string(50, 'abcdefghijklmnopqrstuvwxyz0123456789!@#$%^&*(-_=+)')

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'czx',
]

# движок работает без базы данных: все вычисления в памяти
DATABASES = {}

USE_I18N = True
USE_TZ = True
TIME_ZONE = 'UTC'
LANGUAGE_CODE = 'en'


# LOGGING
LOGGING_LEVEL = str(configure('logging.level', 'INFO')).upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': configure('logging.format', '%(asctime)s %(levelname)s %(name)s: %(message)s'),
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'czx': {
            'handlers': ['console'],
            'level': LOGGING_LEVEL,
            'propagate': False,
        },
    },
}

# RAVEN
if configure('raven', False) and configure('raven.dsn', ''):
    import raven  # noqa

    INSTALLED_APPS += ['raven.contrib.django.raven_compat']
    RAVEN_CONFIG = {
        'dsn': configure('raven.dsn', None),
        'release': __version__,
    }
    LOGGING['handlers']['sentry'] = {
        'level': 'WARNING',
        'class': 'raven.contrib.django.raven_compat.handlers.SentryHandler',
    }
    LOGGING['loggers']['czx']['handlers'].append('sentry')


# BATTERIES
# =========
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'DEFAULT_RENDERER_CLASSES': ('rest_framework.renderers.JSONRenderer',),
    'UNAUTHENTICATED_USER': None,
}


# VERIFICATION DEFAULTS
CZX_DEFAULT_WINDOW = os.environ.get('CZX_DEFAULT_WINDOW') or configure('verify.default_window', '-4:4')
CZX_GROUP_BOUND = int(configure('verify.group_bound', 3))
CZX_TAIL_BOUND = int(configure('verify.tail_bound', 200))
CZX_SEED = int(configure('verify.seed', 0))
CZX_REPORT_FORMAT = configure('verify.format', 'json')  # 'json' | 'yaml'
CZX_MAX_COUNTEREXAMPLES = int(configure('verify.max_counterexamples', 5))

CZX_GREEN_SEARCH_MARGIN = int(configure('verify.green_search_margin', 10))
CZX_CONGRUENCE_WINDOW = int(configure('verify.congruence.window', 8))
CZX_CONGRUENCE_BOX = int(configure('verify.congruence.box', 3))
CZX_CONGRUENCE_CHECK_WINDOW = int(configure('verify.congruence.check_window', 2))
CZX_CONGRUENCE_SAMPLES = int(configure('verify.congruence.samples', 12))
# полный перебор списков из одной-двух пар вместо выборки; на box 3 это часы
CZX_CONGRUENCE_EXHAUSTIVE = bool(configure('verify.congruence.exhaustive', False))
CZX_RANDOM_NEIGHBOURHOODS = int(configure('verify.random_neighbourhoods', 1000))

# REDEFINE
if os.path.exists(LOCAL_SETTINGS_FILE):
    from .local_settings import *  # noqa
