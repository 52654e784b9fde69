"""
Django settings for the gtmodules project.

The project has no web surface: it is driven through management commands
(see cli/management/commands) and the test runner. Everything that can be
tuned per machine is read from the environment, optionally through a .env
file next to manage.py.
"""

import os
from dotenv import load_dotenv
load_dotenv()


SECRET_KEY = os.getenv(
    'DJANGO_SECRET_KEY', 'django-insecure-gtmodules-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third party apps
    'rest_framework',
    # project apps
    'core',
    'action',
    'structure',
    'findim',
    'cli',
]

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': False,
    'COMPACT_JSON': False,
    'STRICT_JSON': True,
}


# Database
# Nothing is persisted and no app defines models.

DATABASES = {}

USE_TZ = True


# Gelfand-Tsetlin module settings
# Every key can be overridden with an environment variable GT_<KEY>.

def _env_int(name, default):
    value = os.getenv(name)
    return default if value in (None, '') else int(value)


GT_MODULES = {
    'SCHEMA_VERSION': os.getenv('GT_SCHEMA_VERSION', '1'),
    # scans larger than this are skipped and reported, never truncated
    'CENSUS_SHIFT_CAP': _env_int('GT_CENSUS_SHIFT_CAP', 1_000_000),
    'DEFAULT_SAMPLES': _env_int('GT_DEFAULT_SAMPLES', 20),
    'DEFAULT_RNG_SEED': _env_int('GT_DEFAULT_RNG_SEED', 0),
    'SEED_DENOMINATOR': _env_int('GT_SEED_DENOMINATOR', 5),
    'SEED_SPREAD': _env_int('GT_SEED_SPREAD', 2),
    # None means "pad closure boxes by n"
    'CLOSURE_PADDING': (
        None if os.getenv('GT_CLOSURE_PADDING') in (None, '')
        else int(os.getenv('GT_CLOSURE_PADDING'))
    ),
}


# Logging
# Diagnostics go to standard error; documents own standard output.

GT_LOG_LEVEL = os.getenv('GT_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': GT_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('core', 'action', 'structure', 'findim', 'cli')
    },
}
