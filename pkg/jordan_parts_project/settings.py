"""
Django settings for jordan_parts_project project.

The project has no web surface: Django provides the app registry, the cache
framework, management commands and the test runner for the Jordan partition
library. Every tunable is read from the environment (or a local .env file).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

from pathlib import Path
from dotenv import load_dotenv
import environ


env = environ.Env(
    DEBUG=(bool, False),
    JORDANPARTS_ORACLE_CAP=(int, 576),
    JORDANPARTS_CACHE_MAX_ENTRIES=(int, 500000),
    JORDANPARTS_LOG_LEVEL=(str, 'WARNING'),
    CELERY_TASK_ALWAYS_EAGER=(bool, True),
)
load_dotenv()


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env('SECRET_KEY', default='jordanparts-insecure-development-key')

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    'rest_framework',

    'numtheory.apps.NumtheoryConfig',
    'greenring.apps.GreenringConfig',
    'renaud.apps.RenaudConfig',
    'iima.apps.IimaConfig',
    'closedform.apps.ClosedformConfig',
    'oracle.apps.OracleConfig',
    'verify.apps.VerifyConfig',
    'cli.apps.CliConfig',
]


# Database
# Nothing is persisted; Django only needs a default alias to exist.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Rest-Framework settings (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COMPACT_JSON': True,
    'UNICODE_JSON': False,
}

# Memo cache for recursive decompositions
JORDANPARTS_CACHE_ALIAS = 'decompositions'

CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'jordanparts-default',
    },
    JORDANPARTS_CACHE_ALIAS: {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'jordanparts-decompositions',
        'TIMEOUT': None,  # Decompositions never go stale

        'OPTIONS': {
            'MAX_ENTRIES': env('JORDANPARTS_CACHE_MAX_ENTRIES'),
        }
    },
}

# Oracle settings
JORDANPARTS_ORACLE_CAP = env('JORDANPARTS_ORACLE_CAP')  # Largest r*s accepted by the brute-force oracle

# Celery settings
CELERY_BROKER_URL = env('CELERY_BROKER', default='memory://')
CELERY_RESULT_BACKEND = env('CELERY_RESULT_BACKEND', default='cache+memory://')
CELERY_TASK_ALWAYS_EAGER = env('CELERY_TASK_ALWAYS_EAGER')
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'

# Logging settings (stderr only, stdout is reserved for command output)
JORDANPARTS_LOGGERS = ('jordanparts', 'numtheory', 'greenring', 'renaud', 'iima', 'closedform', 'oracle', 'verify', 'cli')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': env('JORDANPARTS_LOG_LEVEL'),
            'propagate': False,
        }
        for name in JORDANPARTS_LOGGERS
    },
}
