from .base import *

DEBUG = True

ALLOWED_HOSTS = ['*']

LOGGING['root']['level'] = 'DEBUG'
LOGGING['loggers']['apps']['level'] = env.str('MCKAY_LOG_LEVEL', default='DEBUG')

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}
