from django.apps import AppConfig


class LeechConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.leech'
    verbose_name = 'Leech lattice from a Z4 code'
