from django.apps import AppConfig


class MckayConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.mckay'
    verbose_name = 'Extended E8 diagram and conformal vectors'
