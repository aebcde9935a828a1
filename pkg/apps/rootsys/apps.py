from django.apps import AppConfig


class RootsysConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.rootsys'
    verbose_name = 'Root systems and the extended E8 diagram'
