from django.apps import AppConfig


class GriessConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.griess'
    verbose_name = 'Weight-two algebras of lattice vertex algebras'
