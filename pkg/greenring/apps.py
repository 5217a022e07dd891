from django.apps import AppConfig


class GreenringConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'greenring'
    verbose_name = 'Green ring decompositions'
