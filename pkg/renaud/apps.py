from django.apps import AppConfig


class RenaudConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'renaud'
    verbose_name = "Renaud's recursive algorithm"
