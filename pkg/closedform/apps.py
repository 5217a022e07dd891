from django.apps import AppConfig


class ClosedformConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'closedform'
    verbose_name = 'Closed-form Jordan partitions'
