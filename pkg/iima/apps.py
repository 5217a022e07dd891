from django.apps import AppConfig


class IimaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'iima'
    verbose_name = 'Iima-Iwamatsu binomial determinant algorithm'
