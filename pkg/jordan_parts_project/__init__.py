# Loaded with Django so verify.tasks binds its shared_task to this app.
from .celery import app as celery_app

__all__ = ('celery_app',)
