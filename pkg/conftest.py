import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'jordan_parts_project.settings')
django.setup()
