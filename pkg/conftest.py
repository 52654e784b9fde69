import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gtmodules.settings')
django.setup()
