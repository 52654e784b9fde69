from django.apps import AppConfig


class FindimConfig(AppConfig):
    name = 'findim'
    verbose_name = 'Finite-dimensional modules'
