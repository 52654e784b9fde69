from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


DEFAULTS = {
    'SCHEMA_VERSION': '1',
    'CENSUS_SHIFT_CAP': 1_000_000,
    'DEFAULT_SAMPLES': 20,
    'DEFAULT_RNG_SEED': 0,
    'SEED_DENOMINATOR': 5,
    'SEED_SPREAD': 2,
    'CLOSURE_PADDING': None,
}


def gt_setting(name):
    """Read one key of settings.GT_MODULES, falling back to DEFAULTS"""
    if name not in DEFAULTS:
        raise ImproperlyConfigured(f"Unknown GT_MODULES setting: {name}")
    configured = getattr(settings, 'GT_MODULES', {})
    return configured.get(name, DEFAULTS[name])
