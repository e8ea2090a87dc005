import django
from django.conf import settings

DEFAULT_MAX_LEVEL = 4
DEFAULT_FUEL = 10 ** 7
TRACE_LIMIT = 10_000
MAX_NUMERAL = 999


def setup() -> None:
    """
    Forms and check messages only need a minimal settings object, so the CLI
    configures one on the fly unless a settings module is already active.
    """
    if not settings.configured:
        settings.configure(USE_I18N=False, INSTALLED_APPS=[])
        django.setup()
