from .base_checks import *  # noqa
from .corpus_checks import *  # noqa
