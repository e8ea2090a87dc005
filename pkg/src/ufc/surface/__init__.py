from .elaborate import *  # noqa
from .parser import *  # noqa
from .printer import *  # noqa
from .tokens import *  # noqa
