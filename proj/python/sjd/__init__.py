from ._sjd import *  # noqa: F401,F403
from ._sjd import __doc__  # noqa: F401
