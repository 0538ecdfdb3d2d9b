from ._ualg import *  # noqa: F401,F403
from ._ualg import corpus  # noqa: F401
