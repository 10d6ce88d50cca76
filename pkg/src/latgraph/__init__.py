"""Dependency graphs, congruence lattices and hereditary sets of finite
join-semilattices and lattices."""

__version__ = "0.1.0"

from .errors import *  # noqa: E402,F401,F403
from .order import *  # noqa: E402,F401,F403
from .semilattice import *  # noqa: E402,F401,F403
from .depgraph import *  # noqa: E402,F401,F403
from .congruence import *  # noqa: E402,F401,F403
from .topology import *  # noqa: E402,F401,F403
from .io import *  # noqa: E402,F401,F403
