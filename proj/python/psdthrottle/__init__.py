"""PSD zero forcing propagation, throttling searches and the cops-and-robbers solver.

Vertex sets are lists of 0-based vertex indices; None stands for an infinite
propagation or capture time.
"""

from ._psdthrottle import *  # noqa: F401,F403
from ._psdthrottle import (  # noqa: F401
    EdgeError,
    Graph,
    ParameterError,
    ParseError,
    SizeError,
    UndefinedParameterError,
)

__version__ = "0.1.0"
