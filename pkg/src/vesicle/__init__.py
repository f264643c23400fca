"""Exact solution toolkit for pulled, directed vesicles with sticky walls.

Pairs of friendly NE lattice walks weighted by contacts (c), end-point
displacement (s), enclosed area (q) and length (t).
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BoundsError,
    ConvergenceError,
    DomainError,
    FitDomainError,
    InvariantError,
    SingularError,
    VesicleError,
)
from .model import ModelPoint, TruncationPolicy, XYPoint  # noqa: E402
from .poly import LaurentPoly3  # noqa: E402
