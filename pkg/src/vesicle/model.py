"""Parameter containers used across the analytic modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


@dataclass(frozen=True)
class ModelPoint:
    """Fugacities (c, s, q) and optionally the step fugacity t."""

    c: float
    s: float = 1.0
    q: float = 1.0
    t: Optional[float] = None

    def __post_init__(self):
        for name in ("c", "s", "q"):
            if not getattr(self, name) > 0:
                raise DomainError(f"fugacity {name} must be positive, got {getattr(self, name)!r}")
        if self.t is not None and self.t < 0:
            raise DomainError(f"t must be non-negative, got {self.t!r}")

    def xy(self) -> "XYPoint":
        """Map (s, t) to the (x, y) variables: x = t/s, y = t*s."""
        if self.t is None:
            raise DomainError("ModelPoint.xy() needs t")
        return XYPoint(self.t / self.s, self.t * self.s, self.q)


@dataclass(frozen=True)
class XYPoint:
    x: float
    y: float
    q: float = 1.0

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise DomainError(f"x and y must be non-negative, got ({self.x!r}, {self.y!r})")
        if not self.q > 0:
            raise DomainError(f"q must be positive, got {self.q!r}")


@dataclass(frozen=True)
class TruncationPolicy:
    """Stopping rule for term-by-term series summation.

    Summation stops once two consecutive terms are below ``abs_tol`` in
    magnitude; reaching ``max_terms`` first is a convergence failure.
    """

    abs_tol: float = 1e-16
    max_terms: int = 10000


DEFAULT_POLICY = TruncationPolicy()
