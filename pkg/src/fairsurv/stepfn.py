"""Right-continuous step functions used to carry survival curves and
cumulative hazards."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant, right-continuous function of time.

    ``x`` holds strictly increasing breakpoints and ``y`` the value taken on
    ``[x[i], x[i+1])``. Before the first breakpoint the function equals
    ``initial``. Evaluation at ``t`` returns the value at the last
    breakpoint <= t.
    """

    x: np.ndarray
    y: np.ndarray
    initial: float = 1.0

    def __post_init__(self) -> None:
        x = np.asarray(self.x, dtype=np.float64)
        y = np.asarray(self.y, dtype=np.float64)
        if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
            raise DomainError("breakpoints and values must be 1-d and equal length")
        if x.size > 1 and not np.all(np.diff(x) > 0):
            raise DomainError("breakpoints must be strictly increasing")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def _eval(self, t, side: str):
        t_arr = np.asarray(t, dtype=np.float64)
        scalar = np.isscalar(t) or t_arr.ndim == 0
        if self.x.size == 0:
            out = np.full(t_arr.shape, self.initial)
        else:
            idx = np.searchsorted(self.x, t_arr, side=side) - 1
            out = np.where(idx >= 0, self.y[np.maximum(idx, 0)], self.initial)
        return float(out) if scalar else out

    def __call__(self, t):
        """Evaluate at scalar or array ``t`` (right-continuous)."""
        return self._eval(t, side="right")

    def left_limit(self, t):
        """Value just before ``t``: the value at the last breakpoint < t."""
        return self._eval(t, side="left")

    @property
    def terminal_value(self) -> float:
        """Value after the last breakpoint (``initial`` if no breakpoints)."""
        return float(self.y[-1]) if self.y.size else float(self.initial)
