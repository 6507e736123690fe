from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..core import EPS_MAX, RE_MAX, RE_MIN

EPS_MIN_POSITIVE = 1e-7


def _midpoints(lo: float, hi: float, n: int) -> np.ndarray:
    """``n`` log-spaced cell midpoints of ``(lo, hi)``."""
    a, b = math.log10(lo), math.log10(hi)
    step = (b - a) / n
    return 10.0 ** (a + step * (np.arange(n) + 0.5))


@dataclass(frozen=True)
class ScanGrid:
    """Deterministic log-spaced sampling of the Colebrook domain.

    Reynolds numbers are the midpoints of ``n_r`` equal log-cells of
    (4000, 1e8). The roughness axis holds the smooth pipe ``0`` followed by
    the midpoints of ``n_eps - 1`` log-cells of [1e-7, 0.05). Midpoints keep
    every sample strictly inside the open bounds, and a grid refined by an
    odd factor contains the coarser one.
    """

    n_r: int = 512
    n_eps: int = 512

    def __post_init__(self):
        if self.n_r < 1 or self.n_eps < 1:
            raise ValueError("grid counts must be >= 1")

    @cached_property
    def reynolds_points(self) -> np.ndarray:
        return _midpoints(RE_MIN, RE_MAX, self.n_r)

    @cached_property
    def roughness_points(self) -> np.ndarray:
        if self.n_eps == 1:
            return np.zeros(1)
        return np.concatenate(
            [[0.0], _midpoints(EPS_MIN_POSITIVE, EPS_MAX, self.n_eps - 1)]
        )

    @property
    def size(self) -> int:
        return self.n_r * self.n_eps

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """``(re, eps)`` arrays of shape ``(n_r, n_eps)``."""
        return np.meshgrid(self.reynolds_points, self.roughness_points,
                           indexing="ij")

    def refined(self, factor: int) -> "ScanGrid":
        """Grid with ``factor`` times as many cells per axis.

        For odd ``factor`` every point of ``self`` is also a point of the
        result (up to rounding of the coordinates).
        """
        return ScanGrid(self.n_r * factor, (self.n_eps - 1) * factor + 1)
