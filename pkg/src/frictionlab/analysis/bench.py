"""Wall-clock timing of the formulas.

Purely informational: no ordering between methods is asserted, since it
depends on hardware, numpy build and interpreter.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ..core import MethodId
from ..literature import Convention
from ..methods import evaluate_array, scalar_inverse_sqrt
from .grid import ScanGrid

MODES = ("vector", "scalar")


@dataclass(frozen=True)
class BenchReport:
    method: MethodId
    mode: str
    calls: int
    median_ns_per_call: float
    p10: float
    p90: float
    checksum: float  # keeps results live; also a cheap regression signal


def benchmark(method: MethodId, grid: ScanGrid | None = None,
              repetitions: int = 20, mode: str = "vector",
              convention: Convention = Convention.CLASSICAL) -> BenchReport:
    """Time ``repetitions`` full-grid evaluations of ``method``.

    ``mode="vector"`` evaluates the grid as numpy arrays; ``mode="scalar"``
    loops over points with the float code path. Percentiles are over
    repetitions, expressed per point.
    """
    if repetitions < 10:
        raise ValueError("repetitions must be >= 10")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    grid = grid or ScanGrid()
    re, eps = grid.mesh()
    n = re.size
    sink = 0.0
    per_call = np.empty(repetitions)
    if mode == "vector":
        for k in range(repetitions):
            t0 = time.perf_counter_ns()
            u, _ = evaluate_array(method, re, eps, convention)
            per_call[k] = (time.perf_counter_ns() - t0) / n
            sink += float(np.nansum(u))
    else:
        pts = list(zip(re.ravel().tolist(), eps.ravel().tolist()))
        for k in range(repetitions):
            acc = 0.0
            t0 = time.perf_counter_ns()
            for r, e in pts:
                acc += scalar_inverse_sqrt(method, r, e, convention)
            per_call[k] = (time.perf_counter_ns() - t0) / n
            sink += acc
    p10, med, p90 = np.percentile(per_call, [10, 50, 90])
    return BenchReport(method, mode, n * repetitions, float(med),
                       float(p10), float(p90), sink)
