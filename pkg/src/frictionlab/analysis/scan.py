"""Error scans of the approximations against the reference solution."""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..core import FlowConditions, MethodId
from ..literature import Convention
from ..methods import evaluate_array
from .grid import ScanGrid

PERCENTILES = (50, 90, 99, 100)
CALIBRATION_TARGET = 0.0096
CALIBRATION_BAND = 0.25
THREADS_ENV = "FRICTIONLAB_THREADS"


class Metric(enum.Enum):
    ERROR_ON_F = "f"
    ERROR_ON_U = "u"


def thread_count(default: int = 1) -> int:
    """Worker cap from ``FRICTIONLAB_THREADS`` (positive integer)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _evaluate_grid(method, grid, convention, workers, **options):
    re, eps = grid.mesh()
    workers = thread_count() if workers is None else workers
    if workers <= 1 or grid.n_r < 2 * workers:
        return evaluate_array(method, re, eps, convention, **options)
    # Row blocks; concatenation order is fixed, so the result is independent
    # of scheduling.
    blocks = np.array_split(np.arange(grid.n_r), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(
            lambda rows: evaluate_array(method, re[rows], eps[rows],
                                        convention, **options),
            blocks))
    u = np.concatenate([p[0] for p in parts])
    stage = np.concatenate([p[1] for p in parts])
    return u, stage


def reference_solution(grid: ScanGrid, workers: int | None = None) -> np.ndarray:
    """``1/sqrt(f)`` from the fixed-point oracle at every grid point."""
    u, _ = _evaluate_grid(MethodId.ORACLE_FIXED_POINT, grid,
                          Convention.AS_PRINTED, workers)
    return u


def error_percent(u_method, u_ref, metric: Metric):
    if metric is Metric.ERROR_ON_U:
        return 100.0 * np.abs(u_method - u_ref) / u_ref
    f_m = 1.0 / (u_method * u_method)
    f_r = 1.0 / (u_ref * u_ref)
    return 100.0 * np.abs(f_m - f_r) / f_r


@dataclass(frozen=True)
class ErrorRows:
    """Per-point records of a scan, flattened in (R, eps) row-major order."""

    reynolds: np.ndarray
    relative_roughness: np.ndarray
    f_ref: np.ndarray
    f_method: np.ndarray
    error_percent: np.ndarray
    fault: np.ndarray  # stage name, "" when the point evaluated cleanly

    def __len__(self):
        return self.reynolds.size


@dataclass(frozen=True)
class ErrorReport:
    method: MethodId
    metric: Metric
    convention: Convention
    max_error: float
    argmax: FlowConditions | None
    percentiles: dict[int, float]
    n_points: int
    n_faults: int
    rows: ErrorRows = field(repr=False)

    @property
    def fault_fraction(self) -> float:
        return self.n_faults / self.n_points if self.n_points else 0.0

    def summary(self) -> dict:
        return {
            "method": self.method.cli_name,
            "convention": self.convention.value,
            "metric": self.metric.value,
            "max_error_percent": self.max_error,
            "argmax": None if self.argmax is None else {
                "reynolds": self.argmax.reynolds,
                "relative_roughness": self.argmax.relative_roughness,
            },
            "percentiles": {str(k): v for k, v in self.percentiles.items()},
            "n_points": self.n_points,
            "n_faults": self.n_faults,
        }


def scan_errors(method: MethodId, grid: ScanGrid | None = None,
                metric: Metric = Metric.ERROR_ON_F,
                convention: Convention = Convention.AS_PRINTED,
                reference: np.ndarray | None = None,
                workers: int | None = None,
                **options) -> ErrorReport:
    """Relative error of ``method`` against the fixed-point oracle.

    ``MethodId.ORACLE_LAMBERT`` is accepted as a self-test of the two
    reference routes. Points where the formula cannot be evaluated are kept
    in ``rows`` with their fault stage and left out of the statistics.
    ``reference`` may carry a precomputed :func:`reference_solution`.
    """
    if method is MethodId.ORACLE_FIXED_POINT:
        raise ValueError("the fixed-point oracle cannot be scored against itself")
    grid = grid or ScanGrid()
    u_ref = reference_solution(grid, workers) if reference is None else reference
    u, stage = _evaluate_grid(method, grid, convention, workers, **options)
    err = error_percent(u, u_ref, metric)

    re, eps = grid.mesh()
    rows = ErrorRows(
        reynolds=re.ravel(),
        relative_roughness=eps.ravel(),
        f_ref=(1.0 / (u_ref * u_ref)).ravel(),
        f_method=(1.0 / (u * u)).ravel(),
        error_percent=err.ravel(),
        fault=stage.ravel(),
    )
    ok = rows.fault == ""
    n_faults = int((~ok).sum())
    if ok.any():
        clean = rows.error_percent[ok]
        pct = {p: float(np.percentile(clean, p)) for p in PERCENTILES}
        i = int(np.flatnonzero(ok)[np.argmax(clean)])
        argmax = FlowConditions(float(rows.reynolds[i]),
                                float(rows.relative_roughness[i]))
        pct[100] = float(clean.max())
    else:
        pct = {p: float("nan") for p in PERCENTILES}
        argmax = None
    return ErrorReport(
        method=method, metric=metric, convention=convention,
        max_error=pct[100], argmax=argmax, percentiles=pct,
        n_points=len(rows), n_faults=n_faults, rows=rows,
    )


class CalibrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Calibration:
    """Outcome of choosing the error metric from the eq6 figure of 0.0096 %."""

    metric: Metric | None
    values: dict[Metric, float]
    target: float = CALIBRATION_TARGET
    band: float = CALIBRATION_BAND

    @property
    def ok(self) -> bool:
        return self.metric is not None

    def require(self) -> Metric:
        if self.metric is None:
            raise CalibrationError(
                "no unique metric reproduces eq6 max error "
                f"{self.target}% +/- {self.band:.0%}: "
                + ", ".join(f"{m.value}={v:.6g}%" for m, v in self.values.items())
            )
        return self.metric

    def header(self) -> dict:
        return {
            "chosen": None if self.metric is None else self.metric.value,
            "target_percent": self.target,
            "band": self.band,
            "eq6_max_error_percent": {m.value: v for m, v in self.values.items()},
        }


def calibrate_metric(grid: ScanGrid | None = None,
                     reference: np.ndarray | None = None,
                     workers: int | None = None) -> Calibration:
    """Pick the metric whose eq6 max error lies within 25 % of 0.0096 %.

    Exactly one metric must qualify; otherwise the returned calibration has
    ``metric = None`` and carries both measured values.
    """
    grid = grid or ScanGrid()
    u_ref = reference_solution(grid, workers) if reference is None else reference
    u, _ = _evaluate_grid(MethodId.EQ6, grid, Convention.AS_PRINTED, workers)
    lo = CALIBRATION_TARGET * (1 - CALIBRATION_BAND)
    hi = CALIBRATION_TARGET * (1 + CALIBRATION_BAND)
    values = {m: float(np.nanmax(error_percent(u, u_ref, m))) for m in Metric}
    inside = [m for m, v in values.items() if lo < v < hi]
    return Calibration(inside[0] if len(inside) == 1 else None, values)
