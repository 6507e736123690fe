"""Accuracy scans, table reproduction, cost model and benchmarks."""

from .bench import BenchReport, benchmark
from .cost import WEIGHTS, CostProfile, cost_profile, trace_operations
from .grid import ScanGrid
from .scan import (
    Calibration,
    CalibrationError,
    ErrorReport,
    Metric,
    calibrate_metric,
    reference_solution,
    scan_errors,
)
from .tables import Table1Cell, Table2, Table2Row, reproduce_table1, reproduce_table2

__all__ = [
    "BenchReport", "Calibration", "CalibrationError", "CostProfile",
    "ErrorReport", "Metric", "ScanGrid", "Table1Cell", "Table2", "Table2Row",
    "WEIGHTS", "benchmark", "calibrate_metric", "cost_profile",
    "reference_solution", "reproduce_table1", "reproduce_table2", "scan_errors",
    "trace_operations",
]
