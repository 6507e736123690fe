"""Reproduction of the published W(e^x) table and the accuracy/cost table."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import APPROXIMATIONS, FlowConditions, MethodId
from ..literature import CONVENTION_SENSITIVE, Convention, formula_metadata
from ..oracle import OVERFLOW, OverflowFlag, compute_x, naive_w_exp, series_y, wright_omega
from .grid import ScanGrid
from .scan import Metric, calibrate_metric, reference_solution, scan_errors

TABLE1_REYNOLDS = (4000.0, 1e4, 1e5, 1e6, 1e7, 1e8)

# Published rows: (row label as printed, roughness the values belong to,
# W(e^x) per Reynolds column (None = overflow), y per Reynolds column).
# The printed labels 1e-3, 1e-2, 0.05 do not match their values; the values
# are reproduced to 10 digits by 1e-4, 1e-3, 1e-2.
TABLE1_PUBLISHED = (
    ("1e-6", 1e-6,
     (5.763586714, 6.552354737, 8.594740889, 10.78188015, 13.94025768, 26.71930109),
     (5.766606874, 6.552971455, 8.592338256, 10.7784212, 13.93654591, 26.71669441)),
    ("1e-5", 1e-5,
     (5.767379666, 6.562009418, 8.694474328, 11.80401384, 24.50329461, 125.7849498),
     (5.770385511, 6.562602762, 8.691991603, 11.80037821, 24.50049484, 136.3596559)),
    ("1e-3", 1e-4,
     (5.805329409, 6.658658836, 9.697953496, 22.29514802, 124.0554132, None),
     (5.808193728, 6.659024862, 9.694862641, 22.29214094, 134.073966, 1246.853296)),
    ("1e-2", 1e-3,
     (6.186774452, 7.63459358, 20.09639172, 122.325789, None, None),
     (6.188374207, 7.633218988, 20.093168, 131.7885643, 1244.552558, 12371.62215)),
    ("0.05", 1e-2,
     (10.14320931, 17.90904123, 120.5960672, None, None, None),
     (10.13993873, 17.90560354, 129.5034606, 1242.251823, 12369.31975, 123639.9564)),
)

# W and y columns are considered consistent when they agree within this.
TABLE1_CONSISTENCY = 1e-3


@dataclass(frozen=True)
class Table1Cell:
    reynolds: float
    relative_roughness: float
    printed_label: str
    x: float
    naive_w: float | OverflowFlag
    omega: float
    y: float
    published_w: float | None
    published_y: float

    @property
    def overflow(self) -> bool:
        return self.naive_w is OVERFLOW

    @property
    def published_consistent(self) -> bool:
        """Published W and y agree within 0.1 %."""
        if self.published_w is None:
            return False
        return abs(self.published_w - self.published_y) / self.published_y < TABLE1_CONSISTENCY


def reproduce_table1() -> list[Table1Cell]:
    """The 30 cells of the W(e^x) table, row by row."""
    cells = []
    for label, eps, pub_w, pub_y in TABLE1_PUBLISHED:
        for re, w_pub, y_pub in zip(TABLE1_REYNOLDS, pub_w, pub_y):
            x = compute_x(FlowConditions(re, eps))
            cells.append(Table1Cell(
                reynolds=re, relative_roughness=eps, printed_label=label, x=x,
                naive_w=naive_w_exp(x), omega=wright_omega(x), y=series_y(x),
                published_w=w_pub, published_y=y_pub,
            ))
    return cells


def significant_digits_match(a: float, b: float, digits: int) -> bool:
    """True when ``a`` and ``b`` agree after rounding to ``digits`` significant digits."""
    return f"{a:.{digits - 1}e}" == f"{b:.{digits - 1}e}"


# Acceptance bands on the measured max error (percent), open intervals
# unless noted. eq4 is judged relative to eq3 and handled separately.
OWN_BANDS = {
    MethodId.EQ6: (0.004, 0.011),
    MethodId.EQ5: (0.02, 0.05),
    MethodId.EQ3: (0.05, 0.14),
}
ONELOG_LIMIT = 0.42
EQ4_REL_TOL = 0.10
LITERATURE_SLACK = 1.2
VATANKHAH_LIMIT = 0.0035
MAX_FAULT_FRACTION = 1e-3


@dataclass(frozen=True)
class Table2Row:
    method: MethodId
    convention: Convention
    measured_max_percent: float
    quoted_max_percent: float
    log_count: int
    power_count: int
    total: int
    total_clamond: int
    n_faults: int
    fault_fraction: float
    band: tuple[float, float]
    passed: bool

    @property
    def name(self) -> str:
        if self.method in CONVENTION_SENSITIVE:
            return f"{self.method.cli_name}@{self.convention.value}"
        return self.method.cli_name


@dataclass(frozen=True)
class Table2:
    metric: Metric
    calibration: object
    grid: ScanGrid
    rows: list[Table2Row]

    def rows_for(self, method: MethodId) -> list[Table2Row]:
        return [r for r in self.rows if r.method is method]

    def method_passes(self, method: MethodId) -> bool:
        return any(r.passed for r in self.rows_for(method))


def _band(method, eq3_max):
    meta = formula_metadata(method)
    if method in OWN_BANDS:
        return OWN_BANDS[method]
    if method is MethodId.EQ4:
        return (eq3_max * (1 - EQ4_REL_TOL), eq3_max * (1 + EQ4_REL_TOL))
    if method is MethodId.EQ3_ONELOG:
        return (0.0, ONELOG_LIMIT)
    if method is MethodId.VATANKHAH:
        return (0.0, min(VATANKHAH_LIMIT, meta.quoted_max_error * LITERATURE_SLACK))
    return (0.0, meta.quoted_max_error * LITERATURE_SLACK)


def _in_band(value, band, method):
    lo, hi = band
    if not np.isfinite(value):
        return False
    if method in OWN_BANDS or method is MethodId.EQ4:
        return lo < value < hi
    return value <= hi


# Row order follows the published table.
TABLE2_ORDER = (
    MethodId.VATANKHAH, MethodId.EQ6, MethodId.EQ5, MethodId.EQ3, MethodId.EQ4,
    MethodId.BUZZELLI, MethodId.ZIGRANG_SYLVESTER, MethodId.SERGHIDES,
    MethodId.ROMEO, MethodId.VATANKHAH_KOUCHAKZADEH, MethodId.BARR,
    MethodId.SERGHIDES_SIMPLE, MethodId.CHEN, MethodId.EQ3_ONELOG,
    MethodId.FANG, MethodId.PAPAEVANGELOU,
)
assert set(TABLE2_ORDER) == set(APPROXIMATIONS)


def reproduce_table2(grid: ScanGrid | None = None, metric: Metric | None = None,
                     workers: int | None = None) -> Table2:
    """Measured vs published max error and function counts for every method.

    The metric defaults to the calibrated one. Convention-sensitive
    literature formulas get one row per transcription; a method passes when
    any of its rows does.
    """
    grid = grid or ScanGrid()
    u_ref = reference_solution(grid, workers)
    calibration = calibrate_metric(grid, reference=u_ref, workers=workers)
    if metric is None:
        metric = calibration.require()

    reports = {}
    for method in TABLE2_ORDER:
        convs = (list(Convention) if method in CONVENTION_SENSITIVE
                 else [Convention.AS_PRINTED])
        for conv in convs:
            reports[method, conv] = scan_errors(method, grid, metric, conv,
                                                reference=u_ref, workers=workers)
    eq3_max = reports[MethodId.EQ3, Convention.AS_PRINTED].max_error

    rows = []
    for (method, conv), rep in reports.items():
        meta = formula_metadata(method)
        band = _band(method, eq3_max)
        passed = (_in_band(rep.max_error, band, method)
                  and rep.fault_fraction <= MAX_FAULT_FRACTION)
        rows.append(Table2Row(
            method=method, convention=conv,
            measured_max_percent=rep.max_error,
            quoted_max_percent=meta.quoted_max_error,
            log_count=meta.log_count, power_count=meta.noninteger_power_count,
            total=meta.total_expensive, total_clamond=meta.total_expensive_clamond,
            n_faults=rep.n_faults, fault_fraction=rep.fault_fraction,
            band=band, passed=passed,
        ))
    return Table2(metric=metric, calibration=calibration, grid=grid, rows=rows)
