"""Evaluation back-ends for the formula kernels.

Every friction formula is written once, as plain arithmetic plus calls to
``ops.log``, ``ops.log10``, ``ops.pow`` and ``ops.sqrt``. The back-end
decides what those calls do:

* :class:`MathOps` works on Python floats and raises :class:`NumericError`
  naming the offending stage.
* :class:`ArrayOps` works on numpy arrays, replaces invalid entries with NaN
  and remembers, per element, the first stage that faulted.
* ``frictionlab.analysis.cost.CountingOps`` tallies operations instead.

Integer powers are never routed through ``ops.pow``; kernels spell them out
as products.
"""

from __future__ import annotations

import math

import numpy as np

from .core import NumericError


class MathOps:
    """Scalar back-end on top of :mod:`math`."""

    @staticmethod
    def _check(z, stage, allow_zero=False):
        ok = z >= 0.0 if allow_zero else z > 0.0
        if not ok:
            raise NumericError(
                f"invalid argument {z!r} at stage {stage!r}", stage=stage
            )

    def log(self, z, stage="log"):
        self._check(z, stage)
        return math.log(z)

    def log10(self, z, stage="log10"):
        self._check(z, stage)
        return math.log10(z)

    def pow(self, z, p, stage="pow"):
        self._check(z, stage, allow_zero=True)
        try:
            return math.pow(z, p)
        except OverflowError:
            raise NumericError(f"overflow at stage {stage!r}", stage=stage) from None

    def sqrt(self, z, stage="sqrt"):
        self._check(z, stage, allow_zero=True)
        return math.sqrt(z)


class ArrayOps:
    """Vectorised back-end; invalid entries become NaN and are recorded."""

    def __init__(self, shape):
        self.shape = tuple(shape)
        self.fault_stage = np.full(self.shape, "", dtype=object)

    @property
    def faulted(self) -> np.ndarray:
        return self.fault_stage != ""

    def _guard(self, z, stage, allow_zero=False):
        z = np.asarray(z, dtype=float)
        bad = ~(z >= 0.0) if allow_zero else ~(z > 0.0)
        if bad.any():
            bad = np.broadcast_to(bad, self.shape)
            fresh = bad & (self.fault_stage == "")
            self.fault_stage[fresh] = stage
            z = np.where(bad, np.nan, z)
        return z

    def log(self, z, stage="log"):
        with np.errstate(all="ignore"):
            return np.log(self._guard(z, stage))

    def log10(self, z, stage="log10"):
        with np.errstate(all="ignore"):
            return np.log10(self._guard(z, stage))

    def pow(self, z, p, stage="pow"):
        with np.errstate(all="ignore"):
            return np.power(self._guard(z, stage, allow_zero=True), p)

    def sqrt(self, z, stage="sqrt"):
        with np.errstate(all="ignore"):
            return np.sqrt(self._guard(z, stage, allow_zero=True))
