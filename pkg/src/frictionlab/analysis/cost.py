"""Operation-count cost model.

Counts are not typed in by hand: each formula kernel is run once on
:class:`Traced` numbers with :class:`CountingOps`, so the tally reflects the
code that actually executes. Integer powers appear as multiplications
because the kernels write them that way.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ..core import InputError, MethodId
from ..literature import Convention
from ..methods import kernel_for

# Relative effort per operation (Winning and Coole).
WEIGHTS = {
    "addition": 1.0,
    "subtraction": 1.18,
    "division": 1.35,
    "multiplication": 1.55,
    "squared": 2.18,
    "square_root": 2.29,
    "cubed": 2.38,
    "natural_log": 2.69,
    "cubed_root": 2.71,
    "fractional_exponential": 3.32,
    "log10": 3.37,
}

_TRACE_POINT = (1e5, 1e-4)


class Traced:
    """A float that records every arithmetic operation applied to it."""

    __slots__ = ("v", "c")

    def __init__(self, value, counter):
        self.v = float(value)
        self.c = counter

    def _wrap(self, value, op):
        self.c[op] += 1
        return Traced(value, self.c)

    @staticmethod
    def _val(other):
        return other.v if isinstance(other, Traced) else other

    def __add__(self, o):
        return self._wrap(self.v + self._val(o), "addition")

    __radd__ = __add__

    def __sub__(self, o):
        return self._wrap(self.v - self._val(o), "subtraction")

    def __rsub__(self, o):
        return self._wrap(self._val(o) - self.v, "subtraction")

    def __mul__(self, o):
        return self._wrap(self.v * self._val(o), "multiplication")

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._val(o)
        return self._wrap(self.v / o if o else math.nan, "division")

    def __rtruediv__(self, o):
        return self._wrap(self._val(o) / self.v if self.v else math.nan, "division")

    def __neg__(self):
        return self._wrap(-self.v, "subtraction")

    def __pow__(self, p):
        op = {2: "squared", 3: "cubed"}.get(p, "fractional_exponential")
        return self._wrap(self.v ** p, op)

    def __float__(self):
        return self.v


class CountingOps:
    """Ops back-end that tallies expensive calls; never raises."""

    def __init__(self, counter):
        self.c = counter

    def _out(self, value, op):
        self.c[op] += 1
        return Traced(value, self.c)

    @staticmethod
    def _v(z):
        return z.v if isinstance(z, Traced) else float(z)

    def log(self, z, stage=None):
        v = self._v(z)
        return self._out(math.log(v) if v > 0 else math.nan, "natural_log")

    def log10(self, z, stage=None):
        v = self._v(z)
        return self._out(math.log10(v) if v > 0 else math.nan, "log10")

    def pow(self, z, p, stage=None):
        v, pv = self._v(z), self._v(p)
        try:
            value = v ** pv if v >= 0 else math.nan
        except OverflowError:
            value = math.inf
        return self._out(value, "fractional_exponential")

    def sqrt(self, z, stage=None):
        v = self._v(z)
        return self._out(math.sqrt(v) if v >= 0 else math.nan, "square_root")


def trace_operations(method: MethodId,
                     convention: Convention = Convention.AS_PRINTED) -> Counter:
    """Count operations executed by one evaluation of ``method``."""
    if method.is_oracle:
        raise InputError(f"{method.cli_name} is iterative; it has no fixed operation count")
    counter = Counter()
    re, eps = (Traced(v, counter) for v in _TRACE_POINT)
    kernel_for(method, convention)(re, eps, CountingOps(counter))
    return counter


@dataclass(frozen=True)
class CostProfile:
    method: MethodId
    counts: dict[str, int]
    weighted_cost: float

    @property
    def log_count(self) -> int:
        return self.counts["natural_log"] + self.counts["log10"]

    @property
    def power_count(self) -> int:
        return self.counts["fractional_exponential"]


def cost_profile(method: MethodId,
                 convention: Convention = Convention.CLASSICAL) -> CostProfile:
    """Per-class operation counts and their Winning-Coole weighted sum."""
    traced = trace_operations(method, convention)
    counts = {k: int(traced.get(k, 0)) for k in WEIGHTS}
    weighted = sum(WEIGHTS[k] * n for k, n in counts.items())
    return CostProfile(method, counts, weighted)
