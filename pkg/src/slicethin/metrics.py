"""Skeleton quality metrics: unit-width convergence, size ratio, iterations.

The size ratio appears in the literature under both s_r and d_r; this
module uses ``s_r``. The unit-width measure is defined for 2D skeletons
only; reports for higher-dimensional patterns carry ``m_t = None`` and
serialize it as ``NA``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .pattern import (
    DimensionError,
    as_pattern,
    component_count,
    foreground_count,
    non_unit_width_pixels,
)

CSV_HEADER = "algorithm,s_r,m_t,n,component_delta,area_input,area_skeleton"


class UndefinedMetricError(ValueError):
    """Metric is undefined for the given input (e.g. empty pattern)."""


@dataclass(frozen=True)
class MetricsReport:
    s_r: float
    m_t: float | None
    n: int
    component_delta: int
    area_input: int
    area_skeleton: int

    def csv_row(self, algorithm: str) -> str:
        mt = "NA" if self.m_t is None else f"{self.m_t:.9g}"
        return (
            f"{algorithm},{self.s_r:.9g},{mt},{self.n},"
            f"{self.component_delta},{self.area_input},{self.area_skeleton}"
        )


def measure_mt(skeleton) -> float:
    """Convergence to unit width: 1 - (2x2-covered pixels / foreground)."""
    arr = as_pattern(skeleton)
    if arr.ndim != 2:
        raise DimensionError("measure_mt is defined for 2D skeletons only")
    area = foreground_count(arr)
    if area == 0:
        raise UndefinedMetricError("measure_mt is undefined for an empty skeleton")
    return 1.0 - len(non_unit_width_pixels(arr)) / area


def size_ratio(input_pattern, skeleton) -> float:
    """Skeleton foreground count over input foreground count."""
    inp = as_pattern(input_pattern)
    sk = as_pattern(skeleton)
    if inp.shape != sk.shape:
        raise ValueError(f"shape mismatch: {inp.shape} vs {sk.shape}")
    area_in = foreground_count(inp)
    if area_in == 0:
        raise UndefinedMetricError("size_ratio is undefined for an empty input")
    return foreground_count(sk) / area_in


def evaluate(input_pattern, skeleton, iterations: int) -> MetricsReport:
    """Assemble the full report for one thinning result.

    Warns when the skeleton is not a subset of the input foreground.
    ``m_t`` is only computed for 2D patterns.
    """
    inp = as_pattern(input_pattern)
    sk = as_pattern(skeleton)
    if inp.shape == sk.shape and np.any(sk & ~inp):
        warnings.warn("skeleton is not a subset of the input foreground", stacklevel=2)
    m_t = measure_mt(sk) if sk.ndim == 2 else None
    return MetricsReport(
        s_r=size_ratio(inp, sk),
        m_t=m_t,
        n=int(iterations),
        component_delta=component_count(sk) - component_count(inp),
        area_input=foreground_count(inp),
        area_skeleton=foreground_count(sk),
    )
