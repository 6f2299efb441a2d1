"""
Descriptive statistics for attempt samples.

Skewness and kurtosis use the biased (population) central-moment forms,
kurtosis in the excess convention.  Percentiles interpolate linearly
between order statistics.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np
from scipy import stats as sps

from lv_queens.data.models import Histogram, SampleStats

LOWER_PERCENTILE = 2.5
UPPER_PERCENTILE = 97.5


class DegenerateSampleError(ValueError):
    """Raised when a sample is too small or constant for the requested statistic."""


def _as_array(samples: Sequence[float] | np.ndarray) -> np.ndarray:
    return np.asarray(samples, dtype=float).reshape(-1)


def describe(samples: Sequence[float] | np.ndarray) -> SampleStats:
    """Mean, median, mode, skewness, excess kurtosis and the central 95% interval.

    Raises:
        DegenerateSampleError: for fewer than two values or zero variance.
    """
    arr = _as_array(samples)
    if arr.size < 2:
        raise DegenerateSampleError(f"need at least 2 samples, got {arr.size}")
    if np.all(arr == arr[0]):
        raise DegenerateSampleError("constant sample: skewness and kurtosis are undefined")

    values, counts = np.unique(arr, return_counts=True)
    # np.unique sorts, and argmax keeps the first maximum: smallest mode wins ties.
    mode = float(values[int(np.argmax(counts))])
    lower, upper = np.percentile(arr, [LOWER_PERCENTILE, UPPER_PERCENTILE])

    return SampleStats(
        count=int(arr.size),
        mean=float(np.mean(arr)),
        median=float(np.median(arr)),
        mode=mode,
        skewness=float(sps.skew(arr, bias=True)),
        kurtosis=float(sps.kurtosis(arr, fisher=True, bias=True)),
        lower=float(lower),
        upper=float(upper),
    )


def histogram(samples: Sequence[float] | np.ndarray, bin_count: int) -> Histogram:
    """Equal-width bins over [min, max]; the last bin includes max.

    A constant sample yields a single bin of width 1 centred on the value.
    """
    if bin_count < 1:
        raise ValueError(f"bin_count must be at least 1, got {bin_count}")
    arr = _as_array(samples)
    if arr.size == 0:
        raise DegenerateSampleError("cannot bin an empty sample")

    lo = float(arr.min())
    hi = float(arr.max())
    if lo == hi:
        return Histogram(bin_edges=[lo - 0.5, lo + 0.5], counts=[int(arr.size)])

    counts, edges = np.histogram(arr, bins=bin_count, range=(lo, hi))
    return Histogram(bin_edges=[float(e) for e in edges], counts=[int(c) for c in counts])


def ks_statistic(samples: Sequence[float] | np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Kolmogorov-Smirnov sup-distance between the sample and *cdf*.

    *cdf* must accept a numpy array.  Only the statistic is returned;
    p-values are not used for model selection.
    """
    arr = _as_array(samples)
    if arr.size == 0:
        raise DegenerateSampleError("KS statistic of an empty sample")
    return float(sps.kstest(arr, cdf).statistic)
