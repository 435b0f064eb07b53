"""
Numerical helpers shared by the geometry modules.

Quadrature over one period uses composite Simpson on uniform nodes;
derivatives of curves known only by value use five-point central stencils.
"""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import cumulative_simpson
from scipy.integrate import simpson as _simpson

from mannheim_offsets.shared import config

FloatArray = NDArray[np.float64]


def closed_nodes(start: float, period: float, intervals: int | None = None) -> FloatArray:
    """
    Uniform nodes covering one closed period, both endpoints included.

    Args:
        start: first parameter value
        period: period length
        intervals: number of Simpson intervals (even); defaults to config

    Returns:
        array of ``intervals + 1`` parameter values
    """
    n = intervals or config.QUADRATURE_NODES
    if n % 2:
        n += 1
    return np.linspace(start, start + period, n + 1)


def simpson(values: ArrayLike, s: FloatArray) -> FloatArray:
    """Composite Simpson over axis 0 (samples), any trailing shape."""
    return np.asarray(_simpson(np.asarray(values, dtype=float), x=s, axis=0))


def cumulative(values: ArrayLike, s: FloatArray) -> FloatArray:
    """Running Simpson integral along axis 0, starting at zero."""
    return np.asarray(cumulative_simpson(np.asarray(values, dtype=float), x=s, axis=0, initial=0.0))


def five_point_derivative(
    fn: Callable[[FloatArray], FloatArray], s: ArrayLike, step: float | None = None
) -> FloatArray:
    """
    Central five-point derivative of a vectorised callable.

    ``fn`` maps an array of parameters of shape (n,) to values of shape (n, ...).
    """
    h = step or config.FD_STEP
    x = np.asarray(s, dtype=float)
    return (-fn(x + 2 * h) + 8 * fn(x + h) - 8 * fn(x - h) + fn(x - 2 * h)) / (12 * h)


def probe_points(span: tuple[float, float], closed: bool, count: int | None = None) -> FloatArray:
    """
    Probe parameters for pointwise checks.

    Closed spans exclude the right endpoint (it repeats the left one).
    """
    n = count or config.PROBE_POINTS
    return np.linspace(span[0], span[1], n, endpoint=not closed)
