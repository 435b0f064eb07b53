"""
Offset angle profiles θ̄(s) = θ(s) + εθ*(s).

An offset may use a constant dual angle, an affine one, arbitrary callables
or the profile θ̄(s) = θ̄₀ − ∫k̄₁ ds that makes the pair a Mannheim offset.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.interpolate import CubicSpline

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz import DualAngle
from mannheim_offsets.ruled_surface import RuledSurface, frame_data
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import NotClosedError
from mannheim_offsets.shared.numerics import closed_nodes, cumulative, simpson

logger = logging.getLogger(__name__)

AngleFn = Callable[[ArrayLike], DualScalar]

# tolerance for treating θ̄ as 0 or π/2 in the special cases
SPECIAL_ANGLE_TOLERANCE = 1e-9


def _full(s: ArrayLike, x: float) -> float | np.ndarray:
    return np.full(np.shape(s), x) if np.ndim(s) else x


@dataclass(frozen=True)
class OffsetAngle:
    """A dual offset angle as a function of the base parameter, with its s-derivative."""

    value_fn: AngleFn
    rate_fn: AngleFn
    is_constant: bool = False
    label: str = ""

    def __call__(self, s: ArrayLike) -> DualScalar:
        return self.value_fn(s)

    def rate(self, s: ArrayLike) -> DualScalar:
        return self.rate_fn(s)

    @classmethod
    def constant(cls, theta: float, theta_star: float = 0.0) -> "OffsetAngle":
        """θ̄ = θ + εθ* everywhere."""

        def value(s: ArrayLike) -> DualScalar:
            return DualScalar(_full(s, theta), _full(s, theta_star))

        def rate(s: ArrayLike) -> DualScalar:
            return DualScalar(_full(s, 0.0), _full(s, 0.0))

        return cls(value, rate, True, f"{theta:.15g}+ε{theta_star:.15g}")

    @classmethod
    def linear(
        cls,
        theta: float,
        theta_star: float,
        theta_slope: float = 0.0,
        theta_star_slope: float = 0.0,
    ) -> "OffsetAngle":
        """θ̄(s) = (θ + θ′s) + ε(θ* + θ*′s)"""
        if theta_slope == 0.0 and theta_star_slope == 0.0:
            return cls.constant(theta, theta_star)

        def value(s: ArrayLike) -> DualScalar:
            x = np.asarray(s, dtype=float)
            return DualScalar(theta + theta_slope * x, theta_star + theta_star_slope * x)

        def rate(s: ArrayLike) -> DualScalar:
            return DualScalar(_full(s, theta_slope), _full(s, theta_star_slope))

        return cls(value, rate, False, f"({theta:.15g}+{theta_slope:.15g}s)+ε({theta_star:.15g}+{theta_star_slope:.15g}s)")

    @classmethod
    def from_functions(cls, value: AngleFn, rate: AngleFn, label: str = "") -> "OffsetAngle":
        return cls(value, rate, False, label)

    @classmethod
    def from_dual_angle(cls, angle: DualAngle) -> "OffsetAngle":
        return cls.constant(angle.theta, angle.theta_star)

    def is_special(self, s: float, theta: float) -> bool:
        """θ(s) equals ``theta`` within the special-angle tolerance."""
        return abs(float(self(s).real) - theta) < SPECIAL_ANGLE_TOLERANCE

    def is_periodic(self, start: float, period: float) -> bool:
        """θ̄(start + T) = θ̄(start) (real part modulo 2π)."""
        if self.is_constant:
            return True
        a, b = self(start), self(start + period)
        turn = float(b.real - a.real) / (2.0 * math.pi)
        return (
            abs(turn - round(turn)) * 2.0 * math.pi < SPECIAL_ANGLE_TOLERANCE
            and abs(float(b.dual - a.dual)) < SPECIAL_ANGLE_TOLERANCE
        )


def offset_angle_from_curvature(
    base: RuledSurface,
    theta0: float = 0.0,
    theta_star0: float = 0.0,
    intervals: int | None = None,
) -> OffsetAngle:
    """
    θ̄(s) = θ̄₀ − ∫ₛ₀ˢ k̄₁ dσ over the base span.

    The integral is tabulated with cumulative Simpson and interpolated by a
    cubic spline; the rate is the exact −k̄₁(s).
    """
    n = intervals or config.QUADRATURE_NODES
    s = np.linspace(base.span[0], base.span[1], n + 1)
    data = frame_data(base, s)
    real_spline = CubicSpline(s, cumulative(data.k1, s))
    dual_spline = CubicSpline(s, cumulative(data.k1_dual, s))
    logger.debug(f"offset angle table on {n} intervals over {base.span}")

    def value(x: ArrayLike) -> DualScalar:
        arr = np.asarray(x, dtype=float)
        return DualScalar(theta0 - real_spline(arr), theta_star0 - dual_spline(arr))

    def rate(x: ArrayLike) -> DualScalar:
        d = frame_data(base, x)
        return DualScalar(-d.k1, -d.k1_dual)

    return OffsetAngle(value, rate, False, f"{theta0:.15g}+ε{theta_star0:.15g} − ∫k̄₁")


def total_offset_angle(base: RuledSurface, nodes: int | None = None) -> DualScalar:
    """
    −∮k̄₁ ds over one period.

    Raises:
        NotClosedError: the base is not closed
    """
    if base.period is None:
        raise NotClosedError("the closed-motion offset angle needs a closed base")
    s = closed_nodes(base.span[0], base.period, nodes)
    data = frame_data(base, s)
    return DualScalar(-float(simpson(data.k1, s)), -float(simpson(data.k1_dual, s)))


def as_offset_angle(angle: "OffsetAngle | DualAngle | DualScalar | tuple[float, float]") -> OffsetAngle:
    """Promote the accepted angle forms to an OffsetAngle."""
    if isinstance(angle, OffsetAngle):
        return angle
    if isinstance(angle, DualAngle):
        return OffsetAngle.from_dual_angle(angle)
    if isinstance(angle, DualScalar):
        return OffsetAngle.constant(float(angle.real), float(angle.dual))
    theta, theta_star = angle
    return OffsetAngle.constant(float(theta), float(theta_star))
