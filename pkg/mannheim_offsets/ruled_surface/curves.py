"""
Parametric curves with first and second derivatives.

Every callable takes a parameter array of shape (n,) (or a scalar) and
returns points of shape (n, 3) (or (3,)).
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import solve_ivp

from mannheim_offsets.lorentz3 import E2, E3, causal_signs, cross, inner
from mannheim_offsets.shared.errors import NullDirectionError
from mannheim_offsets.shared.numerics import five_point_derivative, probe_points

logger = logging.getLogger(__name__)

CurveFn = Callable[[ArrayLike], NDArray[np.float64]]


def stack3(x1: ArrayLike, x2: ArrayLike, x3: ArrayLike) -> NDArray[np.float64]:
    """Stack three coordinate expressions, broadcasting constants to the parameter shape."""
    a, b, c = np.broadcast_arrays(
        np.asarray(x1, dtype=float), np.asarray(x2, dtype=float), np.asarray(x3, dtype=float)
    )
    return np.stack([a, b, c], axis=-1)


@dataclass(frozen=True)
class ParamCurve:
    """A twice differentiable curve; ``period`` is None for open curves."""

    value: CurveFn
    d1: CurveFn
    d2: CurveFn
    period: float | None = None

    @property
    def closed(self) -> bool:
        return self.period is not None

    @classmethod
    def from_values(cls, value: CurveFn, period: float | None = None) -> "ParamCurve":
        """Finite-difference adapter for curves given only by value."""

        def d1(s: ArrayLike) -> NDArray[np.float64]:
            return five_point_derivative(value, s)

        def d2(s: ArrayLike) -> NDArray[np.float64]:
            return five_point_derivative(d1, s)

        return cls(value, d1, d2, period)

    @classmethod
    def with_numeric_d2(cls, value: CurveFn, d1: CurveFn, period: float | None = None) -> "ParamCurve":
        """Analytic first derivative, stencil second derivative."""

        def d2(s: ArrayLike) -> NDArray[np.float64]:
            return five_point_derivative(d1, s)

        return cls(value, d1, d2, period)

    @classmethod
    def constant(cls, point: ArrayLike, period: float | None = None) -> "ParamCurve":
        p = np.asarray(point, dtype=float)

        def value(s: ArrayLike) -> NDArray[np.float64]:
            return np.broadcast_to(p, np.shape(s) + (3,)).copy()

        def zero(s: ArrayLike) -> NDArray[np.float64]:
            return np.zeros(np.shape(s) + (3,))

        return cls(value, zero, zero, period)

    def reversed(self) -> "ParamCurve":
        """The curve traversed backwards: s ↦ −s."""
        return ParamCurve(
            lambda s: self.value(-np.asarray(s, dtype=float)),
            lambda s: -self.d1(-np.asarray(s, dtype=float)),
            lambda s: self.d2(-np.asarray(s, dtype=float)),
            self.period,
        )

    def closure_residual(self, start: float = 0.0) -> float:
        """max ‖value(s + T) − value(s)‖ over 16 probes."""
        if self.period is None:
            return float("inf")
        s = probe_points((start, start + self.period), closed=True, count=16)
        return float(np.max(np.abs(self.value(s + self.period) - self.value(s))))

    def derivative_residual(self, span: tuple[float, float], step: float = 1e-5) -> float:
        """Largest relative disagreement of d1/d2 with central differences."""
        s = probe_points(span, closed=self.closed, count=16)
        fd1 = (self.value(s + step) - self.value(s - step)) / (2 * step)
        fd2 = (self.d1(s + step) - self.d1(s - step)) / (2 * step)
        scale1 = max(1.0, float(np.max(np.abs(fd1))))
        scale2 = max(1.0, float(np.max(np.abs(fd2))))
        return max(
            float(np.max(np.abs(self.d1(s) - fd1))) / scale1,
            float(np.max(np.abs(self.d2(s) - fd2))) / scale2,
        )


def normalize(curve: ParamCurve) -> ParamCurve:
    """
    Lorentz-unit reparametrisation of a direction curve, q̂ = q/√(ε⟨q,q⟩).

    The causal character is taken per sample and must not be null.

    Raises:
        NullDirectionError: if the curve is null at the evaluated parameters
    """

    def parts(
        s: ArrayLike,
    ) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
        q, dq = curve.value(s), curve.d1(s)
        eps = causal_signs(q)
        if np.any(eps == 0) or np.any(np.linalg.norm(q, axis=-1) == 0):
            raise NullDirectionError("ruling direction is null or zero")
        m = eps * inner(q, q)
        dm = 2.0 * eps * inner(q, dq)
        return q, dq, m, dm

    def value(s: ArrayLike) -> NDArray[np.float64]:
        q, _, m, _ = parts(s)
        return q * (m**-0.5)[..., np.newaxis]

    def d1(s: ArrayLike) -> NDArray[np.float64]:
        q, dq, m, dm = parts(s)
        g = m**-0.5
        dg = -0.5 * m**-1.5 * dm
        return dq * g[..., np.newaxis] + q * dg[..., np.newaxis]

    def d2(s: ArrayLike) -> NDArray[np.float64]:
        q, dq, m, dm = parts(s)
        d2q = curve.d2(s)
        eps = causal_signs(q)
        d2m = 2.0 * eps * (inner(dq, dq) + inner(q, d2q))
        g = m**-0.5
        dg = -0.5 * m**-1.5 * dm
        d2g = 0.75 * m**-2.5 * dm**2 - 0.5 * m**-1.5 * d2m
        return (
            d2q * g[..., np.newaxis]
            + 2.0 * dq * dg[..., np.newaxis]
            + q * d2g[..., np.newaxis]
        )

    return ParamCurve(value, d1, d2, curve.period)


# =============================================================================
# Frenet-ODE curves
# =============================================================================


@dataclass(frozen=True)
class FrenetCurve:
    """A curve integrated from prescribed curvature and torsion, with its unit tangent."""

    base: ParamCurve
    tangent: ParamCurve
    span: tuple[float, float]


def frenet_curve(
    curvature: Callable[[ArrayLike], ArrayLike],
    torsion: Callable[[ArrayLike], ArrayLike],
    span: tuple[float, float],
    pad: float = 0.05,
) -> FrenetCurve:
    """
    Integrate α′ = T, T′ = κN, N′ = −κT + τB, B′ = τN from α = 0, T = e₂, N = e₃, B = e₁
    at s = span[0].

    This is the Frenet system of a spacelike curve with spacelike principal
    normal (timelike binormal B = T × N). The tangent developable of the
    result is an M1Plus surface with frame (T, N, B), k₁ = κ and k₂ = τ.

    Args:
        curvature: κ(s) > 0
        torsion: τ(s)
        span: parameter interval of interest
        pad: extra integration margin on both sides for stencil evaluations

    Returns:
        FrenetCurve with dense-output evaluators
    """
    start, stop = span[0] - pad, span[1] + pad
    anchor = float(span[0])

    def rhs(s: float, y: NDArray[np.float64]) -> NDArray[np.float64]:
        t, n, b = y[3:6], y[6:9], y[9:12]
        k = float(np.asarray(curvature(s)))
        w = float(np.asarray(torsion(s)))
        return np.concatenate([t, k * n, -k * t + w * b, w * n])

    # initial frame sits at span[0]; integrate forward to stop and backward to start
    y0 = np.concatenate([np.zeros(3), E2, E3, cross(E2, E3)])
    forward = solve_ivp(
        rhs, (anchor, stop), y0, method="DOP853", rtol=1e-12, atol=1e-12, dense_output=True
    )
    backward = solve_ivp(
        rhs, (anchor, start), y0, method="DOP853", rtol=1e-12, atol=1e-12, dense_output=True
    )
    logger.debug(
        f"Frenet integration on [{start}, {stop}] from {anchor}: "
        f"{forward.nfev + backward.nfev} evaluations"
    )

    def state(s: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(s, dtype=float)
        flat = x.ravel()
        ahead = flat >= anchor
        out = np.empty((flat.size, 12))
        if np.any(ahead):
            out[ahead] = forward.sol(flat[ahead]).T
        if not np.all(ahead):
            out[~ahead] = backward.sol(flat[~ahead]).T
        return out.reshape(x.shape + (12,))

    def position(s: ArrayLike) -> NDArray[np.float64]:
        return state(s)[..., 0:3]

    def unit_tangent(s: ArrayLike) -> NDArray[np.float64]:
        return state(s)[..., 3:6]

    def tangent_d1(s: ArrayLike) -> NDArray[np.float64]:
        k = np.asarray(curvature(s), dtype=float)
        return k[..., np.newaxis] * state(s)[..., 6:9]

    def tangent_d2(s: ArrayLike) -> NDArray[np.float64]:
        y = state(s)
        k = np.asarray(curvature(s), dtype=float)[..., np.newaxis]
        w = np.asarray(torsion(s), dtype=float)[..., np.newaxis]
        dk = five_point_derivative(lambda x: np.asarray(curvature(x), dtype=float), s)
        dk = np.asarray(dk)[..., np.newaxis]
        t, n, b = y[..., 3:6], y[..., 6:9], y[..., 9:12]
        return dk * n + k * (-k * t + w * b)

    base = ParamCurve(position, unit_tangent, tangent_d1, None)
    tangent = ParamCurve(unit_tangent, tangent_d1, tangent_d2, None)
    return FrenetCurve(base=base, tangent=tangent, span=span)
