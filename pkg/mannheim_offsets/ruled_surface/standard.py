"""
標準曲面

解析的な微分を持つ線織面の組み立て関数。検証・CLI カタログ・テストで共有する。
"""

import logging
import math
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.ruled_surface.curves import CurveFn, ParamCurve, frenet_curve, stack3
from mannheim_offsets.ruled_surface.surface import RuledSurface
from mannheim_offsets.shared.errors import DomainError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def _s(x: ArrayLike) -> NDArray[np.float64]:
    return np.asarray(x, dtype=float)


def _circle(radius: float = 1.0) -> ParamCurve:
    """(0, r cos s, r sin s)"""
    return ParamCurve(
        lambda s: stack3(0.0, radius * np.cos(_s(s)), radius * np.sin(_s(s))),
        lambda s: stack3(0.0, -radius * np.sin(_s(s)), radius * np.cos(_s(s))),
        lambda s: stack3(0.0, -radius * np.cos(_s(s)), -radius * np.sin(_s(s))),
        TWO_PI,
    )


def _tilted_ruling(c: float) -> ParamCurve:
    """(c, −sin s, cos s)"""
    return ParamCurve(
        lambda s: stack3(c, -np.sin(_s(s)), np.cos(_s(s))),
        lambda s: stack3(0.0, -np.cos(_s(s)), -np.sin(_s(s))),
        lambda s: stack3(0.0, np.sin(_s(s)), -np.cos(_s(s))),
        TWO_PI,
    )


def hyperboloid(c: float = 0.5, radius: float = 1.0) -> RuledSurface:
    """
    k(s) = (0, r cos s, r sin s), q(s) = (c, −sin s, cos s).

    A timelike ruled surface with spacelike rulings (type M1Plus) for |c| < 1.
    r = 1 is the reference example of the Mannheim offset catalog.

    Raises:
        DomainError: |c| ≥ 1 (the ruling would not be spacelike)
    """
    if abs(c) >= 1.0:
        raise DomainError(f"hyperboloid needs |c| < 1 for a spacelike ruling, got c={c}")
    return RuledSurface.from_curves(_circle(radius), _tilted_ruling(c), name=f"hyperboloid(c={c:g})")


def circular_cone(c: float = 0.5) -> RuledSurface:
    """Cone with fixed vertex at the origin and ruling (c, −sin s, cos s)."""
    if abs(abs(c) - 1.0) < 1e-12:
        raise DomainError("c = ±1 gives a null ruling")
    return RuledSurface.from_curves(
        ParamCurve.constant((0.0, 0.0, 0.0), TWO_PI), _tilted_ruling(c), name=f"cone(c={c:g})"
    )


def circular_cylinder(radius: float = 1.0) -> RuledSurface:
    """Timelike-ruled cylinder over the unit circle; every point is cylindrical."""
    return RuledSurface.from_curves(
        _circle(radius), ParamCurve.constant((1.0, 0.0, 0.0), TWO_PI), name="cylinder"
    )


def timelike_ruling_surface(c: float = 2.0) -> RuledSurface:
    """
    k(s) = (0, cos s, sin s), q(s) = (c, cos s, sin s) with |c| > 1.

    Timelike ruling with spacelike central normal (type M1Minus).
    """
    if abs(c) <= 1.0:
        raise DomainError(f"timelike ruling needs |c| > 1, got c={c}")
    ruling = ParamCurve(
        lambda s: stack3(c, np.cos(_s(s)), np.sin(_s(s))),
        lambda s: stack3(0.0, -np.sin(_s(s)), np.cos(_s(s))),
        lambda s: stack3(0.0, -np.cos(_s(s)), -np.sin(_s(s))),
        TWO_PI,
    )
    return RuledSurface.from_curves(_circle(), ruling, name=f"timelike ruling(c={c:g})")


def helicoid(pitch: float = 1.0, span: tuple[float, float] = (0.0, TWO_PI)) -> RuledSurface:
    """k(s) = (p s, 0, 0), q(s) = (0, cos s, sin s); open surface."""
    base = ParamCurve(
        lambda s: stack3(pitch * _s(s), 0.0, 0.0),
        lambda s: stack3(pitch, 0.0, 0.0),
        lambda s: stack3(0.0, 0.0, 0.0),
    )
    ruling = ParamCurve(
        lambda s: stack3(0.0, np.cos(_s(s)), np.sin(_s(s))),
        lambda s: stack3(0.0, -np.sin(_s(s)), np.cos(_s(s))),
        lambda s: stack3(0.0, -np.cos(_s(s)), -np.sin(_s(s))),
    )
    return RuledSurface.from_curves(base, ruling, name="helicoid", span=span)


def tangent_surface(
    base: ParamCurve,
    third: CurveFn | None = None,
    span: tuple[float, float] | None = None,
    name: str = "tangent surface",
) -> RuledSurface:
    """
    Tangent developable of a base curve: ruling q = k′.

    Args:
        base: curve with analytic d1 and d2
        third: k‴, replaced by a stencil derivative of d2 when omitted
        span: parameter interval (required for open curves)
        name: label
    """
    if third is None:
        ruling = ParamCurve.with_numeric_d2(base.d1, base.d2, base.period)
    else:
        ruling = ParamCurve(base.d1, base.d2, third, base.period)
    return RuledSurface.from_curves(base, ruling, name=name, span=span)


def tangent_developable(p: float = 0.1) -> RuledSurface:
    """
    Closed tangent developable of α(t) = (p sin 2t, cos t, sin t).

    The tangent α′ is spacelike for |p| < 1/2.
    """
    if abs(p) >= 0.5:
        raise DomainError(f"tangent developable needs |p| < 1/2, got p={p}")
    base = ParamCurve(
        lambda t: stack3(p * np.sin(2 * _s(t)), np.cos(_s(t)), np.sin(_s(t))),
        lambda t: stack3(2 * p * np.cos(2 * _s(t)), -np.sin(_s(t)), np.cos(_s(t))),
        lambda t: stack3(-4 * p * np.sin(2 * _s(t)), -np.cos(_s(t)), -np.sin(_s(t))),
        TWO_PI,
    )

    def third(t: ArrayLike) -> NDArray[np.float64]:
        return stack3(-8 * p * np.cos(2 * _s(t)), np.sin(_s(t)), -np.cos(_s(t)))

    return tangent_surface(base, third, name=f"tangent developable(p={p:g})")


def frenet_developable(
    curvature: Callable[[ArrayLike], ArrayLike],
    torsion: Callable[[ArrayLike], ArrayLike],
    span: tuple[float, float],
) -> RuledSurface:
    """Tangent developable of the curve integrated from κ(s), τ(s) (open, M1Plus)."""
    curve = frenet_curve(curvature, torsion, span)
    return RuledSurface.from_curves(curve.base, curve.tangent, name="frenet developable", span=span)
