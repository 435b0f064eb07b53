"""
Mannheim offset construction.

The offset generator is the line q̃₁ = cos θ̄ q̃ + sin θ̄ h̃ of the rotated
dual frame

    q̃₁ = cos θ̄ q̃ + sin θ̄ h̃,  h̃₁ = ã,  ã₁ = sin θ̄ q̃ − cos θ̄ h̃.

Its real part is the ruling q₁ = cos θ q + sin θ h through the translated
striction point β = α − θ* a, which carries the moment of q̃₁.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.dual_core import DualScalar, cos, sin
from mannheim_offsets.dual_lorentz import dinner, scale
from mannheim_offsets.mannheim.angle import OffsetAngle, as_offset_angle, offset_angle_from_curvature
from mannheim_offsets.ruled_surface import DualFrame, ParamCurve, RuledSurface, frame_data
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import NotOrthonormalError, WrongTypeError
from mannheim_offsets.shared.models import SurfaceType

logger = logging.getLogger(__name__)

# θ̄′ + k̄₁ がこれ未満なら Mannheim オフセット
MANNHEIM_TOLERANCE = 1e-8


def _col(x: ArrayLike) -> NDArray[np.float64]:
    return np.asarray(x, dtype=float)[..., np.newaxis]


@dataclass(frozen=True, eq=False)
class MannheimPair:
    """Base surface, constructed offset and the offset angle profile."""

    base_surface: RuledSurface
    offset_surface: RuledSurface
    offset_angle: OffsetAngle

    @classmethod
    def build(
        cls, base: RuledSurface, angle: "OffsetAngle | DualScalar | tuple[float, float]"
    ) -> "MannheimPair":
        profile = as_offset_angle(angle)
        return cls(base, offset_surface(base, profile), profile)

    @classmethod
    def from_curvature(
        cls,
        base: RuledSurface,
        theta0: float = 0.0,
        theta_star0: float = 0.0,
        intervals: int | None = None,
    ) -> "MannheimPair":
        """The Mannheim offset θ̄(s) = θ̄₀ − ∫k̄₁ ds."""
        return cls.build(base, offset_angle_from_curvature(base, theta0, theta_star0, intervals))

    def probes(self, count: int | None = None) -> NDArray[np.float64]:
        return self.base_surface.probes(count)

    @cached_property
    def is_mannheim(self) -> bool:
        """
        θ̄′ = −k̄₁ at the probes, i.e. the offset's central normal line is ã.

        Rotating the frame by a constant θ̄ gives a Mannheim offset only where
        k̄₁ vanishes.
        """
        residual = normal_orthogonality_residual(self)
        if residual >= MANNHEIM_TOLERANCE:
            logger.warning(
                f"{self.offset_surface.name} is a rotated-frame offset, not a Mannheim offset: "
                f"max |θ̄′ + k̄₁| = {residual:.3e}"
            )
        return residual < MANNHEIM_TOLERANCE


def _check_orthonormal(frame: DualFrame) -> None:
    tol = config.UNIT_TOLERANCE
    q, h, a = frame.as_tuple()
    for name, x, y, expected in (
        ("⟨q̃,q̃⟩", q, q, None),
        ("⟨h̃,h̃⟩", h, h, None),
        ("⟨ã,ã⟩", a, a, None),
        ("⟨q̃,h̃⟩", q, h, 0.0),
        ("⟨q̃,ã⟩", q, a, 0.0),
        ("⟨h̃,ã⟩", h, a, 0.0),
    ):
        g = dinner(x, y)
        real = np.abs(np.asarray(g.real)) - 1.0 if expected is None else np.asarray(g.real)
        if np.any(np.abs(real) > tol) or np.any(np.abs(np.asarray(g.dual)) > tol):
            raise NotOrthonormalError(f"dual frame is not orthonormal: {name} = {g!r}")


def offset_frame(base: DualFrame, theta: DualScalar) -> DualFrame:
    """
    Rotate a dual frame by θ̄ about ã.

    Args:
        base: dual-orthonormal frame (q̃, h̃, ã)
        theta: dual offset angle (scalar or per-sample arrays)

    Returns:
        (q̃₁, h̃₁, ã₁)

    Raises:
        NotOrthonormalError: the base frame is not dual-orthonormal
    """
    _check_orthonormal(base)
    c, s = cos(theta), sin(theta)
    q1 = scale(c, base.q) + scale(s, base.h)
    a1 = scale(s, base.q) - scale(c, base.h)
    return DualFrame(q1, base.a, a1)


def offset_surface(
    base: RuledSurface, angle: "OffsetAngle | DualScalar | tuple[float, float]", name: str | None = None
) -> RuledSurface:
    """
    Construct the offset ruled surface for an offset angle profile.

    Base curve β(s) = α(s) − θ*(s) a(s) with α the striction line; ruling
    q₁ = cos θ q + sin θ h. First derivatives are analytic, second ones come
    from the stencil adapter.

    Raises:
        WrongTypeError: the base is not of type M1Plus
    """
    if base.surface_type is not SurfaceType.M1_PLUS:
        raise WrongTypeError(f"Mannheim offsets need an M1Plus base, got {base.surface_type.value}")
    profile = as_offset_angle(angle)

    def point(s: ArrayLike) -> NDArray[np.float64]:
        d = frame_data(base, s)
        return d.striction - _col(profile(s).dual) * d.a

    def dpoint(s: ArrayLike) -> NDArray[np.float64]:
        d = frame_data(base, s)
        value, rate = profile(s), profile.rate(s)
        return d.dstriction - _col(rate.dual) * d.a - _col(value.dual) * d.da

    def ruling(s: ArrayLike) -> NDArray[np.float64]:
        d = frame_data(base, s)
        theta = np.asarray(profile(s).real, dtype=float)
        return _col(np.cos(theta)) * d.q + _col(np.sin(theta)) * d.h

    def druling(s: ArrayLike) -> NDArray[np.float64]:
        d = frame_data(base, s)
        theta = np.asarray(profile(s).real, dtype=float)
        dtheta = np.asarray(profile.rate(s).real, dtype=float)
        c, sn = _col(np.cos(theta)), _col(np.sin(theta))
        return _col(dtheta) * (-sn * d.q + c * d.h) + c * d.dq + sn * d.dh

    period = base.period if base.period is not None and profile.is_periodic(base.span[0], base.period) else None
    label = name or f"offset of {base.name or 'surface'} by {profile.label}"
    logger.info(f"constructing {label} (closed={period is not None})")
    return RuledSurface.from_curves(
        ParamCurve.with_numeric_d2(point, dpoint, period),
        ParamCurve.with_numeric_d2(ruling, druling, period),
        name=label,
        span=base.span,
    )


def h_surface(base: RuledSurface) -> RuledSurface:
    """Trajectory surface of the central normal: striction line ruled by h."""

    def point(s: ArrayLike) -> NDArray[np.float64]:
        return frame_data(base, s).striction

    def dpoint(s: ArrayLike) -> NDArray[np.float64]:
        return frame_data(base, s).dstriction

    def ruling(s: ArrayLike) -> NDArray[np.float64]:
        return frame_data(base, s).h

    def druling(s: ArrayLike) -> NDArray[np.float64]:
        return frame_data(base, s).dh

    return RuledSurface.from_curves(
        ParamCurve.with_numeric_d2(point, dpoint, base.period),
        ParamCurve.with_numeric_d2(ruling, druling, base.period),
        name=f"h-trajectory of {base.name or 'surface'}",
        span=base.span,
    )


# =============================================================================
# Pointwise identities
# =============================================================================


def rotated_frame(pair: MannheimPair, s: ArrayLike) -> DualFrame:
    """The rotated dual frame of the base at s."""
    d = frame_data(pair.base_surface, s)
    return offset_frame(DualFrame(d.q_tilde, d.h_tilde, d.a_tilde), pair.offset_angle(s))


def rotated_frame_residual(pair: MannheimPair, s: ArrayLike | None = None) -> float:
    """max |q̃₁(own) − q̃₁(rotated)|: the offset ruling is the rotated generator line."""
    x = pair.probes() if s is None else s
    own = frame_data(pair.offset_surface, x).q_tilde
    return own.max_abs_difference(rotated_frame(pair, x).q)


def mannheim_orientation(pair: MannheimPair, s: ArrayLike) -> NDArray[np.float64]:
    """
    sign(sin θ · k₂) per sample.

    On a Mannheim offset dq₁/ds = sin θ k₂ a, so the offset's central normal
    is h₁ = sign(sin θ k₂) a; the sign flips where θ crosses a multiple of π.
    """
    d = frame_data(pair.base_surface, s)
    theta = np.asarray(pair.offset_angle(s).real, dtype=float)
    return np.where(np.sin(theta) * d.k2 < 0.0, -1.0, 1.0)


def partner_residual(pair: MannheimPair, s: ArrayLike | None = None) -> float:
    """
    max |σã − h̃₁| with h̃₁ the offset's own central normal and σ from ``mannheim_orientation``.

    Compares real and dual parts, so both the direction a and the line
    through the offset striction point must agree.
    """
    x = pair.probes() if s is None else s
    a = frame_data(pair.base_surface, x).a_tilde
    h1 = frame_data(pair.offset_surface, x).h_tilde
    sigma = mannheim_orientation(pair, x)
    return scale(sigma, a).max_abs_difference(h1)


def normal_orthogonality_residual(pair: MannheimPair, s: ArrayLike | None = None) -> float:
    """
    max |⟨dq̃₁/ds, ã₁⟩| over the probes.

    The inner product equals −θ̄′ − k̄₁, so it vanishes exactly for the
    curvature-integral offset angle.
    """
    x = pair.probes() if s is None else s
    d = frame_data(pair.base_surface, x)
    theta, rate = pair.offset_angle(x), pair.offset_angle.rate(x)
    c, sn = cos(theta), sin(theta)
    turn = scale(rate, scale(-sn, d.q_tilde) + scale(c, d.h_tilde))
    dq1 = turn + scale(c, d.dq_tilde) + scale(sn, d.dh_tilde)
    a1 = scale(sn, d.q_tilde) - scale(c, d.h_tilde)
    g = dinner(dq1, a1)
    return float(max(np.max(np.abs(g.real)), np.max(np.abs(g.dual))))

