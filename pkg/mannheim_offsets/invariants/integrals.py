"""
Integral invariants of closed trajectory ruled surfaces.

All integrals are composite Simpson sums over one period on uniform nodes of
the surface parameter; the integrands are exact differentials, so the value
does not depend on the parametrisation.

Steiner and area vectors come in two flavours:

- world vectors, integrating the Plücker coordinates in the fixed space;
- moving-frame vectors, integrating components on the frame (q̃, h̃, ã)
  with metric diag(ε_q, ε_h, ε_a). Identities relating the dual angle of pitch
  to the Steiner vector are evaluated with these; ``frame_area_vector`` gives
  the value the Steiner vector predicts for an integrated area vector.
"""

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz import DLVec3, dcross, dinner, dual_norm, require_dual_unit, scale
from mannheim_offsets.lorentz3 import causal_signs, cross, inner
from mannheim_offsets.ruled_surface import FrameData, ParamCurve, RuledSurface, frame_data
from mannheim_offsets.ruled_surface.geometry import per_arc_length
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import NotClosedError, NotUnitError, UsageError
from mannheim_offsets.shared.models import SurfaceType
from mannheim_offsets.shared.numerics import closed_nodes, simpson

logger = logging.getLogger(__name__)

DualLike = DualScalar | float

# frame components of the frame lines themselves
Q_AXIS: tuple[float, float, float] = (1.0, 0.0, 0.0)
H_AXIS: tuple[float, float, float] = (0.0, 1.0, 0.0)
A_AXIS: tuple[float, float, float] = (0.0, 0.0, 1.0)


def orientation(surface_type: SurfaceType) -> int:
    """o = −ε_a ε_q: +1 for M1 types, −1 for M2Plus."""
    eps_q, _, eps_a = surface_type.signature
    return -eps_a * eps_q


# =============================================================================
# Sampling
# =============================================================================


def quadrature_nodes(surf: RuledSurface, nodes: int | None = None) -> NDArray[np.float64]:
    """
    Uniform nodes over one period of a closed surface.

    Raises:
        NotClosedError: the surface has no common period
        UsageError: fewer than the minimum number of intervals requested
    """
    if surf.period is None:
        raise NotClosedError(f"{surf.name or 'surface'} is not closed")
    n = nodes or config.QUADRATURE_NODES
    if n < config.MIN_QUADRATURE_NODES:
        raise UsageError(f"at least {config.MIN_QUADRATURE_NODES} quadrature nodes are required, got {n}")
    return closed_nodes(surf.span[0], surf.period, n)


def _sample(surf: RuledSurface, nodes: int | None) -> tuple[NDArray[np.float64], FrameData]:
    s = quadrature_nodes(surf, nodes)
    return s, frame_data(surf, s)


def _integrate_dual(x: DualScalar, s: NDArray[np.float64]) -> DualScalar:
    return DualScalar(float(simpson(x.real, s)), float(simpson(x.dual, s)))


def _integrate_vector(x: DLVec3, s: NDArray[np.float64]) -> DLVec3:
    return DLVec3(simpson(x.real_part, s), simpson(x.dual_part, s))


# =============================================================================
# Scalar invariants
# =============================================================================


def pitch(surf: RuledSurface, nodes: int | None = None) -> float:
    """ℓ = −∮⟨k′, q⟩ ds"""
    s = quadrature_nodes(surf, nodes)
    return -float(simpson(inner(surf.base.d1(s), surf.ruling.value(s)), s))


def angle_of_pitch(surf: RuledSurface, nodes: int | None = None) -> float:
    """λ = ∮⟨h′, a⟩ ds"""
    s, data = _sample(surf, nodes)
    return float(simpson(inner(data.dh, data.a), s))


def dual_angle_of_pitch(surf: RuledSurface, nodes: int | None = None) -> DualScalar:
    """Λ̄ = ∮⟨dh̃, ã⟩"""
    s, data = _sample(surf, nodes)
    return _integrate_dual(dinner(data.dh_tilde, data.a_tilde), s)


def spherical_area(surf: RuledSurface, nodes: int | None = None) -> DualScalar:
    """
    ā = 2π − ε_h ∮ ⟨q̃ × q̃′, q̃″⟩ / ⟨q̃′, q̃′⟩ ds

    球面像の測地曲率を母線の Plücker 座標 q̃ = q + ε k × q から直接積分する。
    フレームも striction line も使わないので、Λ̄ = ∮⟨dh̃, ã⟩ とは独立な求積になる。

    Raises:
        NotClosedError: the surface is not closed
    """
    s = quadrature_nodes(surf, nodes)
    k, dk, d2k = surf.base.value(s), surf.base.d1(s), surf.base.d2(s)
    q, dq, d2q = surf.ruling.value(s), surf.ruling.d1(s), surf.ruling.d2(s)
    x = DLVec3(q, cross(k, q))
    dx = DLVec3(dq, cross(dk, q) + cross(k, dq))
    d2x = DLVec3(d2q, cross(d2k, q) + 2.0 * cross(dk, dq) + cross(k, d2q))
    curvature = dinner(dcross(x, dx), d2x) / dinner(dx, dx) * causal_signs(dq)
    return DualScalar(2.0 * math.pi, 0.0) - _integrate_dual(curvature, s)


# =============================================================================
# Steiner vectors
# =============================================================================


@dataclass(frozen=True, eq=False)
class MovingFrameVector:
    """Dual vector given by components on the moving frame (q̃, h̃, ã)."""

    components: DLVec3
    signature: tuple[int, int, int]

    @classmethod
    def of(cls, components: Sequence[DualLike], signature: tuple[int, int, int]) -> "MovingFrameVector":
        parts = [DualScalar.of(x) for x in components]
        return cls(
            DLVec3.of([float(p.real) for p in parts], [float(p.dual) for p in parts]), signature
        )

    def component(self, index: int) -> DualScalar:
        return DualScalar(float(self.components.real_part[index]), float(self.components.dual_part[index]))

    def inner(self, other: "MovingFrameVector | Sequence[DualLike]") -> DualScalar:
        """Σ ε_i x_i y_i"""
        y = other if isinstance(other, MovingFrameVector) else MovingFrameVector.of(other, self.signature)
        total = DualScalar(0.0, 0.0)
        for i, eps in enumerate(self.signature):
            total = total + self.component(i) * y.component(i) * eps
        return total

    def __add__(self, other: "MovingFrameVector") -> "MovingFrameVector":
        return MovingFrameVector(self.components + other.components, self.signature)

    def __neg__(self) -> "MovingFrameVector":
        return MovingFrameVector(-self.components, self.signature)

    def scaled(self, k: DualLike) -> "MovingFrameVector":
        return MovingFrameVector(scale(k, self.components), self.signature)

    def max_abs_difference(self, other: "MovingFrameVector") -> float:
        return self.components.max_abs_difference(other.components)


def steiner(surf: RuledSurface, nodes: int | None = None) -> DLVec3:
    """World Steiner vector d̃ = ∮ψ̃ ds."""
    s, data = _sample(surf, nodes)
    return _integrate_vector(data.psi, s)


def moving_steiner(surf: RuledSurface, nodes: int | None = None) -> MovingFrameVector:
    """d̃ = ∮(k̄₂, 0, −ε_q k̄₁) ds on the moving frame."""
    s, data = _sample(surf, nodes)
    return _moving_steiner(data, s)


def _moving_steiner(data: FrameData, s: NDArray[np.float64]) -> MovingFrameVector:
    parts = [_integrate_dual(x, s) for x in data.psi_moving]
    signature = (int(data.eps_q[0]), int(data.eps_h[0]), int(data.eps_a[0]))
    return MovingFrameVector.of(parts, signature)


def frame_angle_of_pitch(
    surf: RuledSurface, direction: Sequence[DualLike], nodes: int | None = None
) -> DualScalar:
    """
    −⟨X̃, d̃⟩ for a line X̃ with constant components on the moving frame.

    For X̃ = q̃ this is the dual angle of pitch of an M1 surface; for X̃ = h̃
    it vanishes because the Pfaffian has no h̃ component.
    """
    return -moving_steiner(surf, nodes).inner(direction)


# =============================================================================
# Area vectors
# =============================================================================


@dataclass(frozen=True)
class DualCurve:
    """Closed curve on the dual unit sphere with its derivative."""

    value: Callable[[ArrayLike], DLVec3]
    d1: Callable[[ArrayLike], DLVec3]
    period: float | None
    start: float = 0.0

    @classmethod
    def from_real(cls, curve: ParamCurve, start: float = 0.0) -> "DualCurve":
        return cls(lambda s: DLVec3.real(curve.value(s)), lambda s: DLVec3.real(curve.d1(s)), curve.period, start)


def generator_curve(surf: RuledSurface, line: str = "q") -> DualCurve:
    """Spherical image q̃(s), h̃(s) or ã(s) of a surface."""
    pick: dict[str, Callable[[FrameData], tuple[DLVec3, DLVec3]]] = {
        "q": lambda d: (d.q_tilde, d.dq_tilde),
        "h": lambda d: (d.h_tilde, d.dh_tilde),
        "a": lambda d: (d.a_tilde, d.da_tilde),
    }
    if line not in pick:
        raise UsageError(f"unknown frame line {line!r}; expected one of q, h, a")
    chosen = pick[line]
    return DualCurve(
        value=lambda s: chosen(frame_data(surf, s))[0],
        d1=lambda s: chosen(frame_data(surf, s))[1],
        period=surf.period,
        start=surf.span[0],
    )


def area_vector(curve: DualCurve, nodes: int | None = None) -> DLVec3:
    """
    World area vector w̃ = ∮ x̃ × dx̃.

    Raises:
        NotClosedError: the curve has no period
    """
    if curve.period is None:
        raise NotClosedError("area vector needs a closed curve")
    s = closed_nodes(curve.start, curve.period, nodes)
    return _integrate_vector(dcross(curve.value(s), curve.d1(s)), s)


def _frame_line(data: FrameData, direction: Sequence[DualLike]) -> tuple[DLVec3, DLVec3]:
    """X̃ = Σ xᵢEᵢ with constant components, and dX̃ = Σ xᵢ dEᵢ."""
    x = [DualScalar.of(c) for c in direction]
    lines = (data.q_tilde, data.h_tilde, data.a_tilde)
    rates = (data.dq_tilde, data.dh_tilde, data.da_tilde)
    value = scale(x[0], lines[0]) + scale(x[1], lines[1]) + scale(x[2], lines[2])
    rate = scale(x[0], rates[0]) + scale(x[1], rates[1]) + scale(x[2], rates[2])
    return value, rate


def _moving_integral(v: DLVec3, data: FrameData, s: NDArray[np.float64]) -> MovingFrameVector:
    """∮ of the frame components εᵢ⟨v, Eᵢ⟩ of a sampled dual vector."""
    frame = ((data.q_tilde, data.eps_q), (data.h_tilde, data.eps_h), (data.a_tilde, data.eps_a))
    parts = [_integrate_dual(dinner(v, e) * eps, s) for e, eps in frame]
    signature = (int(data.eps_q[0]), int(data.eps_h[0]), int(data.eps_a[0]))
    return MovingFrameVector.of(parts, signature)


def moving_area_vector(
    surf: RuledSurface, direction: Sequence[DualLike] = Q_AXIS, nodes: int | None = None
) -> MovingFrameVector:
    """
    Moving-frame area vector of a frame-fixed line X̃, integrated directly.

    The components of X̃ × dX̃ on (q̃, h̃, ã) are summed over one period;
    compare with ``frame_area_vector`` for the value predicted from d̃.
    """
    s, data = _sample(surf, nodes)
    x, dx = _frame_line(data, direction)
    return _moving_integral(dcross(x, dx), data, s)


def relative_area_vector(curve: RuledSurface, frame: RuledSurface, nodes: int | None = None) -> MovingFrameVector:
    """
    Area vector ∮ q̃_c × dq̃_c of one surface's generator, on the moving frame of another.

    Both surfaces share the parameter s; nodes cover the period of ``frame``.
    """
    s, data = _sample(frame, nodes)
    own = frame_data(curve, s)
    return _moving_integral(dcross(own.q_tilde, own.dq_tilde), data, s)


def frame_area_vector(d: MovingFrameVector, direction: Sequence[DualLike]) -> MovingFrameVector:
    """
    Area vector of a frame-fixed line predicted from the Steiner vector.

    With dX̃ = ψ̃ × X̃ the integrand is X̃ × (ψ̃ × X̃) = ⟨X̃, ψ̃⟩X̃ − ⟨X̃, X̃⟩ψ̃,
    so w̃ = ⟨X̃, d̃⟩X̃ − ⟨X̃, X̃⟩d̃.
    """
    x = MovingFrameVector.of(direction, d.signature)
    return x.scaled(x.inner(d)) + (-d).scaled(x.inner(x))


def projection_area(curve_area: DLVec3, direction: DLVec3) -> DualScalar:
    """
    Dual area of projection f̄ = ⟨w̃, x̃⟩ / 2.

    Raises:
        NotUnitError: direction is not a dual unit vector
    """
    require_dual_unit(direction, "projection direction")
    return dinner(curve_area, direction) * 0.5


def moving_projection_area(area: MovingFrameVector, direction: Sequence[DualLike]) -> DualScalar:
    """Projection area for moving-frame components."""
    x = MovingFrameVector.of(direction, area.signature)
    g = x.inner(x)
    if abs(abs(float(g.real)) - 1.0) > config.UNIT_TOLERANCE or abs(float(g.dual)) > config.UNIT_TOLERANCE:
        raise NotUnitError(f"projection direction is not a dual unit vector: {g!r}")
    return area.inner(x) * 0.5


# =============================================================================
# Pfaffian
# =============================================================================


@dataclass(frozen=True, eq=False)
class PfaffianSample:
    """Instantaneous Pfaffian vector ψ̃ (per striction arc length) and pole P̃ = ψ̃/‖ψ̃‖."""

    s: float
    psi: DLVec3
    pole: DLVec3


def pfaffian_at(surf: RuledSurface, s: float) -> PfaffianSample:
    """
    Raises:
        NullDirectionError: ψ̃ is null, so the pole is undefined
    """
    data = frame_data(surf, float(s))
    psi = scale(1.0 / float(per_arc_length(data)), data.psi)
    pole = scale(DualScalar(1.0) / dual_norm(psi), psi)
    return PfaffianSample(float(s), psi, pole)


# =============================================================================
# Aggregate
# =============================================================================


@dataclass(frozen=True, eq=False)
class MotionInvariants:
    """Closed-motion invariants of one surface."""

    name: str
    surface_type: SurfaceType
    nodes: int
    pitch: float
    angle_of_pitch: float
    dual_angle_of_pitch: DualScalar
    steiner: DLVec3
    moving_steiner: MovingFrameVector
    area_vector: DLVec3
    moving_area_vector: MovingFrameVector
    spherical_area: DualScalar

    @property
    def orientation(self) -> int:
        return orientation(self.surface_type)

    @property
    def oriented_dual_angle_of_pitch(self) -> DualScalar:
        """o·Λ̄, comparable across surface types."""
        return self.dual_angle_of_pitch * self.orientation


def compute_invariants(surf: RuledSurface, nodes: int | None = None) -> MotionInvariants:
    """
    All closed-motion invariants from one sampling of the frame kit.

    The spherical area is integrated separately from the rulings, so it
    checks Λ̄ rather than restating it.

    Raises:
        NotClosedError: the surface is not closed
        CylindricalPointError: a node is a cylindrical point
    """
    s, data = _sample(surf, nodes)
    n = len(s) - 1
    logger.info(f"integrating invariants of {surf.name or 'surface'} on {n} intervals")

    pitch_value = -float(simpson(inner(data.dpoint, data.q), s))
    dual_angle = _integrate_dual(dinner(data.dh_tilde, data.a_tilde), s)
    moving = _moving_steiner(data, s)
    sweep = dcross(data.q_tilde, data.dq_tilde)

    return MotionInvariants(
        name=surf.name,
        surface_type=surf.surface_type,
        nodes=n,
        pitch=pitch_value,
        angle_of_pitch=float(dual_angle.real),
        dual_angle_of_pitch=dual_angle,
        steiner=_integrate_vector(data.psi, s),
        moving_steiner=moving,
        area_vector=_integrate_vector(sweep, s),
        moving_area_vector=_moving_integral(sweep, data, s),
        spherical_area=spherical_area(surf, n),
    )
