"""
Pointwise geometry of a ruled surface: frame, striction line, drall, type.

Structural coefficients are reported per arc length of the striction line.
Where the striction line is stationary (cones) the raw parameter rates are
reported instead.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.dual_lorentz import DLVec3
from mannheim_offsets.lorentz3 import inner, triple
from mannheim_offsets.ruled_surface.kit import FrameData, frame_data
from mannheim_offsets.ruled_surface.surface import RuledSurface
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import MixedCausalTypeError, NullFrameVectorError, UsageError
from mannheim_offsets.shared.models import SurfaceType
from mannheim_offsets.shared.numerics import cumulative

logger = logging.getLogger(__name__)

# |⟨T, q⟩ − cosh σ| above this puts the striction tangent outside the (q, a) model
SIGMA_MODEL_TOLERANCE = 1e-6

_TYPES_BY_SIGNS = {
    (1, 1): SurfaceType.M1_PLUS,
    (-1, 1): SurfaceType.M1_MINUS,
    (1, -1): SurfaceType.M2_PLUS,
}


@dataclass(frozen=True, eq=False)
class Frame:
    """Frenet frame {q, h, a} and structural coefficients at one parameter."""

    s: float
    q: NDArray[np.float64]
    h: NDArray[np.float64]
    a: NDArray[np.float64]
    k1: float
    k2: float
    sigma: float
    k1_dual: float
    k2_dual: float
    rate: float
    striction: NDArray[np.float64]
    signature: tuple[int, int, int]
    sigma_in_model: bool


@dataclass(frozen=True, eq=False)
class DualFrame:
    """E. Study images q̃, h̃, ã of the frame lines through the striction point."""

    q: DLVec3
    h: DLVec3
    a: DLVec3

    def as_tuple(self) -> tuple[DLVec3, DLVec3, DLVec3]:
        return self.q, self.h, self.a


def per_arc_length(data: FrameData) -> NDArray[np.float64]:
    """Divisor converting raw rates to striction arc-length rates (1 where stationary)."""
    rate = data.rate
    return np.where(rate > config.CYLINDRICAL_TOLERANCE, rate, 1.0)


def frame_at(surf: RuledSurface, s: float) -> Frame:
    """
    Frame and coefficients k₁, k₂, σ at s.

    Args:
        surf: ruled surface
        s: parameter value

    Returns:
        Frame

    Raises:
        CylindricalPointError: ‖q′(s)‖ vanishes
        NullFrameVectorError: a frame vector is null
    """
    data = frame_data(surf, float(s))
    divisor = float(per_arc_length(data))
    sigma, residual = data.sigma()
    signature = (int(data.eps_q), int(data.eps_h), int(data.eps_a))
    in_model = signature == SurfaceType.M1_PLUS.signature and float(residual) <= SIGMA_MODEL_TOLERANCE
    if signature == SurfaceType.M1_PLUS.signature and not in_model:
        logger.info(f"striction tangent leaves the (q, a) plane model at s={s:.6g}")
    return Frame(
        s=float(s),
        q=data.q,
        h=data.h,
        a=data.a,
        k1=float(data.k1) / divisor,
        k2=float(data.k2) / divisor,
        sigma=float(sigma),
        k1_dual=float(data.k1_dual) / divisor,
        k2_dual=float(data.k2_dual) / divisor,
        rate=float(data.rate),
        striction=data.striction,
        signature=signature,
        sigma_in_model=in_model,
    )


def dual_frame_at(surf: RuledSurface, s: ArrayLike) -> DualFrame:
    """Dual frame (q̃, h̃, ã) at one or many parameters."""
    data = frame_data(surf, s)
    return DualFrame(data.q_tilde, data.h_tilde, data.a_tilde)


def striction_curve(surf: RuledSurface, s: ArrayLike) -> NDArray[np.float64]:
    """c(s) = k(s) − ⟨q′, k′⟩/⟨q′, q′⟩ q(s)"""
    return frame_data(surf, s).striction


def drall(surf: RuledSurface, s: ArrayLike) -> NDArray[np.float64]:
    """
    Distribution parameter δ = det[k′; q; q′] / ⟨q′, q′⟩.

    Raises:
        CylindricalPointError: ‖q′‖ vanishes
        NullCentralNormalError: q′ is null
    """
    data = frame_data(surf, s)
    return triple(data.dpoint, data.q, data.dq) / inner(data.dq, data.dq)


def max_drall(surf: RuledSurface, count: int | None = None) -> float:
    """max |δ| over the probe points."""
    return float(np.max(np.abs(drall(surf, surf.probes(count)))))


def is_developable(surf: RuledSurface, tol: float | None = None) -> bool:
    """δ ≡ 0 on the probe points."""
    t = config.DEVELOPABLE_TOLERANCE if tol is None else tol
    return max_drall(surf) < t


def classify_surface(surf: RuledSurface) -> SurfaceType:
    """
    Surface type from the causal characters of (q, h) at the probe points.

    Raises:
        MixedCausalTypeError: the characters change across the probes
        NullFrameVectorError: q or h is timelike together (not a ruled surface frame)
    """
    data = frame_data(surf, surf.probes())
    pairs = set(zip(data.eps_q.tolist(), data.eps_h.tolist(), strict=True))
    if len(pairs) != 1:
        raise MixedCausalTypeError(f"causal characters (ε_q, ε_h) vary: {sorted(pairs)}")
    pair = pairs.pop()
    if pair not in _TYPES_BY_SIGNS:
        raise NullFrameVectorError(f"no surface type for (ε_q, ε_h) = {pair}")
    surface_type = _TYPES_BY_SIGNS[pair]
    logger.debug(f"{surf.name or 'surface'} classified as {surface_type.value}")
    return surface_type


def mesh(
    surf: RuledSurface,
    s_samples: int,
    v_range: tuple[float, float],
    v_samples: int,
    s_range: tuple[float, float] | None = None,
) -> NDArray[np.float64]:
    """
    Row-major grid φ(sᵢ, vⱼ), shape (s_samples, v_samples, 3).

    Args:
        surf: ruled surface
        s_samples: number of s values (≥ 2), endpoints included
        v_range: ruling parameter interval
        v_samples: number of v values (≥ 2)
        s_range: parameter interval, defaults to the surface span
    """
    if s_samples < 2 or v_samples < 2:
        raise UsageError("mesh needs at least 2 samples in each direction")
    start, stop = s_range or surf.span
    s = np.linspace(start, stop, s_samples)
    v = np.linspace(v_range[0], v_range[1], v_samples)
    return surf.point(s[:, np.newaxis], v[np.newaxis, :])


class ArcLengthTable:
    """
    Striction-line arc length u(s) = ∫‖c′‖ and its inverse.

    Tabulated with cumulative Simpson and linearly interpolated.
    """

    def __init__(self, surf: RuledSurface, intervals: int | None = None):
        n = intervals or config.ARC_LENGTH_NODES
        self.s = np.linspace(surf.span[0], surf.span[1], n + 1)
        self.u = cumulative(frame_data(surf, self.s).rate, self.s)
        if np.any(np.diff(self.u) <= 0):
            logger.warning("striction line is stationary somewhere; the inverse map is not unique")

    @property
    def length(self) -> float:
        return float(self.u[-1])

    def arc_length(self, s: ArrayLike) -> NDArray[np.float64]:
        return np.interp(s, self.s, self.u)

    def parameter(self, u: ArrayLike) -> NDArray[np.float64]:
        return np.interp(u, self.u, self.s)
