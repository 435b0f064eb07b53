"""
Minkowski 3-space R³₁ with metric signature (−, +, +).

Vectors are numpy arrays whose last axis has length 3 (x1, x2, x3); every
function broadcasts over leading axes so a curve sampled at n parameters is
just an (n, 3) array.
"""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import NullDirectionError, ZeroVectorError
from mannheim_offsets.shared.models import CausalCharacter, TimeOrientation

logger = logging.getLogger(__name__)

LVec3 = NDArray[np.float64]

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])


def vec(x1: float, x2: float, x3: float) -> LVec3:
    return np.array([x1, x2, x3], dtype=float)


def inner(a: ArrayLike, b: ArrayLike) -> NDArray[np.float64]:
    """⟨a, b⟩ = −a₁b₁ + a₂b₂ + a₃b₃"""
    x = np.asarray(a, dtype=float)
    y = np.asarray(b, dtype=float)
    return -x[..., 0] * y[..., 0] + x[..., 1] * y[..., 1] + x[..., 2] * y[..., 2]


def cross(a: ArrayLike, b: ArrayLike) -> LVec3:
    """Lorentzian cross product (a₂b₃−a₃b₂, a₁b₃−a₃b₁, a₂b₁−a₁b₂)."""
    x = np.asarray(a, dtype=float)
    y = np.asarray(b, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    return np.stack(
        [
            x[..., 1] * y[..., 2] - x[..., 2] * y[..., 1],
            x[..., 0] * y[..., 2] - x[..., 2] * y[..., 0],
            x[..., 1] * y[..., 0] - x[..., 0] * y[..., 1],
        ],
        axis=-1,
    )


def norm(a: ArrayLike) -> NDArray[np.float64]:
    """‖a‖ = √|⟨a, a⟩|"""
    return np.sqrt(np.abs(inner(a, a)))


def euclidean_norm(a: ArrayLike) -> NDArray[np.float64]:
    return np.linalg.norm(np.asarray(a, dtype=float), axis=-1)


def triple(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> NDArray[np.float64]:
    """det[a; b; c] of the coordinate rows."""
    x, y, z = np.broadcast_arrays(
        np.asarray(a, dtype=float), np.asarray(b, dtype=float), np.asarray(c, dtype=float)
    )
    return np.linalg.det(np.stack([x, y, z], axis=-2))


def inner_triple(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> NDArray[np.float64]:
    """⟨a, b × c⟩; equals −det[a; b; c] under the printed cross product."""
    return inner(a, cross(b, c))


def causal_signs(a: ArrayLike, tol: float | None = None) -> NDArray[np.int_]:
    """
    Sign of ⟨a, a⟩ per vector: +1 spacelike, −1 timelike, 0 null.

    The zero vector counts as spacelike.
    """
    t = config.NULL_TOLERANCE if tol is None else tol
    g = inner(a, a)
    signs = np.where(g > t, 1, np.where(g < -t, -1, 0))
    zero = euclidean_norm(a) == 0.0
    return np.where(zero, 1, signs).astype(int)


def classify(a: ArrayLike, tol: float | None = None) -> CausalCharacter:
    """Causal character of a single vector."""
    sign = int(causal_signs(a, tol))
    if sign > 0:
        return CausalCharacter.SPACELIKE
    if sign < 0:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.NULL


def time_orientation(a: ArrayLike) -> TimeOrientation | None:
    """Future/past pointing by the sign of x1; None unless timelike."""
    if classify(a) is not CausalCharacter.TIMELIKE:
        return None
    return TimeOrientation.FUTURE if float(np.asarray(a)[0]) > 0 else TimeOrientation.PAST


def unit(a: ArrayLike) -> LVec3:
    """Normalise to Lorentz norm 1; zero and null vectors have no unit direction."""
    x = np.asarray(a, dtype=float)
    if np.any(euclidean_norm(x) == 0.0):
        raise ZeroVectorError("zero vector has no unit direction")
    if np.any(causal_signs(x) == 0):
        raise NullDirectionError(f"null vector has no unit direction: {x!r}")
    return x / norm(x)[..., np.newaxis]


# =============================================================================
# Unit spheres
# =============================================================================


def hyperbolic_point(t: ArrayLike, phi: ArrayLike, future: bool = True) -> LVec3:
    """Point of the hyperbolic unit sphere H₀² (⟨a,a⟩ = −1)."""
    t = np.asarray(t, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sign = 1.0 if future else -1.0
    return np.stack([sign * np.cosh(t), np.sinh(t) * np.cos(phi), np.sinh(t) * np.sin(phi)], -1)


def lorentz_sphere_point(t: ArrayLike, phi: ArrayLike) -> LVec3:
    """Point of the Lorentzian unit sphere S₁² (⟨a,a⟩ = +1)."""
    t = np.asarray(t, dtype=float)
    phi = np.asarray(phi, dtype=float)
    return np.stack([np.sinh(t), np.cosh(t) * np.cos(phi), np.cosh(t) * np.sin(phi)], -1)
