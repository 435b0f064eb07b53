"""
Frame kit: everything the geometry needs at a batch of parameters.

Frame {q, h, a} with a = q × h and signature (ε_q, ε_h, ε_a), raw
(parameter s) curvatures k₁ = ‖q′‖, k₂ = ε_a⟨h′, a⟩, the striction line c
with its derivative, and the dual parts of the curvatures
k₁* = ε_h⟨c′, a⟩, k₂* = ε_q⟨c′, q⟩. The structural equations read

    q′ = k₁h,  h′ = −ε_qε_h k₁ q + k₂ a,  a′ = −ε_aε_h k₂ h.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz import DLVec3, scale
from mannheim_offsets.lorentz3 import causal_signs, cross, euclidean_norm, inner, norm
from mannheim_offsets.ruled_surface.surface import RuledSurface
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import (
    CylindricalPointError,
    NullCentralNormalError,
    NullFrameVectorError,
)

logger = logging.getLogger(__name__)

Array = NDArray[np.float64]


def _col(x: ArrayLike) -> Array:
    return np.asarray(x, dtype=float)[..., np.newaxis]


def _first(mask: NDArray[np.bool_], s: Array) -> float:
    return float(np.atleast_1d(s)[np.flatnonzero(np.atleast_1d(mask))[0]])


@dataclass(frozen=True, eq=False)
class FrameData:
    """Frame quantities sampled at ``s`` (raw parameter rates)."""

    s: Array
    point: Array
    dpoint: Array
    q: Array
    dq: Array
    h: Array
    dh: Array
    a: Array
    da: Array
    k1: Array
    k2: Array
    eps_q: NDArray[np.int_]
    eps_h: NDArray[np.int_]
    eps_a: NDArray[np.int_]
    striction: Array
    dstriction: Array
    k1_dual: Array
    k2_dual: Array

    @property
    def rate(self) -> Array:
        """‖c′(s)‖, the speed of the striction line."""
        return norm(self.dstriction)

    @property
    def k1_bar(self) -> DualScalar:
        return DualScalar(self.k1, self.k1_dual)

    @property
    def k2_bar(self) -> DualScalar:
        return DualScalar(self.k2, self.k2_dual)

    def _lift(self, x: Array) -> DLVec3:
        return DLVec3(x, cross(self.striction, x))

    def _dlift(self, x: Array, dx: Array) -> DLVec3:
        return DLVec3(dx, cross(self.dstriction, x) + cross(self.striction, dx))

    @property
    def q_tilde(self) -> DLVec3:
        return self._lift(self.q)

    @property
    def h_tilde(self) -> DLVec3:
        return self._lift(self.h)

    @property
    def a_tilde(self) -> DLVec3:
        return self._lift(self.a)

    @property
    def dq_tilde(self) -> DLVec3:
        return self._dlift(self.q, self.dq)

    @property
    def dh_tilde(self) -> DLVec3:
        return self._dlift(self.h, self.dh)

    @property
    def da_tilde(self) -> DLVec3:
        return self._dlift(self.a, self.da)

    @property
    def psi(self) -> DLVec3:
        """Pfaffian vector ψ̃ = k̄₂ q̃ − ε_q k̄₁ ã (dx̃ = ψ̃ × x̃ for frame vectors)."""
        return scale(self.k2_bar, self.q_tilde) + scale(self.k1_bar * (-self.eps_q), self.a_tilde)

    @property
    def psi_moving(self) -> tuple[DualScalar, DualScalar, DualScalar]:
        """ψ̃ in frame components (q̃, h̃, ã)."""
        zero = np.zeros_like(self.k1)
        return (self.k2_bar, DualScalar(zero, zero), self.k1_bar * (-self.eps_q))

    def sigma(self) -> tuple[Array, Array]:
        """
        σ of c′ = ‖c′‖(cosh σ q + sinh σ a) and its decomposition residual.

        Meaningful for M1Plus; σ = 0 where the striction line is stationary.
        """
        rate = self.rate
        moving = rate > config.CYLINDRICAL_TOLERANCE
        safe = np.where(moving, rate, 1.0)
        t = self.dstriction / _col(safe)
        x = inner(t, self.q)
        y = -inner(t, self.a)
        sigma = np.where(moving, np.arcsinh(y), 0.0)
        residual = np.where(moving, np.abs(x - np.cosh(sigma)), 0.0)
        return sigma, residual


def frame_data(surf: RuledSurface, s: ArrayLike) -> FrameData:
    """
    Evaluate the frame kit at one or many parameters.

    Raises:
        CylindricalPointError: where ‖q′‖ ≤ tolerance
        NullCentralNormalError: where q′ is null
        NullFrameVectorError: where the asymptotic normal a is null
    """
    s_arr = np.asarray(s, dtype=float)
    k, dk, d2k = surf.base.value(s_arr), surf.base.d1(s_arr), surf.base.d2(s_arr)
    q, dq, d2q = surf.ruling.value(s_arr), surf.ruling.d1(s_arr), surf.ruling.d2(s_arr)

    eps_q = causal_signs(q)
    if np.any(eps_q == 0):
        raise NullFrameVectorError(f"null ruling at s={_first(eps_q == 0, s_arr):.15g}")

    speed = euclidean_norm(dq)
    flat = speed <= config.CYLINDRICAL_TOLERANCE
    if np.any(flat):
        raise CylindricalPointError(_first(flat, s_arr))

    eps_h = causal_signs(dq / _col(speed))
    if np.any(eps_h == 0):
        raise NullCentralNormalError(_first(eps_h == 0, s_arr))

    g = inner(dq, dq)
    k1 = np.sqrt(np.abs(g))
    h = dq / _col(k1)
    a = cross(q, h)
    eps_a = causal_signs(a)
    if np.any(eps_a == 0):
        raise NullFrameVectorError(f"null asymptotic normal at s={_first(eps_a == 0, s_arr):.15g}")

    dk1 = eps_h * inner(dq, d2q) / k1
    dh = (d2q - h * _col(dk1)) / _col(k1)
    k2 = eps_a * inner(dh, a)
    da = cross(q, dh)

    # striction line c = k − μq, μ = ⟨q′, k′⟩/⟨q′, q′⟩
    mu = inner(dq, dk) / g
    dmu = (inner(d2q, dk) + inner(dq, d2k)) / g - inner(dq, dk) * 2.0 * inner(dq, d2q) / g**2
    c = k - _col(mu) * q
    dc = dk - _col(dmu) * q - _col(mu) * dq

    return FrameData(
        s=s_arr,
        point=k,
        dpoint=dk,
        q=q,
        dq=dq,
        h=h,
        dh=dh,
        a=a,
        da=da,
        k1=k1,
        k2=k2,
        eps_q=eps_q,
        eps_h=eps_h,
        eps_a=eps_a,
        striction=c,
        dstriction=dc,
        k1_dual=eps_h * inner(dc, a),
        k2_dual=eps_q * inner(dc, q),
    )
