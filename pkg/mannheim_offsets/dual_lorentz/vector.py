"""
Dual Lorentzian vectors ã = ā + εā* and the E. Study line mapping.

A dual unit vector encodes a directed line: the real part is its unit
direction and the dual part its moment p × u about the origin.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.lorentz3 import LVec3, causal_signs, cross, inner, norm
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import NotUnitError, NullDirectionError

logger = logging.getLogger(__name__)


def _expand(x: object) -> np.ndarray:
    """Broadcast scalar (batch) components against the vector axis."""
    return np.asarray(x, dtype=float)[..., np.newaxis]


@dataclass(frozen=True, eq=False)
class DLVec3:
    """Dual Lorentzian vector; components are (..., 3) arrays."""

    real_part: LVec3
    dual_part: LVec3

    __array_ufunc__ = None

    @classmethod
    def real(cls, v: ArrayLike) -> "DLVec3":
        x = np.asarray(v, dtype=float)
        return cls(x, np.zeros_like(x))

    @classmethod
    def of(cls, real: ArrayLike, dual: ArrayLike) -> "DLVec3":
        return cls(np.asarray(real, dtype=float), np.asarray(dual, dtype=float))

    def __add__(self, other: "DLVec3") -> "DLVec3":
        return DLVec3(self.real_part + other.real_part, self.dual_part + other.dual_part)

    def __sub__(self, other: "DLVec3") -> "DLVec3":
        return DLVec3(self.real_part - other.real_part, self.dual_part - other.dual_part)

    def __neg__(self) -> "DLVec3":
        return DLVec3(-self.real_part, -self.dual_part)

    def __rmul__(self, k: Union[DualScalar, float]) -> "DLVec3":
        return scale(k, self)

    __mul__ = __rmul__

    def translated(self, p: ArrayLike) -> "DLVec3":
        """The same direction moved by the point p: moment gains p × ā."""
        return DLVec3(self.real_part, self.dual_part + cross(p, self.real_part))

    def at(self, index: object) -> "DLVec3":
        return DLVec3(self.real_part[index], self.dual_part[index])  # type: ignore[index]

    def components(self) -> tuple[DualScalar, DualScalar, DualScalar]:
        return tuple(  # type: ignore[return-value]
            DualScalar(self.real_part[..., i], self.dual_part[..., i]) for i in range(3)
        )

    def max_abs_difference(self, other: "DLVec3") -> float:
        return float(
            max(
                np.max(np.abs(self.real_part - other.real_part)),
                np.max(np.abs(self.dual_part - other.dual_part)),
            )
        )

    def __repr__(self) -> str:
        return f"DLVec3({self.real_part!r} + ε{self.dual_part!r})"


def scale(k: Union[DualScalar, float], v: DLVec3) -> DLVec3:
    """(k + εk*)(ā + εā*) = kā + ε(kā* + k*ā)"""
    d = DualScalar.of(k)
    kr = _expand(d.real)
    kd = _expand(d.dual)
    return DLVec3(kr * v.real_part, kr * v.dual_part + kd * v.real_part)


def dinner(x: DLVec3, y: DLVec3) -> DualScalar:
    """⟨x̃, ỹ⟩ = ⟨x̄, ȳ⟩ + ε(⟨x̄, ȳ*⟩ + ⟨x̄*, ȳ⟩)"""
    return DualScalar(
        inner(x.real_part, y.real_part),
        inner(x.real_part, y.dual_part) + inner(x.dual_part, y.real_part),
    )


def dcross(x: DLVec3, y: DLVec3) -> DLVec3:
    """x̃ × ỹ = x̄ × ȳ + ε(x̄* × ȳ + x̄ × ȳ*)"""
    return DLVec3(
        cross(x.real_part, y.real_part),
        cross(x.dual_part, y.real_part) + cross(x.real_part, y.dual_part),
    )


def is_dual_unit(x: DLVec3, tol: float | None = None) -> bool:
    """⟨x̃, x̃⟩ = ±1 + ε0 within tolerance."""
    t = config.UNIT_TOLERANCE if tol is None else tol
    g = dinner(x, x)
    return bool(
        np.all(np.abs(np.abs(g.real) - 1.0) < t) and np.all(np.abs(np.asarray(g.dual)) < t)
    )


def require_dual_unit(x: DLVec3, name: str = "vector") -> None:
    if not is_dual_unit(x):
        raise NotUnitError(f"{name} is not a dual unit vector: ⟨x,x⟩ = {dinner(x, x)!r}")


def dual_norm(x: DLVec3) -> DualScalar:
    """‖x̃‖ = √|⟨x̃, x̃⟩| for a non-null real part."""
    g = dinner(x, x)
    sign = np.sign(g.real)
    if np.any(sign == 0):
        raise NullDirectionError("dual vector with null real part has no norm")
    return DualScalar(np.sqrt(np.abs(g.real)), sign * g.dual / (2.0 * np.sqrt(np.abs(g.real))))


# =============================================================================
# E. Study mapping
# =============================================================================


@dataclass(frozen=True, eq=False)
class DirectedLine:
    """Directed line in Plücker form: unit direction and moment p × direction."""

    direction: LVec3
    moment: LVec3

    def to_dual(self) -> DLVec3:
        return DLVec3(self.direction, self.moment)

    @classmethod
    def from_dual(cls, x: DLVec3) -> "DirectedLine":
        return cls(x.real_part, x.dual_part)

    def foot_point(self) -> LVec3:
        """Point of the line closest to the origin: −(u × m)/⟨u, u⟩."""
        return -cross(self.direction, self.moment) / inner(self.direction, self.direction)[
            ..., np.newaxis
        ]


def line_from_point_direction(p: ArrayLike, u: ArrayLike) -> DirectedLine:
    """
    E. Study line through p with direction u.

    Raises:
        NullDirectionError: if u is null
    """
    direction = np.asarray(u, dtype=float)
    if np.any(causal_signs(direction) == 0) or np.any(np.linalg.norm(direction, axis=-1) == 0):
        raise NullDirectionError(f"null direction {direction!r} does not define an E. Study line")
    direction = direction / norm(direction)[..., np.newaxis]
    return DirectedLine(direction=direction, moment=cross(p, direction))


def point_on_line(line: DirectedLine, t: ArrayLike = 0.0) -> LVec3:
    """foot point + t·direction"""
    return line.foot_point() + _expand(t) * line.direction
