"""
Dual angles between directed lines.

The causal characters of the two dual unit vectors select one of four
cases: hyperbolic (timelike/timelike, ⟨x,y⟩ = −cosh θ̄), central
(spacelike/spacelike in a timelike plane, cosh θ̄), spacelike angle
(spacelike/spacelike in a spacelike plane, cos θ̄) and Lorentzian timelike
(spacelike/timelike, sinh θ̄). The real part θ is the angle between the
directions and the dual part θ* the distance along the common normal.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz.vector import DLVec3, dcross, dinner, require_dual_unit
from mannheim_offsets.lorentz3 import causal_signs, cross, inner, norm
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import DomainError, NullDirectionError
from mannheim_offsets.shared.models import AngleKind

logger = logging.getLogger(__name__)

# sin θ / sinh θ below this switches to the common-normal limit rule
DEGENERATE_SINE = 1e-9


@dataclass(frozen=True)
class DualAngle:
    """θ̄ = θ + εθ* together with the case it was measured in."""

    value: DualScalar
    kind: AngleKind
    degenerate: bool = False

    @property
    def theta(self) -> float:
        return float(self.value.real)

    @property
    def theta_star(self) -> float:
        return float(self.value.dual)


def _common_normal_distance(x: DLVec3, y: DLVec3) -> float:
    return float(norm(dcross(x, y).dual_part))


def dual_angle(x: DLVec3, y: DLVec3) -> DualAngle:
    """
    Dual angle between two dual unit vectors (single lines, not batches).

    Args:
        x: first line (the spacelike one when the characters differ)
        y: second line

    Returns:
        DualAngle with the kind of the matching case

    Raises:
        NotUnitError: if either argument is not a dual unit vector
        DomainError: if the inner product is out of range for the case
    """
    require_dual_unit(x, "x")
    require_dual_unit(y, "y")
    sx = int(causal_signs(x.real_part))
    sy = int(causal_signs(y.real_part))
    if sx == 0 or sy == 0:
        raise NullDirectionError("dual angle is undefined for null lines")

    g = dinner(x, y)
    c, c_star = float(g.real), float(g.dual)
    n = cross(x.real_part, y.real_part)
    gn = float(inner(n, n))
    tol = config.UNIT_TOLERANCE

    if sx != sy:
        # Lorentzian timelike angle: ⟨x, y⟩ = sinh θ̄
        theta = math.asinh(c)
        return DualAngle(
            DualScalar(theta, c_star / math.cosh(theta)), AngleKind.LORENTZIAN_TIMELIKE
        )

    if sx < 0:
        # hyperbolic angle: ⟨x, y⟩ = −cosh θ̄, both in the same time cone
        if -c < 1.0 - tol:
            raise DomainError(f"timelike lines in different time cones: ⟨x,y⟩ = {c}")
        sh = math.sqrt(max(gn, 0.0))
        if sh < DEGENERATE_SINE:
            return DualAngle(
                DualScalar(0.0, _common_normal_distance(x, y)), AngleKind.HYPERBOLIC, True
            )
        return DualAngle(DualScalar(math.asinh(sh), -c_star / sh), AngleKind.HYPERBOLIC)

    # both spacelike: the causal character of the spanned plane decides
    if abs(gn) <= config.NULL_TOLERANCE:
        if float(np.linalg.norm(n)) > math.sqrt(config.NULL_TOLERANCE):
            raise DomainError("directions span a lightlike plane")
        theta = 0.0 if c > 0 else math.pi
        return DualAngle(
            DualScalar(theta, _common_normal_distance(x, y)), AngleKind.SPACELIKE_ANGLE, True
        )

    if gn > 0:
        # central angle: ⟨x, y⟩ = cosh θ̄ in a timelike plane
        if c < 1.0 - tol:
            raise DomainError(f"central angle needs ⟨x,y⟩ ≥ 1, got {c}")
        sh = math.sqrt(gn)
        if sh < DEGENERATE_SINE:
            return DualAngle(
                DualScalar(0.0, _common_normal_distance(x, y)), AngleKind.CENTRAL, True
            )
        return DualAngle(DualScalar(math.asinh(sh), c_star / sh), AngleKind.CENTRAL)

    # spacelike angle: ⟨x, y⟩ = cos θ̄ in a spacelike plane
    if abs(c) > 1.0 + tol:
        raise DomainError(f"spacelike angle needs |⟨x,y⟩| ≤ 1, got {c}")
    sn = math.sqrt(-gn)
    theta = math.atan2(sn, c)
    if sn < DEGENERATE_SINE:
        return DualAngle(
            DualScalar(theta, _common_normal_distance(x, y)), AngleKind.SPACELIKE_ANGLE, True
        )
    return DualAngle(DualScalar(theta, -c_star / sn), AngleKind.SPACELIKE_ANGLE)
