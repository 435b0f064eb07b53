"""双対ローレンツベクトル、E. Study 写像、双対角"""

from mannheim_offsets.dual_lorentz.angle import DualAngle, dual_angle
from mannheim_offsets.dual_lorentz.vector import (
    DirectedLine,
    DLVec3,
    dcross,
    dinner,
    dual_norm,
    is_dual_unit,
    line_from_point_direction,
    point_on_line,
    require_dual_unit,
    scale,
)

__all__ = [
    "DLVec3",
    "DirectedLine",
    "DualAngle",
    "dcross",
    "dinner",
    "dual_angle",
    "dual_norm",
    "is_dual_unit",
    "line_from_point_direction",
    "point_on_line",
    "require_dual_unit",
    "scale",
]
