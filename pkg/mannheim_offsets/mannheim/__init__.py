"""Mannheim オフセットの構成と積分不変量に関する定理の検証"""

from mannheim_offsets.mannheim.angle import (
    SPECIAL_ANGLE_TOLERANCE,
    OffsetAngle,
    as_offset_angle,
    offset_angle_from_curvature,
    total_offset_angle,
)
from mannheim_offsets.mannheim.developable import (
    developability_condition,
    developable_report,
    offset_drall,
    offset_drall_formula,
    offset_pitch_developable,
    striction_mannheim_check,
    tau_alpha,
)
from mannheim_offsets.mannheim.offset import (
    MANNHEIM_TOLERANCE,
    MannheimPair,
    h_surface,
    mannheim_orientation,
    normal_orthogonality_residual,
    offset_frame,
    offset_surface,
    partner_residual,
    rotated_frame,
    rotated_frame_residual,
)
from mannheim_offsets.mannheim.theorems import (
    SIGN_CONVENTION,
    PairInvariants,
    pair_invariants,
    printed_row,
    verify_pitch_relation,
    verify_projection_areas,
)

__all__ = [
    "MANNHEIM_TOLERANCE",
    "MannheimPair",
    "OffsetAngle",
    "PairInvariants",
    "SIGN_CONVENTION",
    "SPECIAL_ANGLE_TOLERANCE",
    "as_offset_angle",
    "developability_condition",
    "developable_report",
    "h_surface",
    "mannheim_orientation",
    "normal_orthogonality_residual",
    "offset_angle_from_curvature",
    "offset_drall",
    "offset_drall_formula",
    "offset_frame",
    "offset_pitch_developable",
    "offset_surface",
    "pair_invariants",
    "partner_residual",
    "printed_row",
    "rotated_frame",
    "rotated_frame_residual",
    "striction_mannheim_check",
    "tau_alpha",
    "total_offset_angle",
    "verify_pitch_relation",
    "verify_projection_areas",
]
