"""閉じた線織面の積分不変量: ピッチ、双対ピッチ角、Steiner ベクトル、面積ベクトル"""

from mannheim_offsets.invariants.consistency import consistency_report, convergence_rows, vector_row
from mannheim_offsets.invariants.integrals import (
    A_AXIS,
    H_AXIS,
    Q_AXIS,
    DualCurve,
    MotionInvariants,
    MovingFrameVector,
    PfaffianSample,
    angle_of_pitch,
    area_vector,
    compute_invariants,
    dual_angle_of_pitch,
    frame_angle_of_pitch,
    frame_area_vector,
    generator_curve,
    moving_area_vector,
    moving_projection_area,
    moving_steiner,
    orientation,
    pfaffian_at,
    pitch,
    projection_area,
    quadrature_nodes,
    relative_area_vector,
    spherical_area,
    steiner,
)

__all__ = [
    "A_AXIS",
    "DualCurve",
    "H_AXIS",
    "MotionInvariants",
    "MovingFrameVector",
    "PfaffianSample",
    "Q_AXIS",
    "angle_of_pitch",
    "area_vector",
    "compute_invariants",
    "consistency_report",
    "convergence_rows",
    "dual_angle_of_pitch",
    "frame_angle_of_pitch",
    "frame_area_vector",
    "generator_curve",
    "moving_area_vector",
    "moving_projection_area",
    "moving_steiner",
    "orientation",
    "pfaffian_at",
    "pitch",
    "projection_area",
    "quadrature_nodes",
    "relative_area_vector",
    "spherical_area",
    "steiner",
    "vector_row",
]
