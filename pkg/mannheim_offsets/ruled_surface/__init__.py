"""線織面: 曲線、Frenet フレーム、striction 曲線、drall、型分類"""

from mannheim_offsets.ruled_surface.curves import (
    FrenetCurve,
    ParamCurve,
    frenet_curve,
    normalize,
    stack3,
)
from mannheim_offsets.ruled_surface.geometry import (
    ArcLengthTable,
    DualFrame,
    Frame,
    classify_surface,
    drall,
    dual_frame_at,
    frame_at,
    is_developable,
    max_drall,
    mesh,
    striction_curve,
)
from mannheim_offsets.ruled_surface.kit import FrameData, frame_data
from mannheim_offsets.ruled_surface.surface import RuledSurface

__all__ = [
    "ArcLengthTable",
    "DualFrame",
    "Frame",
    "FrameData",
    "FrenetCurve",
    "ParamCurve",
    "RuledSurface",
    "classify_surface",
    "drall",
    "dual_frame_at",
    "frame_at",
    "frame_data",
    "frenet_curve",
    "is_developable",
    "max_drall",
    "mesh",
    "normalize",
    "stack3",
    "striction_curve",
]
