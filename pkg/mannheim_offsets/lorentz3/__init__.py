"""Minkowski 3 次元空間のベクトル演算"""

from mannheim_offsets.lorentz3.vector import (
    E1,
    E2,
    E3,
    LVec3,
    causal_signs,
    classify,
    cross,
    euclidean_norm,
    hyperbolic_point,
    inner,
    inner_triple,
    lorentz_sphere_point,
    norm,
    time_orientation,
    triple,
    unit,
    vec,
)

__all__ = [
    "E1",
    "E2",
    "E3",
    "LVec3",
    "causal_signs",
    "classify",
    "cross",
    "euclidean_norm",
    "hyperbolic_point",
    "inner",
    "inner_triple",
    "lorentz_sphere_point",
    "norm",
    "time_orientation",
    "triple",
    "unit",
    "vec",
]
