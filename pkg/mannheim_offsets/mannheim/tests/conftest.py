"""
mannheim テスト用フィクスチャ

Frenet 系から積分した可展面: κ = 1、τ(s) = −tan(1.2 − s)/0.5 (s ∈ [0, 1])。
オフセット角 θ̄ = (1.2 + ε0.5) − ∫k̄₁ で sin θ − θ* τ_α cos θ ≡ 0 となり、
オフセットも可展になる。
"""

import math

import numpy as np
import pytest

from mannheim_offsets.mannheim import MannheimPair, offset_angle_from_curvature
from mannheim_offsets.ruled_surface import RuledSurface
from mannheim_offsets.ruled_surface.standard import frenet_developable, hyperboloid

C = 0.5
W = math.sqrt(1 - C * C)
THETA0 = 1.2
THETA_STAR0 = 0.5


def _curvature(s: object) -> np.ndarray:
    return np.ones_like(np.asarray(s, dtype=float))


def _torsion(s: object) -> np.ndarray:
    return -np.tan(THETA0 - np.asarray(s, dtype=float)) / THETA_STAR0


@pytest.fixture
def eq52() -> RuledSurface:
    return hyperboloid(C)


@pytest.fixture(scope="module")
def frenet_base() -> RuledSurface:
    return frenet_developable(_curvature, _torsion, (0.0, 1.0))


@pytest.fixture(scope="module")
def frenet_pair(frenet_base: RuledSurface) -> MannheimPair:
    angle = offset_angle_from_curvature(frenet_base, THETA0, THETA_STAR0, intervals=512)
    return MannheimPair.build(frenet_base, angle)
