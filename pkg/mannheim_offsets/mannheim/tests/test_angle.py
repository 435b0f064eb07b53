"""
オフセット角プロファイルのテスト
"""

import math

import numpy as np
import pytest

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz import DualAngle
from mannheim_offsets.mannheim import (
    OffsetAngle,
    as_offset_angle,
    offset_angle_from_curvature,
    total_offset_angle,
)
from mannheim_offsets.ruled_surface import RuledSurface
from mannheim_offsets.ruled_surface.standard import helicoid
from mannheim_offsets.shared.errors import NotClosedError
from mannheim_offsets.shared.models import AngleKind

C = 0.5
W = math.sqrt(1 - C * C)


class TestOffsetAngle:
    """OffsetAngle"""

    def test_constant(self) -> None:
        angle = OffsetAngle.constant(0.3, 0.7)
        s = np.linspace(0.0, 1.0, 5)
        np.testing.assert_allclose(angle(s).real, 0.3)
        np.testing.assert_allclose(angle(s).dual, 0.7)
        np.testing.assert_allclose(angle.rate(s).real, 0.0)
        assert angle(0.5).as_tuple() == (0.3, 0.7)
        assert angle.is_constant

    def test_linear(self) -> None:
        angle = OffsetAngle.linear(math.pi / 3, 0.0, 0.0, 0.5)
        assert angle(2.0).as_tuple() == (pytest.approx(math.pi / 3), 1.0)
        assert angle.rate(2.0).as_tuple() == (0.0, 0.5)
        assert not angle.is_constant

    def test_linear_without_slope_is_constant(self) -> None:
        assert OffsetAngle.linear(0.1, 0.2).is_constant

    def test_special(self) -> None:
        assert OffsetAngle.constant(math.pi / 2).is_special(0.0, math.pi / 2)
        assert not OffsetAngle.constant(1.5).is_special(0.0, math.pi / 2)

    def test_periodicity(self) -> None:
        assert OffsetAngle.constant(0.4).is_periodic(0.0, 1.0)
        assert OffsetAngle.linear(0.0, 0.0, 1.0).is_periodic(0.0, 2 * math.pi)
        assert not OffsetAngle.linear(0.0, 0.0, 1.0).is_periodic(0.0, 1.0)
        assert not OffsetAngle.linear(0.0, 0.0, 0.0, 1.0).is_periodic(0.0, 2 * math.pi)

    def test_promotion(self) -> None:
        assert as_offset_angle((0.1, 0.2))(0.0).as_tuple() == (0.1, 0.2)
        assert as_offset_angle(DualScalar(0.3, 0.4))(0.0).as_tuple() == (0.3, 0.4)
        dual = DualAngle(DualScalar(0.5, 0.6), AngleKind.SPACELIKE_ANGLE)
        assert as_offset_angle(dual)(1.0).as_tuple() == (0.5, 0.6)
        angle = OffsetAngle.constant(1.0)
        assert as_offset_angle(angle) is angle


class TestCurvatureAngle:
    """θ̄ = θ̄₀ − ∫k̄₁"""

    def test_hyperboloid(self, eq52: RuledSurface) -> None:
        angle = offset_angle_from_curvature(eq52, 0.4, 0.1, intervals=256)
        s = np.array([0.0, 1.0, 3.0])
        np.testing.assert_allclose(angle(s).real, 0.4 - s / W, atol=1e-10)
        np.testing.assert_allclose(angle(s).dual, 0.1 - C * s / W, atol=1e-10)
        np.testing.assert_allclose(angle.rate(s).real, -1 / W)
        np.testing.assert_allclose(angle.rate(s).dual, -C / W)

    def test_total_angle(self, eq52: RuledSurface) -> None:
        total = total_offset_angle(eq52, 256)
        assert total.isclose(DualScalar(-2 * math.pi / W, -2 * math.pi * C / W), tol=1e-10)

    def test_total_angle_needs_closed_base(self) -> None:
        with pytest.raises(NotClosedError):
            total_offset_angle(helicoid())
