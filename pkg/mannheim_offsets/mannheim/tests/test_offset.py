"""
Mannheim オフセット構成のテスト

基準の双曲面 (c = 0.5, w = √0.75) に対する閉形式:
- θ̄ = 0 + εw: β = (−1, cos s + c sin s, sin s − c cos s)、母線は q のまま
- θ̄ = π/2: 母線 (0, −cos s, −sin s)
"""

import math

import numpy as np
import pytest

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.dual_lorentz import DLVec3
from mannheim_offsets.lorentz3 import E1
from mannheim_offsets.mannheim import (
    MANNHEIM_TOLERANCE,
    MannheimPair,
    OffsetAngle,
    h_surface,
    mannheim_orientation,
    normal_orthogonality_residual,
    offset_angle_from_curvature,
    offset_frame,
    offset_surface,
    partner_residual,
    rotated_frame,
    rotated_frame_residual,
)
from mannheim_offsets.ruled_surface import DualFrame, RuledSurface, dual_frame_at, frame_data, stack3
from mannheim_offsets.ruled_surface.standard import timelike_ruling_surface
from mannheim_offsets.shared.errors import NotOrthonormalError, WrongTypeError
from mannheim_offsets.shared.models import SurfaceType

C = 0.5
W = math.sqrt(1 - C * C)


class TestOffsetFrame:
    """双対フレームの回転"""

    def test_zero_angle_is_identity(self, eq52: RuledSurface) -> None:
        frame = dual_frame_at(eq52, eq52.probes(8))
        rotated = offset_frame(frame, DualScalar(0.0, 0.0))
        assert rotated.q.max_abs_difference(frame.q) < 1e-14
        assert rotated.h.max_abs_difference(frame.a) < 1e-14
        assert rotated.a.max_abs_difference(-frame.h) < 1e-14

    def test_right_angle_swaps(self, eq52: RuledSurface) -> None:
        frame = dual_frame_at(eq52, eq52.probes(8))
        rotated = offset_frame(frame, DualScalar(math.pi / 2, 0.0))
        assert rotated.q.max_abs_difference(frame.h) < 1e-12
        assert rotated.a.max_abs_difference(frame.q) < 1e-12
        assert rotated.h.max_abs_difference(frame.a) < 1e-14

    def test_non_orthonormal_rejected(self) -> None:
        bad = DualFrame(DLVec3.real(E1), DLVec3.real(E1), DLVec3.real(E1))
        with pytest.raises(NotOrthonormalError):
            offset_frame(bad, DualScalar(0.1, 0.0))


class TestOffsetSurface:
    """オフセット曲面"""

    def test_oriented_offset_closed_form(self, eq52: RuledSurface) -> None:
        surf = offset_surface(eq52, (0.0, W))
        s = eq52.probes(16)
        expected = stack3(-1.0, np.cos(s) + C * np.sin(s), np.sin(s) - C * np.cos(s))
        np.testing.assert_allclose(surf.base.value(s), expected, atol=1e-12)
        np.testing.assert_allclose(surf.ruling.value(s), eq52.ruling.value(s), atol=1e-12)
        assert surf.closed
        assert surf.surface_type is SurfaceType.M1_PLUS

    def test_right_offset_ruling(self, eq52: RuledSurface) -> None:
        surf = offset_surface(eq52, (math.pi / 2, 0.0))
        s = eq52.probes(16)
        np.testing.assert_allclose(surf.ruling.value(s), stack3(0.0, -np.cos(s), -np.sin(s)), atol=1e-12)

    def test_derivatives_consistent(self, eq52: RuledSurface) -> None:
        surf = offset_surface(eq52, OffsetAngle.linear(0.3, 0.2, 0.1, -0.05))
        assert surf.base.derivative_residual(eq52.span) < 1e-6
        assert surf.ruling.derivative_residual(eq52.span) < 1e-6
        assert not surf.closed

    def test_wrong_type(self) -> None:
        with pytest.raises(WrongTypeError):
            offset_surface(timelike_ruling_surface(2.0), (0.1, 0.0))

    def test_name(self, eq52: RuledSurface) -> None:
        assert offset_surface(eq52, (0.0, 0.0), name="copy").name == "copy"
        assert "offset of hyperboloid" in offset_surface(eq52, (0.0, 0.0)).name


class TestPointwiseIdentities:
    """点ごとの恒等式"""

    def test_offset_ruling_is_rotated_generator(self, eq52: RuledSurface) -> None:
        pair = MannheimPair.build(eq52, (math.pi / 3, 0.4))
        assert rotated_frame_residual(pair) < 1e-9

    def test_rotated_frame_real_part(self, eq52: RuledSurface) -> None:
        pair = MannheimPair.build(eq52, (0.7, 0.0))
        s = pair.probes(8)
        np.testing.assert_allclose(rotated_frame(pair, s).q.real_part, pair.offset_surface.ruling.value(s), atol=1e-12)

    def test_constant_angle_misses_normal_condition(self, eq52: RuledSurface) -> None:
        # ⟨dq̃₁, ã₁⟩ = −θ̄′ − k̄₁ = −k̄₁
        pair = MannheimPair.build(eq52, (0.7, 0.2))
        assert normal_orthogonality_residual(pair) == pytest.approx(1 / W, abs=1e-9)

    def test_curvature_angle_is_mannheim(self, eq52: RuledSurface) -> None:
        base = eq52.restricted(0.0, 1.0)
        pair = MannheimPair.build(base, offset_angle_from_curvature(base, 2.0, 0.3, intervals=256))
        assert normal_orthogonality_residual(pair) < 1e-9
        assert partner_residual(pair) < 1e-8
        # h₁ = ã is timelike
        assert pair.offset_surface.surface_type is SurfaceType.M2_PLUS

    def test_constant_offset_is_not_partner(self, eq52: RuledSurface) -> None:
        pair = MannheimPair.build(eq52, (0.0, 0.3))
        assert partner_residual(pair) > 0.1
        assert not pair.is_mannheim


class TestCurvatureOffset:
    """θ̄ = θ̄₀ − ∫k̄₁ の Mannheim オフセット (一周期)"""

    # sin θ = 0 (s ≈ 0.433, 3.154, 5.874) の近くを避ける
    S = np.array([0.1, 1.0, 2.0, 2.8, 3.6, 4.5, 5.4, 6.2])

    @pytest.fixture
    def pair(self, eq52: RuledSurface) -> MannheimPair:
        return MannheimPair.from_curvature(eq52, 0.5, 0.8)

    def test_is_mannheim(self, pair: MannheimPair) -> None:
        assert pair.is_mannheim
        assert normal_orthogonality_residual(pair) < MANNHEIM_TOLERANCE

    def test_central_normal_is_a(self, pair: MannheimPair) -> None:
        """h̃₁ = ±ã (実部・双対部とも)"""
        assert partner_residual(pair, self.S) < 1e-8

    def test_orientation_flips(self, pair: MannheimPair) -> None:
        # θ = 0.5 − s/w; k₂ = c/w > 0
        sigma = mannheim_orientation(pair, self.S)
        np.testing.assert_array_equal(sigma, [1, -1, -1, -1, 1, 1, 1, -1])

    def test_without_orientation_fails(self, pair: MannheimPair) -> None:
        a = frame_data(pair.base_surface, self.S).a_tilde
        h1 = frame_data(pair.offset_surface, self.S).h_tilde
        assert a.max_abs_difference(h1) > 1.0


class TestHSurface:
    """中心法線の軌跡面"""

    def test_ruling_is_central_normal(self, eq52: RuledSurface) -> None:
        surf = h_surface(eq52)
        s = eq52.probes(8)
        np.testing.assert_allclose(surf.ruling.value(s), stack3(0.0, -np.cos(s), -np.sin(s)), atol=1e-12)
        np.testing.assert_allclose(surf.base.value(s), eq52.base.value(s), atol=1e-12)
        assert surf.closed
