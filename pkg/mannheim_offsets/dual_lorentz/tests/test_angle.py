"""
双対角のテスト

4 つの場合それぞれで、実部が方向の角、双対部が共通法線に沿った距離になることを確認する。
"""

import math

import numpy as np
import pytest

from mannheim_offsets.dual_lorentz import DLVec3, dual_angle, line_from_point_direction
from mannheim_offsets.lorentz3 import E1, E2, E3
from mannheim_offsets.shared.errors import DomainError, NotUnitError
from mannheim_offsets.shared.models import AngleKind


def _line(point: np.ndarray, direction: np.ndarray) -> DLVec3:
    return line_from_point_direction(point, direction).to_dual()


ORIGIN = np.zeros(3)


class TestSpacelikeAngle:
    """spacelike 平面内の 2 直線: ⟨x, y⟩ = cos θ̄"""

    @pytest.mark.parametrize(("theta", "distance"), [(0.4, 0.0), (1.2, 0.75), (2.5, -1.3)])
    def test_angle_and_distance(self, theta: float, distance: float) -> None:
        x = _line(ORIGIN, E2)
        y = _line(distance * E1, math.cos(theta) * E2 + math.sin(theta) * E3)
        angle = dual_angle(x, y)
        assert angle.kind is AngleKind.SPACELIKE_ANGLE
        assert angle.theta == pytest.approx(theta)
        assert angle.theta_star == pytest.approx(-distance, abs=1e-12)
        assert angle.degenerate is False

    def test_parallel_lines_use_common_normal(self) -> None:
        angle = dual_angle(_line(ORIGIN, E2), _line(0.6 * E3, E2))
        assert angle.degenerate is True
        assert angle.theta == 0.0
        assert angle.theta_star == pytest.approx(0.6)

    def test_antiparallel_lines(self) -> None:
        angle = dual_angle(_line(ORIGIN, E2), _line(ORIGIN, -E2))
        assert angle.theta == pytest.approx(math.pi)


class TestHyperbolicAngle:
    """timelike 同士: ⟨x, y⟩ = −cosh θ̄"""

    def test_rapidity(self) -> None:
        t = 0.8
        angle = dual_angle(_line(ORIGIN, E1), _line(ORIGIN, np.array([math.cosh(t), math.sinh(t), 0.0])))
        assert angle.kind is AngleKind.HYPERBOLIC
        assert angle.theta == pytest.approx(t)
        assert angle.theta_star == pytest.approx(0.0, abs=1e-12)

    def test_opposite_time_cones(self) -> None:
        with pytest.raises(DomainError):
            dual_angle(_line(ORIGIN, E1), _line(ORIGIN, -E1))


class TestCentralAngle:
    """timelike 平面内の spacelike 直線: ⟨x, y⟩ = cosh θ̄"""

    def test_rapidity(self) -> None:
        t = 1.1
        angle = dual_angle(_line(ORIGIN, E2), _line(ORIGIN, np.array([math.sinh(t), math.cosh(t), 0.0])))
        assert angle.kind is AngleKind.CENTRAL
        assert angle.theta == pytest.approx(t)


class TestLorentzianTimelikeAngle:
    """spacelike と timelike: ⟨x, y⟩ = sinh θ̄"""

    def test_rapidity(self) -> None:
        t = -0.6
        angle = dual_angle(_line(ORIGIN, E2), _line(ORIGIN, np.array([math.cosh(t), math.sinh(t), 0.0])))
        assert angle.kind is AngleKind.LORENTZIAN_TIMELIKE
        assert angle.theta == pytest.approx(t)

    def test_distance(self) -> None:
        angle = dual_angle(_line(ORIGIN, E2), _line(0.9 * E3, E1))
        assert angle.theta == pytest.approx(0.0)
        assert angle.theta_star == pytest.approx(-0.9)


class TestInvalidArguments:
    """双対単位でない入力"""

    def test_non_unit(self) -> None:
        with pytest.raises(NotUnitError):
            dual_angle(DLVec3.real(E1 + E2), _line(ORIGIN, E2))
