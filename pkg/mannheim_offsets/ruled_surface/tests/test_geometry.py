"""
線織面の点ごとの幾何のテスト

基準の双曲面 k(s) = (0, cos s, sin s), q(s) = (c, −sin s, cos s)/√(1 − c²) では
striction 曲線は底曲線、drall は −c、k₁ = 1/w、k₂ = c/w (w = √(1 − c²))。
"""

import math

import numpy as np
import pytest

from mannheim_offsets.dual_lorentz import dcross, dinner
from mannheim_offsets.lorentz3 import inner
from mannheim_offsets.ruled_surface import (
    ArcLengthTable,
    ParamCurve,
    RuledSurface,
    classify_surface,
    drall,
    dual_frame_at,
    frame_at,
    frame_data,
    is_developable,
    max_drall,
    mesh,
    stack3,
    striction_curve,
)
from mannheim_offsets.ruled_surface.standard import (
    TWO_PI,
    circular_cone,
    circular_cylinder,
    frenet_developable,
    helicoid,
    hyperboloid,
    tangent_developable,
    timelike_ruling_surface,
)
from mannheim_offsets.shared.errors import CylindricalPointError, DomainError, UsageError
from mannheim_offsets.shared.models import SurfaceType

C = 0.5
W = math.sqrt(1.0 - C * C)


@pytest.fixture
def surf() -> RuledSurface:
    return hyperboloid(C)


class TestRuledSurface:
    """RuledSurface"""

    def test_closed(self, surf: RuledSurface) -> None:
        assert surf.closed is True
        assert surf.period == pytest.approx(TWO_PI)
        assert surf.span == (0.0, pytest.approx(TWO_PI))

    def test_ruling_is_unit(self, surf: RuledSurface) -> None:
        s = surf.probes()
        q = surf.ruling.value(s)
        np.testing.assert_allclose(inner(q, q), 1.0)
        np.testing.assert_allclose(q, stack3(C, -np.sin(s), np.cos(s)) / W)

    def test_point(self, surf: RuledSurface) -> None:
        p = surf.point(0.0, 2.0)
        np.testing.assert_allclose(p, [2 * C / W, 1.0, 2.0 / W])

    def test_open_surface_needs_span(self) -> None:
        line = ParamCurve(lambda s: stack3(s, 0.0, 0.0), lambda s: stack3(1.0, 0.0, 0.0), lambda s: stack3(0.0, 0.0, 0.0))
        with pytest.raises(UsageError):
            RuledSurface.from_curves(line, line)

    def test_restricted_is_open(self, surf: RuledSurface) -> None:
        part = surf.restricted(0.5, 1.5)
        assert part.closed is False
        assert part.span == (0.5, 1.5)
        assert part.probes(3)[-1] == 1.5

    def test_probes_exclude_period_end(self, surf: RuledSurface) -> None:
        assert surf.probes(8)[-1] < TWO_PI

    def test_reversed_keeps_drall(self, surf: RuledSurface) -> None:
        s = np.array([0.2, 1.4])
        np.testing.assert_allclose(drall(surf.reversed(), -s), drall(surf, s))

    def test_domain(self) -> None:
        with pytest.raises(DomainError):
            hyperboloid(1.0)
        with pytest.raises(DomainError):
            tangent_developable(0.5)
        with pytest.raises(DomainError):
            timelike_ruling_surface(0.5)


class TestFrame:
    """フレームと構造係数"""

    def test_reference_frame(self, surf: RuledSurface) -> None:
        s = 0.7
        f = frame_at(surf, s)
        np.testing.assert_allclose(f.q, [C / W, -math.sin(s) / W, math.cos(s) / W])
        np.testing.assert_allclose(f.h, [0.0, -math.cos(s), -math.sin(s)])
        np.testing.assert_allclose(f.a, [1 / W, -C * math.sin(s) / W, C * math.cos(s) / W])
        assert f.signature == (1, 1, -1)

    def test_reference_coefficients(self, surf: RuledSurface) -> None:
        f = frame_at(surf, 1.3)
        assert f.k1 == pytest.approx(1 / W)
        assert f.k2 == pytest.approx(C / W)
        assert f.k1_dual == pytest.approx(C / W)
        assert f.k2_dual == pytest.approx(1 / W)
        assert f.rate == pytest.approx(1.0)
        assert f.sigma == pytest.approx(math.asinh(-C / W))
        assert f.sigma_in_model is True

    def test_structural_equations(self, surf: RuledSurface) -> None:
        d = frame_data(surf, surf.probes())
        col = np.newaxis
        np.testing.assert_allclose(d.dq, d.k1[..., col] * d.h, atol=1e-12)
        np.testing.assert_allclose(d.dh, -d.k1[..., col] * d.q + d.k2[..., col] * d.a, atol=1e-10)
        # M1Plus: a′ = k₂ h
        np.testing.assert_allclose(d.da, d.k2[..., col] * d.h, atol=1e-10)

    def test_striction_is_base_circle(self, surf: RuledSurface) -> None:
        s = surf.probes()
        np.testing.assert_allclose(striction_curve(surf, s), surf.base.value(s), atol=1e-12)

    def test_cylindrical_point(self) -> None:
        with pytest.raises(CylindricalPointError):
            frame_at(circular_cylinder(), 0.0)

    def test_stationary_striction_uses_raw_rates(self) -> None:
        f = frame_at(circular_cone(C), 0.4)
        assert f.rate == pytest.approx(0.0, abs=1e-12)
        assert f.k1 == pytest.approx(1 / W)
        assert f.sigma == 0.0

    def test_frenet_developable_frame(self) -> None:
        surf = frenet_developable(lambda s: np.ones_like(np.asarray(s, dtype=float)),
                                  lambda s: 0.3 * np.ones_like(np.asarray(s, dtype=float)), (0.0, 2.0))
        f = frame_at(surf, 0.8)
        assert f.k1 == pytest.approx(1.0, abs=1e-8)
        assert f.k2 == pytest.approx(0.3, abs=1e-8)
        assert f.rate == pytest.approx(1.0, abs=1e-8)


class TestDualFrame:
    """E. Study 像のフレーム"""

    def test_orthonormal(self, surf: RuledSurface) -> None:
        q, h, a = dual_frame_at(surf, surf.probes()).as_tuple()
        for x, y, expected in ((q, q, 1.0), (h, h, 1.0), (a, a, -1.0), (q, h, 0.0), (h, a, 0.0), (q, a, 0.0)):
            g = dinner(x, y)
            np.testing.assert_allclose(g.real, expected, atol=1e-12)
            np.testing.assert_allclose(g.dual, 0.0, atol=1e-12)

    def test_a_is_q_cross_h(self, surf: RuledSurface) -> None:
        q, h, a = dual_frame_at(surf, surf.probes()).as_tuple()
        assert dcross(q, h).max_abs_difference(a) < 1e-12

    @pytest.mark.parametrize("factory", [lambda: hyperboloid(C), lambda: tangent_developable(0.1)])
    def test_pfaffian_moves_the_frame(self, factory) -> None:
        surf = factory()
        d = frame_data(surf, surf.probes(16))
        for x, dx in ((d.q_tilde, d.dq_tilde), (d.h_tilde, d.dh_tilde), (d.a_tilde, d.da_tilde)):
            assert dcross(d.psi, x).max_abs_difference(dx) < 1e-8


class TestDrall:
    """distribution parameter"""

    def test_hyperboloid(self, surf: RuledSurface) -> None:
        np.testing.assert_allclose(drall(surf, surf.probes()), -C, atol=1e-12)
        assert max_drall(surf) == pytest.approx(C)
        assert is_developable(surf) is False

    def test_helicoid_drall_is_pitch(self) -> None:
        surf = helicoid(0.25)
        np.testing.assert_allclose(drall(surf, surf.probes()), 0.25, atol=1e-12)

    def test_developables(self) -> None:
        assert is_developable(circular_cone(C))
        assert is_developable(tangent_developable(0.1))


class TestClassification:
    """型分類"""

    def test_types(self) -> None:
        assert classify_surface(hyperboloid(C)) is SurfaceType.M1_PLUS
        assert classify_surface(timelike_ruling_surface(2.0)) is SurfaceType.M1_MINUS
        assert classify_surface(tangent_developable(0.1)) is SurfaceType.M1_PLUS
        assert classify_surface(helicoid()) is SurfaceType.M1_PLUS

    def test_m2_plus(self) -> None:
        ruling = ParamCurve(
            lambda s: stack3(np.sinh(s), np.cosh(s), 0.0),
            lambda s: stack3(np.cosh(s), np.sinh(s), 0.0),
            lambda s: stack3(np.sinh(s), np.cosh(s), 0.0),
        )
        surf = RuledSurface.from_curves(ParamCurve.constant((0.0, 0.0, 0.0)), ruling, span=(-1.0, 1.0))
        assert classify_surface(surf) is SurfaceType.M2_PLUS

    def test_cached_property(self, surf: RuledSurface) -> None:
        assert surf.surface_type is SurfaceType.M1_PLUS


class TestMesh:
    """メッシュ格子"""

    def test_shape_and_corners(self, surf: RuledSurface) -> None:
        grid = mesh(surf, 5, (-1.0, 1.0), 3)
        assert grid.shape == (5, 3, 3)
        np.testing.assert_allclose(grid[0, 0], surf.point(0.0, -1.0))
        np.testing.assert_allclose(grid[-1, -1], surf.point(TWO_PI, 1.0))

    def test_too_few_samples(self, surf: RuledSurface) -> None:
        with pytest.raises(UsageError) as exc:
            mesh(surf, 1, (-1.0, 1.0), 3)
        assert exc.value.exit_code == 2


class TestArcLength:
    """striction 曲線の弧長"""

    def test_circle(self, surf: RuledSurface) -> None:
        table = ArcLengthTable(surf, 256)
        assert table.length == pytest.approx(TWO_PI, rel=1e-9)
        assert float(table.parameter(math.pi)) == pytest.approx(math.pi, rel=1e-6)
        assert float(table.arc_length(1.0)) == pytest.approx(1.0, rel=1e-6)
