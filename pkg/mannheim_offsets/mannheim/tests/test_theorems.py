"""
積分定理の検証のテスト

θ = 0 のオフセットは実部のフレームが基底と一致するので、λ̄_{q₁} = λ̄_q が厳密に成り立つ。
"""

import math

import pytest

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.mannheim import (
    SIGN_CONVENTION,
    MannheimPair,
    OffsetAngle,
    PairInvariants,
    pair_invariants,
    printed_row,
    verify_pitch_relation,
    verify_projection_areas,
)
from mannheim_offsets.ruled_surface import RuledSurface
from mannheim_offsets.shared.errors import NotClosedError, VariableAngleError

C = 0.5
W = math.sqrt(1 - C * C)
NODES = 256


@pytest.fixture
def oriented_pair(eq52: RuledSurface) -> MannheimPair:
    return MannheimPair.build(eq52, (0.0, 0.8))


class TestPairInvariants:
    """定理に使う双対ピッチ角"""

    def test_oriented_offset(self, oriented_pair: MannheimPair) -> None:
        inv = pair_invariants(oriented_pair, NODES)
        expected = DualScalar(-2 * math.pi * C / W, -2 * math.pi / W)
        assert inv.base.isclose(expected, tol=1e-9)
        assert inv.offset.isclose(expected, tol=1e-8)
        assert inv.h.isclose(0.0, tol=1e-12)
        assert (inv.theta, inv.theta_star) == (0.0, 0.8)

    def test_variable_angle_rejected(self, eq52: RuledSurface) -> None:
        pair = MannheimPair.build(eq52, OffsetAngle.linear(0.0, 0.1, 1.0))
        with pytest.raises(VariableAngleError):
            pair_invariants(pair, NODES)

    def test_open_base_rejected(self, eq52: RuledSurface) -> None:
        pair = MannheimPair.build(eq52.restricted(0.0, 3.0), (0.2, 0.1))
        with pytest.raises(NotClosedError):
            pair_invariants(pair, NODES)

    def test_offset_flipped(self) -> None:
        inv = PairInvariants(
            base=DualScalar(1.0, 2.0),
            h=DualScalar(3.0, 4.0),
            a=DualScalar(5.0, 6.0),
            offset=DualScalar(7.0, 8.0),
            theta=0.1,
            theta_star=0.2,
        )
        flipped = inv.offset_flipped()
        assert flipped.offset.as_tuple() == (-7.0, -8.0)
        assert flipped.base.as_tuple() == (1.0, 2.0)
        assert flipped.angle.as_tuple() == (0.1, 0.2)


class TestPitchRelation:
    """λ̄_{q₁} = λ̄_q cos θ̄ + λ̄_h sin θ̄"""

    def test_oriented_offset_passes(self, oriented_pair: MannheimPair) -> None:
        report = verify_pitch_relation(oriented_pair, NODES)
        assert report.passed, report.failed_rows()
        names = [row.name for row in report.rows]
        assert "λ̄_q1 = λ̄_q cos θ̄ + λ̄_h sin θ̄" in names
        assert "oriented offset: λ_q1 = λ_q" in names
        assert not any(name.startswith("right offset") for name in names)

    def test_own_h_row_is_report_only(self, oriented_pair: MannheimPair) -> None:
        report = verify_pitch_relation(oriented_pair, NODES)
        row = report.rows[-1]
        assert row.name == "φ_h own dual angle of pitch = λ̄_h"
        assert row.enforced is False


PROJECTION_ROWS = 7


class TestProjectionAreas:
    """球面像の射影面積"""

    @pytest.mark.parametrize("angle", [(0.0, 0.8), (math.pi / 2, 0.8), (0.7, 0.3)])
    def test_enforced_rows_pass(self, eq52: RuledSurface, angle) -> None:
        report = verify_projection_areas(MannheimPair.build(eq52, angle), NODES)
        assert report.passed, report.failed_rows()

    def test_one_convention_for_all_enforced_rows(self, oriented_pair: MannheimPair) -> None:
        report = verify_projection_areas(oriented_pair, NODES)
        enforced = [row for row in report.rows if row.enforced]
        assert len(enforced) == PROJECTION_ROWS
        assert {row.convention for row in enforced} == {SIGN_CONVENTION}

    def test_oriented_values(self, oriented_pair: MannheimPair) -> None:
        """θ = 0 では q̃ 方向の射影は 0、h̃ 方向は ε θ* ⟨q̃, d̃⟩"""
        report = verify_projection_areas(oriented_pair, NODES)
        rows = {row.name: row for row in report.rows}
        on_q = rows["2f̄(q1,q) = λ̄_q − λ̄_q1 cos θ̄"]
        assert (on_q.lhs_real, on_q.lhs_dual) == pytest.approx((0.0, 0.0), abs=1e-9)
        on_h = rows["2f̄(q1,h) = λ̄_h − λ̄_q1 sin θ̄"]
        assert (on_h.lhs_real, on_h.lhs_dual) == pytest.approx((0.0, 0.8 * 2 * math.pi * C / W), abs=1e-9)
        on_a = rows["2f̄(q1,a) = λ̄_a"]
        assert (on_a.lhs_real, on_a.lhs_dual) == pytest.approx((-2 * math.pi / W, -2 * math.pi * C / W), abs=1e-9)

    def test_printed_forms_are_report_only(self, oriented_pair: MannheimPair) -> None:
        report = verify_projection_areas(oriented_pair, NODES)
        printed = next(row for row in report.rows if row.name == "2f̄(q1,q) = λ̄_q + λ̄_q1 cos θ̄")
        assert printed.enforced is False
        assert not printed.passed
        assert printed.convention == "λ̄_q1 = +⟨q̃₁, d̃⟩"
        claim = next(row for row in report.rows if row.name == "2f̄(q1,a) = λ̄_h = 0")
        assert claim.enforced is False


class TestPrintedRow:
    """印刷された式の読み替え"""

    def _inv(self) -> PairInvariants:
        return PairInvariants(
            base=DualScalar(1.0, 0.0),
            h=DualScalar(0.0, 0.0),
            a=DualScalar(0.0, 0.0),
            offset=DualScalar(2.0, 0.0),
            theta=0.0,
            theta_star=0.0,
        )

    def _sum(self, i: PairInvariants) -> tuple[float, float]:
        return (float(i.base.real + i.offset.real), 0.0)

    def test_offset_sign_reading(self) -> None:
        # 1 − 2 = −1
        row = printed_row("sum", (-1.0, 0.0), self._sum, self._inv(), 1e-9)
        assert not row.passed
        assert row.enforced is False
        assert row.rhs_real == 3.0
        assert row.convention == "λ̄_q1 = +⟨q̃₁, d̃⟩"

    def test_variant(self) -> None:
        row = printed_row(
            "sum",
            (-3.0, 0.0),
            self._sum,
            self._inv(),
            1e-9,
            variants=[("negated", lambda i: (-self._sum(i)[0], 0.0))],
        )
        assert row.convention == "negated"

    def test_no_reading_matches(self) -> None:
        row = printed_row("sum", (10.0, 0.0), self._sum, self._inv(), 1e-9)
        assert row.convention is None
        assert row.note == "as printed; no reading matches"
