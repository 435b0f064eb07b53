"""
mannheim コマンドのテスト
"""

import csv
import io
import json

import pytest
from pytest_mock import MockerFixture

from mannheim_offsets.cli.catalog import SurfaceSpec, build_surface
from mannheim_offsets.cli.main import build_verification, invariant_rows, main, parse_params
from mannheim_offsets.invariants import compute_invariants
from mannheim_offsets.mannheim import OffsetAngle, offset_angle_from_curvature
from mannheim_offsets.shared.errors import NotClosedError, UsageError, VerificationFailedError


def run(*argv: str) -> tuple[int, str]:
    stream = io.StringIO()
    code = main(list(argv), stream=stream)
    return code, stream.getvalue()


class TestParseParams:
    """--param k=v"""

    def test_values(self) -> None:
        assert parse_params(["c=0.3", " p = 2"]) == {"c": 0.3, "p": 2.0}
        assert parse_params(None) == {}

    @pytest.mark.parametrize("item", ["c", "=1", "c=abc"])
    def test_errors(self, item: str) -> None:
        with pytest.raises(UsageError):
            parse_params([item])


class TestClassify:
    """classify"""

    def test_reference(self) -> None:
        code, out = run("classify", "--builtin", "eq52")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["type"] == "M1Plus"
        assert row["developable"] == "false"
        assert row["striction_is_base"] == "true"
        assert row["closed"] == "true"

    def test_json(self) -> None:
        code, out = run("classify", "--builtin", "cone", "--format", "json")
        assert code == 0
        assert json.loads(out)[0]["developable"] is True

    def test_cylinder_exit_code(self) -> None:
        assert run("classify", "--builtin", "cylinder")[0] == 3


class TestUsageErrors:
    """終了コード 2"""

    def test_no_surface(self) -> None:
        assert run("classify")[0] == 2

    def test_both_surfaces(self) -> None:
        assert run("classify", "--builtin", "eq52", "--spec", "x.txt")[0] == 2

    def test_unknown_builtin(self) -> None:
        assert run("classify", "--builtin", "sphere")[0] == 2

    def test_too_few_nodes(self) -> None:
        assert run("invariants", "--builtin", "eq52", "--nodes", "3")[0] == 2

    @pytest.mark.parametrize("nodes", ["0", "-64"])
    def test_non_positive_nodes_rejected(self, nodes: str) -> None:
        assert run("invariants", "--builtin", "eq52", "--nodes", nodes)[0] == 2
        assert run("verify", "--builtin", "eq52", "--nodes", nodes)[0] == 2

    def test_bad_param(self) -> None:
        assert run("classify", "--builtin", "eq52", "--param", "c")[0] == 2

    def test_offset_needs_out(self) -> None:
        assert run("offset", "--builtin", "eq52")[0] == 2

    def test_bad_theta_expression(self) -> None:
        assert run("verify", "--builtin", "eq52", "--theta", "sin(")[0] == 2

    def test_argparse(self) -> None:
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


class TestInvariants:
    """invariants"""

    def test_rows(self) -> None:
        inv = compute_invariants(build_surface(SurfaceSpec.builtin("eq52")), 256)
        rows = invariant_rows(inv)
        assert len(rows) == 16
        assert rows[0]["quantity"] == "pitch"
        assert rows[0]["real"] == pytest.approx(-7.255197456936871, abs=1e-9)
        assert all(row["nodes"] == 256 for row in rows)

    def test_command(self) -> None:
        code, out = run("invariants", "--builtin", "eq52", "--nodes", "128")
        assert code == 0
        assert len(list(csv.DictReader(io.StringIO(out)))) == 16


class TestVerify:
    """verify"""

    def test_reference_offset(self) -> None:
        spec = SurfaceSpec.builtin("eq52")
        base = build_surface(spec)
        report = build_verification(spec, base, OffsetAngle.constant(0.0, 0.8), 256)
        assert report.passed, report.failed_rows()
        names = [row.name for row in report.rows]
        assert "offset ruling = rotated generator q̃₁" in names
        assert "λ̄_q1 = λ̄_q cos θ̄ + λ̄_h sin θ̄" in names

    def test_variable_angle_skips_theorems(self) -> None:
        spec = SurfaceSpec.builtin("eq52")
        base = build_surface(spec)
        angle = OffsetAngle.linear(0.2, 0.1, 0.5)
        names = [row.name for row in build_verification(spec, base, angle, 256).rows]
        assert "λ̄_q1 = λ̄_q cos θ̄ + λ̄_h sin θ̄" not in names

    def test_curvature_offset_enforces_mannheim_rows(self) -> None:
        spec = SurfaceSpec.builtin("eq52")
        base = build_surface(spec)
        report = build_verification(spec, base, offset_angle_from_curvature(base, 0.5, 0.8), 256)
        assert report.passed, report.failed_rows()
        row = next(r for r in report.rows if r.name == "ã = h̃₁ (Mannheim condition)")
        assert row.enforced and row.passed
        assert "orientation changes" in row.note

    def test_constant_offset_reports_mannheim_rows(self) -> None:
        spec = SurfaceSpec.builtin("eq52")
        base = build_surface(spec)
        report = build_verification(spec, base, OffsetAngle.constant(0.0, 0.8), 256)
        row = next(r for r in report.rows if r.name == "ã = h̃₁ (Mannheim condition)")
        assert row.enforced is False
        assert row.note.startswith("not a Mannheim offset")

    def test_from_curvature_command(self) -> None:
        angle = ("--from-curvature", "--theta", "0.5", "--theta-star", "0.8")
        code, out = run("verify", "--builtin", "eq52", *angle, "--nodes", "256")
        assert code == 0
        rows = csv.DictReader(io.StringIO(out))
        row = next(r for r in rows if r["check"] == "ã = h̃₁ (Mannheim condition)")
        assert (row["mode"], row["status"]) == ("enforced", "pass")

    def test_exit_code(self) -> None:
        code, out = run("verify", "--builtin", "eq52", "--theta", "0", "--theta-star", "0.8", "--nodes", "256")
        assert code == 0
        assert "fail" not in {row["status"] for row in csv.DictReader(io.StringIO(out)) if row["mode"] == "enforced"}


class TestExitCodes:
    """例外クラスの exit_code がそのまま終了コードになる"""

    @pytest.mark.parametrize(
        ("error", "code"),
        [(UsageError("bad"), 2), (NotClosedError("open"), 3), (VerificationFailedError("failed"), 4)],
    )
    def test_error_mapping(self, mocker: MockerFixture, error: Exception, code: int) -> None:
        command = mocker.Mock(side_effect=error)
        mocker.patch.dict("mannheim_offsets.cli.main.COMMANDS", {"classify": command})
        assert run("classify", "--builtin", "eq52")[0] == code
        command.assert_called_once()
