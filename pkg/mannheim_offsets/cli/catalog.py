"""
曲面カタログと曲面定義ファイル

- 組み込み曲面（基準の timelike 線織面、印刷されたオフセット 3 種、錐面、柱面、接線可展面）
- key = value 形式の曲面定義ファイルの読み込み
- 印刷されたオフセットの式と、実際に構成したオフセットとの差の報告

定義ファイルの文法:

    # コメント
    name   = my surface
    base   = (0, cos(s), sin(s))
    ruling = (c, -sin(s), cos(s))
    period = 2*pi            # 閉曲面
    span   = 0, 1            # 開曲面（period がない場合は必須）
    c      = 0.5             # それ以外のキーはパラメータ
"""

import logging
import math
from collections.abc import Mapping
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, Field, ValidationError, model_validator

from mannheim_offsets.cli.expressions import curve_from_expressions, parse, scalar_function, split_components
from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.mannheim import OffsetAngle, offset_surface
from mannheim_offsets.ruled_surface import RuledSurface, mesh
from mannheim_offsets.ruled_surface.standard import (
    TWO_PI,
    circular_cone,
    circular_cylinder,
    hyperboloid,
    tangent_developable,
)
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import DomainError, ParseError, SpecError, UsageError
from mannheim_offsets.shared.models import BuiltinId, CheckRow, SurfaceKind, VerificationReport

logger = logging.getLogger(__name__)

_RESERVED_KEYS = {"name", "base", "ruling", "period", "span"}

# 組み込み曲面の既定パラメータ
DEFAULT_PARAMETERS: dict[BuiltinId, dict[str, float]] = {
    BuiltinId.EQ52: {"c": 0.5},
    BuiltinId.EQ53: {"c": 0.5},
    BuiltinId.EQ54: {"c": 0.5},
    BuiltinId.EQ55: {"c": 0.5},
    BuiltinId.CONE: {"c": 0.5},
    BuiltinId.CYLINDER: {"radius": 1.0},
    BuiltinId.TANGENT_DEV: {"p": 0.1},
}

# 印刷どおりのオフセット曲面 (base, ruling)
PRINTED_OFFSETS: dict[BuiltinId, tuple[tuple[str, str, str], tuple[str, str, str]]] = {
    BuiltinId.EQ53: (
        ("1", "cos(s) + c*sin(s)", "sin(s) + c*cos(s)"),
        ("c/sqrt(1 - c^2)", "-sin(s)/sqrt(1 - c^2)", "cos(s)/sqrt(1 - c^2)"),
    ),
    BuiltinId.EQ54: (
        ("1", "cos(s) + c*sin(s)", "sin(s) + c*cos(s)"),
        ("c/sqrt(1 - c^2)", "-cos(s)", "-sin(s)"),
    ),
    BuiltinId.EQ55: (
        ("s", "cos(s) + c*s*sin(s)", "sin(s) + c*s*cos(s)"),
        (
            "c/(2*sqrt(1 - c^2))",
            "-c/(2*sqrt(1 - c^2))*sin(s) - sqrt(3)/2*cos(s)",
            "1/(2*sqrt(1 - c^2))*cos(s) - sqrt(3)/2*sin(s)",
        ),
    ),
}

# 構成したオフセットの閉形式（a = q × h, β = α − θ* a）
DERIVED_OFFSETS: dict[BuiltinId, tuple[tuple[str, str, str], tuple[str, str, str]]] = {
    BuiltinId.EQ53: (
        ("-1", "cos(s) + c*sin(s)", "sin(s) - c*cos(s)"),
        ("c/sqrt(1 - c^2)", "-sin(s)/sqrt(1 - c^2)", "cos(s)/sqrt(1 - c^2)"),
    ),
    BuiltinId.EQ54: (
        ("-1", "cos(s) + c*sin(s)", "sin(s) - c*cos(s)"),
        ("0", "-cos(s)", "-sin(s)"),
    ),
    BuiltinId.EQ55: (
        ("-s", "cos(s) + c*s*sin(s)", "sin(s) - c*s*cos(s)"),
        (
            "c/(2*sqrt(1 - c^2))",
            "-sin(s)/(2*sqrt(1 - c^2)) - sqrt(3)/2*cos(s)",
            "cos(s)/(2*sqrt(1 - c^2)) - sqrt(3)/2*sin(s)",
        ),
    ),
}

# 印刷されたオフセットの双対オフセット角 (θ, θ*) を s の式で
OFFSET_ANGLES: dict[BuiltinId, tuple[str, str]] = {
    BuiltinId.EQ53: ("0", "sqrt(1 - c^2)"),
    BuiltinId.EQ54: ("pi/2", "sqrt(1 - c^2)"),
    BuiltinId.EQ55: ("pi/3", "sqrt(1 - c^2)*s"),
}


class SurfaceSpec(BaseModel):
    """曲面定義（組み込み、または式による定義）"""

    name: str = ""
    kind: SurfaceKind
    builtin_id: BuiltinId | None = None
    parameters: dict[str, float] = Field(default_factory=dict)
    base: tuple[str, str, str] | None = Field(default=None, description="k(s) の 3 成分の式")
    ruling: tuple[str, str, str] | None = Field(default=None, description="q(s) の 3 成分の式")
    period: float | None = None
    span: tuple[float, float] | None = None

    @model_validator(mode="after")
    def _check_kind(self) -> "SurfaceSpec":
        if self.kind is SurfaceKind.BUILTIN and self.builtin_id is None:
            raise ValueError("a builtin surface needs builtin_id")
        if self.kind is SurfaceKind.PARAMETRIC:
            if self.base is None or self.ruling is None:
                raise ValueError("a parametric surface needs base and ruling expressions")
            if self.period is None and self.span is None:
                raise ValueError("an open parametric surface needs a span")
        return self

    @classmethod
    def builtin(cls, builtin_id: BuiltinId | str, parameters: Mapping[str, float] | None = None) -> "SurfaceSpec":
        """
        組み込み曲面の定義を作る

        Raises:
            UsageError: 未知の曲面 ID またはパラメータ
        """
        try:
            ident = BuiltinId(builtin_id)
        except ValueError as e:
            known = ", ".join(b.value for b in BuiltinId)
            raise UsageError(f"unknown builtin {builtin_id!r} (known: {known})") from e
        params = dict(DEFAULT_PARAMETERS[ident])
        for key, value in (parameters or {}).items():
            if key not in params:
                raise UsageError(f"builtin {ident.value} has no parameter {key!r}")
            params[key] = float(value)
        return cls(name=ident.value, kind=SurfaceKind.BUILTIN, builtin_id=ident, parameters=params)


# =============================================================================
# Definition files
# =============================================================================


def _number(text: str, line: int) -> float:
    """pi などを含む定数式を評価する"""
    try:
        expr = parse(text)
    except ParseError as e:
        raise ParseError(e.message, position=e.position, line=line) from e
    if expr.free_symbols:
        raise ParseError(f"{text!r} must not depend on s", line=line)
    return float(expr)


def parse_spec_text(text: str, overrides: Mapping[str, float] | None = None) -> SurfaceSpec:
    """
    key = value 形式の定義を解析する

    Raises:
        ParseError: 行番号付きの構文エラー
        SpecError: 必須キーの欠落
    """
    entries: dict[str, tuple[str, int]] = {}
    parameters: dict[str, float] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", line=number)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key.isidentifier():
            raise ParseError(f"invalid key {key!r}", line=number)
        if key in entries or key in parameters:
            raise ParseError(f"duplicate key {key!r}", line=number)
        if key in _RESERVED_KEYS:
            entries[key] = (value, number)
        else:
            parameters[key] = _number(value, number)
    parameters.update({k: float(v) for k, v in (overrides or {}).items()})

    for required in ("base", "ruling"):
        if required not in entries:
            raise SpecError(f"surface definition lacks {required!r}")

    def components(key: str) -> tuple[str, str, str]:
        value, number = entries[key]
        try:
            parts = split_components(value)
        except ParseError as e:
            raise ParseError(e.message, position=e.position, line=number) from e
        if len(parts) != 3:
            raise ParseError(f"{key} needs three components, got {len(parts)}", line=number)
        return parts[0], parts[1], parts[2]

    period = None
    if "period" in entries:
        period = _number(*entries["period"])
    span = None
    if "span" in entries:
        value, number = entries["span"]
        bounds = split_components(value)
        if len(bounds) != 2:
            raise ParseError("span needs two bounds", line=number)
        span = (_number(bounds[0], number), _number(bounds[1], number))

    try:
        return SurfaceSpec(
            name=entries.get("name", ("", 0))[0],
            kind=SurfaceKind.PARAMETRIC,
            parameters=parameters,
            base=components("base"),
            ruling=components("ruling"),
            period=period,
            span=span,
        )
    except ValidationError as e:
        raise SpecError(f"invalid surface definition: {e.errors()[0]['msg']}") from e


def load_spec(path: Path, overrides: Mapping[str, float] | None = None) -> SurfaceSpec:
    """定義ファイルを読み込む"""
    logger.info(f"reading surface definition {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    return parse_spec_text(text, overrides)


# =============================================================================
# Surfaces
# =============================================================================


def _expression_surface(
    name: str,
    base: tuple[str, str, str],
    ruling: tuple[str, str, str],
    parameters: Mapping[str, float],
    period: float | None,
    span: tuple[float, float] | None = None,
) -> RuledSurface:
    return RuledSurface.from_curves(
        curve_from_expressions("base", base, parameters, period),
        curve_from_expressions("ruling", ruling, parameters, period),
        name=name,
        span=span,
    )


def build_surface(spec: SurfaceSpec) -> RuledSurface:
    """
    定義から曲面を組み立てる

    Raises:
        ParseError / EvaluationError: 式の誤り
        DomainError: パラメータが定義域外
    """
    params = spec.parameters
    if spec.kind is SurfaceKind.PARAMETRIC:
        assert spec.base is not None and spec.ruling is not None
        return _expression_surface(spec.name, spec.base, spec.ruling, params, spec.period, spec.span)

    ident = spec.builtin_id
    if ident is BuiltinId.EQ52:
        return hyperboloid(params["c"])
    if ident is BuiltinId.CONE:
        return circular_cone(params["c"])
    if ident is BuiltinId.CYLINDER:
        return circular_cylinder(params["radius"])
    if ident is BuiltinId.TANGENT_DEV:
        return tangent_developable(params["p"])
    assert ident is not None
    base, ruling = PRINTED_OFFSETS[ident]
    if abs(params["c"]) >= 1.0:
        raise DomainError(f"{ident.value} needs |c| < 1, got c={params['c']}")
    # eq55 の基底曲線は s に比例する成分を持つので開曲面
    period = None if ident is BuiltinId.EQ55 else TWO_PI
    return _expression_surface(ident.value, base, ruling, params, period, (0.0, TWO_PI))


def offset_angle_from_text(
    theta: str, theta_star: str, parameters: Mapping[str, float] | None = None
) -> OffsetAngle:
    """θ, θ* を s の式から OffsetAngle にする（両方定数なら定数角）"""
    real = scalar_function("theta", theta, parameters)
    dual = scalar_function("theta_star", theta_star, parameters)
    if real.is_constant and dual.is_constant:
        return OffsetAngle.constant(float(real.expr), float(dual.expr))

    def value(s: ArrayLike) -> DualScalar:
        return DualScalar(real.value(s), dual.value(s))

    def rate(s: ArrayLike) -> DualScalar:
        return DualScalar(real.d1(s), dual.d1(s))

    return OffsetAngle.from_functions(value, rate, f"({theta})+ε({theta_star})")


# =============================================================================
# Printed vs constructed offsets
# =============================================================================


def deviation_report(
    builtin_id: BuiltinId | str,
    parameters: Mapping[str, float] | None = None,
    s_samples: int = 64,
    v_samples: int = 9,
    v_range: tuple[float, float] = (-1.0, 1.0),
) -> VerificationReport:
    """
    印刷されたオフセット曲面と、基準曲面から構成したオフセットとの比較

    構成したオフセットと閉形式の一致は強制行、印刷どおりの式との差は報告のみ。

    Raises:
        UsageError: オフセットでない組み込み曲面
    """
    spec = SurfaceSpec.builtin(builtin_id, parameters)
    ident = spec.builtin_id
    if ident not in PRINTED_OFFSETS:
        raise UsageError(f"{builtin_id} is not a printed offset")
    params = spec.parameters
    base = hyperboloid(params["c"])
    angle = offset_angle_from_text(*OFFSET_ANGLES[ident], params)
    constructed = offset_surface(base, angle, name=f"constructed {ident.value}")
    printed = build_surface(spec)
    derived_base, derived_ruling = DERIVED_OFFSETS[ident]
    derived = _expression_surface(f"derived {ident.value}", derived_base, derived_ruling, params, None, base.span)

    grid = mesh(constructed, s_samples, v_range, v_samples)
    report = VerificationReport(title=f"{ident.value}: printed vs constructed offset")
    for name, other, enforced in (
        ("constructed offset = closed form (β = α − θ*a, q₁ = cos θ q + sin θ h)", derived, True),
        (f"constructed offset = printed {ident.value}", printed, False),
    ):
        residual = float(np.max(np.abs(mesh(other, s_samples, v_range, v_samples) - grid)))
        report.rows.append(
            CheckRow(
                name=name,
                lhs_real=residual,
                rhs_real=0.0,
                residual=residual,
                passed=math.isfinite(residual) and residual < config.UNIT_TOLERANCE,
                enforced=enforced,
                note=f"max vertex deviation on a {s_samples}x{v_samples} mesh",
            )
        )
    logger.info(f"{report.title}: passed={report.passed}")
    return report
