"""
共有データモデル

列挙型と検証レポート用の Pydantic モデル。
数値の値型（DualScalar, DLVec3 など）は各モジュールの dataclass で定義する。
"""

import math
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, computed_field

# =============================================================================
# Enum Definitions
# =============================================================================


class CausalCharacter(str, Enum):
    """ベクトルの因果的性格"""

    SPACELIKE = "spacelike"  # ⟨a,a⟩ > 0 または a = 0
    TIMELIKE = "timelike"  # ⟨a,a⟩ < 0
    NULL = "null"  # ⟨a,a⟩ = 0, a ≠ 0


class TimeOrientation(str, Enum):
    """timelike ベクトルの時間的向き"""

    FUTURE = "future"  # x1 > 0
    PAST = "past"  # x1 < 0


class SurfaceType(str, Enum):
    """線織面の型（h, q の因果的性格による）"""

    M1_MINUS = "M1Minus"  # h spacelike, q timelike
    M1_PLUS = "M1Plus"  # h, q ともに spacelike
    M2_PLUS = "M2Plus"  # h timelike, q spacelike

    @property
    def signature(self) -> tuple[int, int, int]:
        """フレーム (q, h, a) の符号 (ε_q, ε_h, ε_a)"""
        return _SIGNATURES[self]


_SIGNATURES = {
    SurfaceType.M1_MINUS: (-1, 1, 1),
    SurfaceType.M1_PLUS: (1, 1, -1),
    SurfaceType.M2_PLUS: (1, -1, 1),
}


class AngleKind(str, Enum):
    """双対角の種類"""

    HYPERBOLIC = "hyperbolic"  # timelike 同士
    CENTRAL = "central"  # spacelike 同士、timelike 平面
    SPACELIKE_ANGLE = "spacelike_angle"  # spacelike 同士、spacelike 平面
    LORENTZIAN_TIMELIKE = "lorentzian_timelike"  # spacelike と timelike


class SurfaceKind(str, Enum):
    """曲面定義の種類"""

    BUILTIN = "builtin"
    PARAMETRIC = "parametric"


class BuiltinId(str, Enum):
    """組み込み曲面カタログ"""

    EQ52 = "eq52"  # 基準の timelike 線織面
    EQ53 = "eq53"  # oriented オフセット（印刷どおり）
    EQ54 = "eq54"  # right オフセット（印刷どおり）
    EQ55 = "eq55"  # θ̄ = π/3 + ε√(1−c²)s のオフセット（印刷どおり）
    CONE = "cone"
    CYLINDER = "cylinder"
    TANGENT_DEV = "tangent_dev"  # 閉じた接線可展面


# =============================================================================
# Report Models
# =============================================================================


class CheckRow(BaseModel):
    """検証表の 1 行"""

    name: str = Field(description="恒等式の名前")
    lhs_real: float
    lhs_dual: float = 0.0
    rhs_real: float
    rhs_dual: float = 0.0
    residual: float = Field(description="実部・双対部の最大絶対誤差")
    passed: bool
    enforced: bool = Field(default=True, description="False なら報告のみ")
    convention: str | None = Field(default=None, description="一致した符号規約")
    note: str = ""

    @classmethod
    def compare(
        cls,
        name: str,
        lhs: tuple[float, float],
        rhs: tuple[float, float],
        tolerance: float,
        *,
        enforced: bool = True,
        convention: str | None = None,
        note: str = "",
    ) -> "CheckRow":
        """(実部, 双対部) の組を比較して行を作る"""
        residual = max(abs(lhs[0] - rhs[0]), abs(lhs[1] - rhs[1]))
        return cls(
            name=name,
            lhs_real=lhs[0],
            lhs_dual=lhs[1],
            rhs_real=rhs[0],
            rhs_dual=rhs[1],
            residual=residual,
            passed=bool(math.isfinite(residual) and residual < tolerance),
            enforced=enforced,
            convention=convention,
            note=note,
        )


class VerificationReport(BaseModel):
    """検証レポート"""

    title: str
    rows: list[CheckRow] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """強制行がすべて合格なら True（報告のみの行は無視）"""
        return all(row.passed for row in self.rows if row.enforced)

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        """行を連結した新しいレポートを返す"""
        return VerificationReport(title=self.title, rows=[*self.rows, *other.rows])

    def failed_rows(self) -> list[CheckRow]:
        return [row for row in self.rows if row.enforced and not row.passed]

    def to_table(self) -> list[dict[str, Any]]:
        """CLI 出力用の行リスト"""
        table = []
        for row in self.rows:
            table.append(
                {
                    "check": row.name,
                    "lhs_real": row.lhs_real,
                    "lhs_dual": row.lhs_dual,
                    "rhs_real": row.rhs_real,
                    "rhs_dual": row.rhs_dual,
                    "residual": row.residual,
                    "status": "pass" if row.passed else "fail",
                    "mode": "enforced" if row.enforced else "report-only",
                    "convention": row.convention or "",
                    "note": row.note,
                }
            )
        return table
