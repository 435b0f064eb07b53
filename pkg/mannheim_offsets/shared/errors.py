"""
例外定義

すべての例外は MannheimError を根とし、CLI はクラス属性 exit_code を
そのまま終了コードとして使う。
- 2: 入力（式・設定・引数）の誤り
- 3: 幾何学的前提条件の違反
- 4: 検証失敗
"""


class MannheimError(Exception):
    """パッケージ共通の基底例外"""

    exit_code = 1


# =============================================================================
# 入力エラー (exit 2)
# =============================================================================


class SpecError(MannheimError):
    """曲面定義・CLI 引数の誤り"""

    exit_code = 2


class ParseError(SpecError):
    """式または設定ファイルの構文エラー（位置付き）"""

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"column {position}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class EvaluationError(SpecError):
    """曲線式の評価に失敗した"""

    def __init__(self, curve: str, message: str):
        self.curve = curve
        super().__init__(f"failed to evaluate {curve}: {message}")


class UsageError(SpecError):
    """コマンドライン引数の誤り"""

    pass


# =============================================================================
# 幾何学エラー (exit 3)
# =============================================================================


class GeometryError(MannheimError):
    """幾何学的前提条件の違反"""

    exit_code = 3


class ZeroDivisorError(GeometryError):
    """純双対数（実部ゼロ）による除算"""

    pass


class DomainError(GeometryError):
    """持ち上げ関数・逆関数の定義域外"""

    pass


class NullDirectionError(GeometryError):
    """null ベクトルを直線の方向に指定した"""

    pass


class ZeroVectorError(GeometryError):
    """零ベクトルは正規化できない"""

    pass


class NotUnitError(GeometryError):
    """双対単位ベクトルでない"""

    pass


class NotOrthonormalError(GeometryError):
    """双対フレームが正規直交でない"""

    pass


class CylindricalPointError(GeometryError):
    """‖q′‖ が消える柱面点"""

    def __init__(self, s: float, message: str | None = None):
        self.s = s
        super().__init__(message or f"cylindrical point at s={s:.15g}")


class NullCentralNormalError(GeometryError):
    """q′ が null（中心法線が null）"""

    def __init__(self, s: float):
        self.s = s
        super().__init__(f"null central normal at s={s:.15g}")


class NullFrameVectorError(GeometryError):
    """フレームベクトルが null（対象外のクラス）"""

    pass


class MixedCausalTypeError(GeometryError):
    """プローブ点間で曲面の型が一定でない"""

    pass


class NotClosedError(GeometryError):
    """閉曲面を要求する演算に開曲面が渡された"""

    pass


class WrongTypeError(GeometryError):
    """曲面の型が演算の前提と異なる"""

    pass


class NotDevelopableError(GeometryError):
    """可展面を要求する演算に歪曲面が渡された"""

    pass


class ConditionNotMetError(GeometryError):
    """可展条件 sin θ − θ* τ cos θ = 0 が満たされない"""

    pass


class RightAngleDegenerateError(GeometryError):
    """sin θ = 0 で閉形式の distribution parameter が極を持つ"""

    pass


class VariableAngleError(GeometryError):
    """定数のオフセット角を要求する定理に可変角が渡された"""

    pass


# =============================================================================
# 検証エラー (exit 4)
# =============================================================================


class VerificationFailedError(MannheimError):
    """強制される検証行のいずれかが不合格"""

    exit_code = 4
