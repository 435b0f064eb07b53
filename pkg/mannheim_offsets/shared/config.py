"""
共有設定

環境変数（.env ファイルにも対応）から数値許容誤差・クアドラチャ設定を読み込む。
ライブラリ内部では ``config.NAME`` の形で呼び出し時に参照するため、
テストから ``monkeypatch.setattr`` で上書きできる。
"""

import os

from dotenv import load_dotenv

load_dotenv()

# ログ設定（CLI のみがハンドラを構成する）
LOG_LEVEL = os.environ.get("MANNHEIM_LOG_LEVEL", "WARNING")

# 因果的性格（spacelike / timelike / null）の判定しきい値
NULL_TOLERANCE = float(os.environ.get("MANNHEIM_NULL_TOLERANCE", "1e-10"))

# ‖q′‖ がこれ以下なら柱面点とみなす
CYLINDRICAL_TOLERANCE = float(os.environ.get("MANNHEIM_CYLINDRICAL_TOLERANCE", "1e-9"))

# 双対数の除算で実部ゼロとみなすしきい値
ZERO_DIVISOR_TOLERANCE = float(os.environ.get("MANNHEIM_ZERO_DIVISOR_TOLERANCE", "1e-12"))

# 双対単位ベクトル・正規直交性の判定
UNIT_TOLERANCE = float(os.environ.get("MANNHEIM_UNIT_TOLERANCE", "1e-9"))

# クアドラチャ（周期あたりの Simpson 区間数）
QUADRATURE_NODES = int(os.environ.get("MANNHEIM_QUADRATURE_NODES", "4096"))
ARC_LENGTH_NODES = int(os.environ.get("MANNHEIM_ARC_LENGTH_NODES", "1024"))
MIN_QUADRATURE_NODES = 16

# 分類・点ごとの検査に使うプローブ点数
PROBE_POINTS = int(os.environ.get("MANNHEIM_PROBE_POINTS", "64"))

# 数値微分（5点中心差分）の刻み幅
FD_STEP = float(os.environ.get("MANNHEIM_FD_STEP", "1e-3"))

# 検証行の合格しきい値
VERIFY_TOLERANCE = float(os.environ.get("MANNHEIM_VERIFY_TOLERANCE", "1e-6"))

# |δ| がこれ未満なら可展面
DEVELOPABLE_TOLERANCE = float(os.environ.get("MANNHEIM_DEVELOPABLE_TOLERANCE", "1e-8"))
