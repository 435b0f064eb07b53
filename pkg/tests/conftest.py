"""
pytest 共通設定とフィクスチャ

各パッケージのテストは、それぞれの tests/conftest.py でフィクスチャを定義
"""

import os
from collections.abc import Generator
from pathlib import Path

import pytest

from mannheim_offsets.shared import config


@pytest.fixture(autouse=True)
def set_env_vars() -> Generator[None, None, None]:
    """テスト用の環境変数を設定（サブプロセスの CLI が読む）"""
    env_vars = {
        "MANNHEIM_LOG_LEVEL": "WARNING",
        "MANNHEIM_QUADRATURE_NODES": "256",  # テスト用に粗いクアドラチャ
        "MANNHEIM_PROBE_POINTS": "32",
    }

    original_env = {}
    for key, value in env_vars.items():
        original_env[key] = os.environ.get(key)
        os.environ[key] = value

    yield

    # 環境変数を元に戻す
    for key, original_value in original_env.items():
        if original_value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = original_value


@pytest.fixture
def coarse_quadrature(monkeypatch: pytest.MonkeyPatch) -> None:
    """同一プロセスで呼ぶ CLI のクアドラチャを粗くする"""
    monkeypatch.setattr(config, "QUADRATURE_NODES", 256)


@pytest.fixture
def hyperboloid_spec(tmp_path: Path) -> Path:
    """基準の timelike 線織面の定義ファイル"""
    path = tmp_path / "hyperboloid.txt"
    path.write_text(
        "\n".join(
            [
                "# k(s) = (0, cos s, sin s), q(s) = (c, -sin s, cos s)",
                "name   = hyperboloid from file",
                "base   = (0, cos(s), sin(s))",
                "ruling = (c, -sin(s), cos(s))",
                "period = 2*pi",
                "c      = 0.5",
                "",
            ]
        ),
        encoding="utf-8",
    )
    return path
