"""共有モジュール: 設定・例外・データモデル・数値ヘルパー"""
