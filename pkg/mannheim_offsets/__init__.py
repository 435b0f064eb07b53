"""
mannheim_offsets

双対ローレンツベクトルによる Minkowski 3 次元空間の線織面ライブラリ。
閉じた運動の積分不変量、Mannheim オフセットの構成と定理の数値検証を行う。
"""

__version__ = "0.1.0"
