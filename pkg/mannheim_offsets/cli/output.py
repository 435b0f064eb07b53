"""
出力: 表 (CSV / JSON) と OBJ メッシュ

浮動小数点数は常に有効数字 15 桁で書き出すので、同じ入力からは同じバイト列が出る。
"""

import csv
import io
import json
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import NDArray

from mannheim_offsets.shared.errors import UsageError

logger = logging.getLogger(__name__)

OBJ_HEADER = "# Minkowski 3-space, metric signature (-,+,+); vertex order (x1, x2, x3)"


def format_float(x: float) -> str:
    return f"{x:.15g}"


def _normalise(value: Any) -> Any:
    """JSON 用: float を 15 桁に丸め、NaN / inf は null にする"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (float, np.floating)):
        x = float(value)
        return float(format_float(x)) if math.isfinite(x) else None
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, dict):
        return {k: _normalise(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalise(v) for v in value]
    return str(value)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    return "" if value is None else str(value)


def render_table(rows: Sequence[dict[str, Any]], fmt: str = "csv") -> str:
    """
    行リストを CSV または JSON 文字列にする

    Raises:
        UsageError: 未知の形式
    """
    if fmt == "json":
        return json.dumps(_normalise(list(rows)), indent=2, ensure_ascii=False) + "\n"
    if fmt != "csv":
        raise UsageError(f"unknown output format {fmt!r}")
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buffer.getvalue()


# =============================================================================
# OBJ
# =============================================================================


@dataclass
class ObjScene:
    """メッシュ (s, v, 3) とポリライン (n, 3) の集まり"""

    meshes: list[tuple[str, NDArray[np.float64]]] = field(default_factory=list)
    polylines: list[tuple[str, NDArray[np.float64]]] = field(default_factory=list)

    def add_mesh(self, name: str, grid: NDArray[np.float64]) -> None:
        self.meshes.append((name, np.asarray(grid, dtype=float)))

    def add_polyline(self, name: str, points: NDArray[np.float64]) -> None:
        self.polylines.append((name, np.asarray(points, dtype=float)))

    def render(self) -> str:
        lines = [OBJ_HEADER]
        offset = 0
        for name, grid in self.meshes:
            rows, cols = grid.shape[0], grid.shape[1]
            lines.append(f"o {name}")
            lines.extend("v " + " ".join(format_float(x) for x in p) for p in grid.reshape(-1, 3))
            # 行優先の格子を四角形でつなぐ
            for i in range(rows - 1):
                for j in range(cols - 1):
                    a = offset + i * cols + j + 1
                    lines.append(f"f {a} {a + cols} {a + cols + 1} {a + 1}")
            offset += rows * cols
        for name, points in self.polylines:
            lines.append(f"o {name}")
            lines.extend("v " + " ".join(format_float(x) for x in p) for p in points)
            lines.append("l " + " ".join(str(offset + k + 1) for k in range(len(points))))
            offset += len(points)
        return "\n".join(lines) + "\n"

    def write(self, path: Path) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(), encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot write {path}: {e}") from e
        logger.info(f"wrote {len(self.meshes)} meshes and {len(self.polylines)} polylines to {path}")


def read_obj_vertices(path: Path) -> dict[str, NDArray[np.float64]]:
    """OBJ の頂点をオブジェクト名ごとに読み戻す"""
    objects: dict[str, list[list[float]]] = {}
    current = ""
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("o "):
            current = line[2:]
            objects.setdefault(current, [])
        elif line.startswith("v "):
            objects.setdefault(current, []).append([float(x) for x in line.split()[1:4]])
    return {name: np.asarray(points, dtype=float).reshape(-1, 3) for name, points in objects.items()}
