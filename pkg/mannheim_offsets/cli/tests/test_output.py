"""
表と OBJ 出力のテスト
"""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from mannheim_offsets.cli.output import OBJ_HEADER, ObjScene, format_float, read_obj_vertices, render_table
from mannheim_offsets.shared.errors import UsageError


class TestFormatFloat:
    """有効数字 15 桁"""

    def test_values(self) -> None:
        assert format_float(0.1) == "0.1"
        assert format_float(1.0) == "1"
        assert format_float(1 / 3) == "0.333333333333333"
        assert format_float(-2 * math.pi) == "-6.28318530717959"


class TestRenderTable:
    """CSV / JSON"""

    ROWS = [{"check": "a", "residual": 1.0, "passed": True, "note": None}]

    def test_csv(self) -> None:
        assert render_table(self.ROWS) == "check,residual,passed,note\na,1,true,\n"

    def test_csv_empty(self) -> None:
        assert render_table([]) == ""

    def test_json(self) -> None:
        rows = [{"x": 1 / 3, "nan": float("nan"), "n": np.int64(3), "pair": (np.float64(0.5), "y")}]
        loaded = json.loads(render_table(rows, "json"))
        assert loaded == [{"x": 0.333333333333333, "nan": None, "n": 3, "pair": [0.5, "y"]}]

    def test_deterministic(self) -> None:
        assert render_table(self.ROWS, "json") == render_table(self.ROWS, "json")

    def test_unknown_format(self) -> None:
        with pytest.raises(UsageError):
            render_table(self.ROWS, "xml")


class TestObjScene:
    """OBJ"""

    def _scene(self) -> ObjScene:
        grid = np.arange(18, dtype=float).reshape(2, 3, 3)
        scene = ObjScene()
        scene.add_mesh("surface0", grid)
        scene.add_polyline("surface0_striction", np.array([[0.0, 0.5, 1.0], [1.0, 1.5, 2.0]]))
        return scene

    def test_render(self) -> None:
        lines = self._scene().render().splitlines()
        assert lines[0] == OBJ_HEADER
        assert lines[1] == "o surface0"
        assert lines[2] == "v 0 1 2"
        assert [line for line in lines if line.startswith("f ")] == ["f 1 4 5 2", "f 2 5 6 3"]
        assert lines[-1] == "l 7 8"

    def test_round_trip(self, tmp_path: Path) -> None:
        path = tmp_path / "out" / "scene.obj"
        self._scene().write(path)
        vertices = read_obj_vertices(path)
        assert set(vertices) == {"surface0", "surface0_striction"}
        np.testing.assert_array_equal(vertices["surface0"], np.arange(18, dtype=float).reshape(6, 3))
        np.testing.assert_array_equal(vertices["surface0_striction"][1], [1.0, 1.5, 2.0])

    def test_write_error(self, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("", encoding="utf-8")
        with pytest.raises(UsageError):
            self._scene().write(blocker / "scene.obj")
