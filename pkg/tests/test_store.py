"""Tests for the CSV and metadata stores."""

import ast
import math
from pathlib import Path

import pytest

import utils.store as store
from bobdec import DecoderKind
from utils.store import (
    format_cell,
    get_meta_path,
    load_csv_store,
    load_json_store,
    save_csv_store,
    save_json_store,
)


class TestFormatCell:
    @pytest.mark.parametrize(
        "value, text",
        [
            (0.1, "0.1"),
            (1.0, "1.0"),
            (math.nan, "nan"),
            (True, "true"),
            (None, ""),
            (4, "4"),
            (DecoderKind.JMAP, "JMAP"),
        ],
    )
    def test_format_cell(self, value, text):
        assert format_cell(value) == text

    def test_store_does_not_depend_on_cli(self):
        tree = ast.parse(Path(store.__file__).read_text(encoding="utf-8"))
        imported = {alias.name for node in ast.walk(tree) if isinstance(node, ast.Import) for alias in node.names}
        imported |= {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom) and node.module}
        assert not any(name.split(".")[0] == "cli" for name in imported)


class TestStore:
    def test_meta_path(self, tmp_path):
        assert get_meta_path(tmp_path / "serVsAlpha.csv") == tmp_path / "serVsAlpha.meta.json"

    def test_csv_creates_parents_and_quotes(self, tmp_path):
        path = tmp_path / "nested" / "rows.csv"
        save_csv_store(path, ["a", "b", "c"], [{"a": 0.1, "b": "x,y", "c": None}, {"a": math.nan, "b": True}])
        assert path.read_text(encoding="utf-8") == 'a,b,c\n0.1,"x,y",\nnan,true,\n'
        assert load_csv_store(path)[0] == {"a": "0.1", "b": "x,y", "c": ""}

    def test_float_cells_round_trip(self, tmp_path):
        value = 1.0 / 3.0
        path = save_csv_store(tmp_path / "x.csv", ["v"], [{"v": value}])
        assert float(load_csv_store(path)[0]["v"]) == value

    def test_metadata_sidecar(self, tmp_path):
        csv_path = tmp_path / "x.csv"
        meta_path = save_json_store(csv_path, {"seed": 3, "wall_time_seconds": 1.5})
        assert meta_path == get_meta_path(csv_path)
        assert load_json_store(csv_path) == {"seed": 3, "wall_time_seconds": 1.5}

    def test_missing_metadata(self, tmp_path):
        assert load_json_store(tmp_path / "absent.csv") == {}
