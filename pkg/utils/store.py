import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List

logger = logging.getLogger(__name__)

META_SUFFIX = ".meta.json"


def format_cell(value: Any) -> str:
    """Deterministic text for one CSV cell; floats use repr so they round-trip exactly."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def format_row(row: Dict[str, Any], columns: List[str]) -> List[str]:
    return [format_cell(row.get(column)) for column in columns]


def get_meta_path(csv_path: str | Path) -> Path:
    """Sidecar path: results/x.csv -> results/x.meta.json"""
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.stem + META_SUFFIX)


def save_csv_store(csv_path: str | Path, columns: List[str], rows: List[Dict[str, Any]]) -> Path:
    """Write rows as RFC-4180 CSV with a header, UTF-8, \\n line endings"""
    csv_path = Path(csv_path)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(csv_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
            writer.writerow(columns)
            for row in rows:
                writer.writerow(format_row(row, columns))
    except OSError:
        logger.exception("Error saving %s", csv_path)
        raise
    logger.info("Saved %d rows to %s", len(rows), csv_path)
    return csv_path


def load_csv_store(csv_path: str | Path) -> List[Dict[str, str]]:
    with open(csv_path, "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def save_json_store(csv_path: str | Path, data: Dict[str, Any]) -> Path:
    """Save run metadata next to the CSV"""
    meta_path = get_meta_path(csv_path)
    meta_path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(meta_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False, default=str)
    except OSError:
        logger.exception("Error saving %s", meta_path)
        raise
    logger.info("Saved run metadata to %s", meta_path)
    return meta_path


def load_json_store(csv_path: str | Path) -> Dict[str, Any]:
    """Load the metadata sidecar of a CSV; empty dict when absent"""
    meta_path = get_meta_path(csv_path)
    if not meta_path.exists():
        return {}
    with open(meta_path, "r", encoding="utf-8") as f:
        return json.load(f)
