"""Deterministic CSV and JSON emission."""

import io
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from .config import OutputFormat

STATIC_COLUMNS = ["sweep_param", "sweep_value", "method", "level", "quantity", "value"]
DYNAMICS_COLUMNS = ["t", "t_over_2pi_Omega", "method", "jz", "p_minus1"]
DEVIATION_COLUMNS = ["jz_dev", "p_minus1_dev"]
FLOAT_FORMAT = "%.12g"


def _round(value: Any) -> Any:
    if isinstance(value, float):
        return float(FLOAT_FORMAT % value)
    if isinstance(value, dict):
        return {key: _round(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(item) for item in value]
    return value


def render(rows: Sequence[Dict[str, Any]], columns: List[str], meta: Dict[str, Any], fmt: OutputFormat) -> str:
    """
    Serialize rows in column order.

    CSV floats use 12 significant digits; JSON is one object
    {"meta": ..., "rows": [...]} with sorted keys and the same rounding.
    """
    frame = pd.DataFrame(list(rows), columns=columns)
    if fmt == OutputFormat.JSON:
        records = [_round(record) for record in frame.to_dict(orient="records")]
        return json.dumps({"meta": _round(meta), "rows": records}, sort_keys=True, indent=2) + "\n"
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def emit(text: str, path: Optional[str]) -> None:
    """Write to path, or to stdout when path is None or '-'."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
