import json
import math
import os
from typing import Any, Iterable, Optional

from pydantic import BaseModel

from tokenlap.config import get_settings


def round_float(value: float, digits: Optional[int] = None) -> float:
    """keep `digits` significant digits, with -0.0 folded into 0.0"""
    digits = digits if digits is not None else get_settings().float_digits
    if not math.isfinite(value):
        return value
    rounded = float(f"{value:.{digits}g}")
    return rounded + 0.0


def format_float(value: float, digits: Optional[int] = None) -> str:
    digits = digits if digits is not None else get_settings().float_digits
    return f"{round_float(value, digits):.{digits}g}"


def prepare_data(item: Any, digits: Optional[int] = None) -> Any:
    """plain JSON data with every float cut to the report precision"""
    if isinstance(item, BaseModel):
        item = item.dict()
    if isinstance(item, dict):
        return {key: prepare_data(value, digits) for key, value in item.items()}
    if isinstance(item, (list, tuple)):
        return [prepare_data(value, digits) for value in item]
    if isinstance(item, float):
        return round_float(item, digits)
    return item


def to_json(item: Any, digits: Optional[int] = None) -> str:
    return json.dumps(prepare_data(item, digits), ensure_ascii=False, separators=(",", ":"))


def to_json_lines(items: Iterable[Any], digits: Optional[int] = None) -> str:
    return "".join(to_json(item, digits) + "\n" for item in items)


def save_report_to_file(report: str, dump_path: str) -> None:
    folder = os.path.dirname(dump_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(dump_path, "w+") as f:
        f.write(report)
