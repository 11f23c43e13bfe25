import json
import math
from pathlib import Path
from typing import Any, Dict, Union

from wavetune.signals import ParseError


def _encode(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, dict):
        return {key: _decode(item) for key, item in value.items()}
    if value is None:
        return math.nan
    return value


def write_summary(summary: Dict[str, Any], path: Union[str, Path]) -> None:
    """
    Write a run summary as JSON. Non-finite numbers are stored as ``null``.
    """
    with open(path, "w") as f:
        json.dump(_encode(summary), f, indent=4, sort_keys=True)
        f.write("\n")


def read_summary(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a summary written by :py:func:`write_summary`, restoring ``null`` as NaN.
    """
    try:
        with open(path, "r") as f:
            return _decode(json.load(f))
    except json.JSONDecodeError as e:
        raise ParseError(f"Could not parse {path}: {e}") from e
