"""Number and document formatting for command output."""

import json
import math

from constants import GRID_DECIMALS, INFINITY_TOKEN, OUTPUT_ZERO_SNAP, SIGNIFICANT_DIGITS


def snap(value: float) -> float:
    """Map values within OUTPUT_ZERO_SNAP of zero (and -0.0) to 0.0."""
    if abs(value) < OUTPUT_ZERO_SNAP:
        return 0.0
    return value


def format_number(value: float) -> str:
    """Render a computed quantity with 12 significant digits, or the 'inf' token."""
    if math.isinf(value):
        return INFINITY_TOKEN
    return f"{snap(value):.{SIGNIFICANT_DIGITS}g}"


def round_number(value: float) -> float | str:
    """JSON-ready counterpart of ``format_number``."""
    if math.isinf(value):
        return INFINITY_TOKEN
    return float(format_number(value))


def format_grid_value(value: float) -> str:
    """Grid coordinates print as the shortest repr of the rounded value ('1.0', '0.25')."""
    return repr(round(value, GRID_DECIMALS))


def dump_json(document) -> str:
    """Two-space indented JSON with insertion-order keys and a trailing newline."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
