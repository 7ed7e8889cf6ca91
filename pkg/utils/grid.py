"""Sweep grids over the entropic index q and the Werner fidelity F."""

import math
from dataclasses import dataclass

from constants import GRID_DECIMALS, MAX_GRID_POINTS, WERNER_F_MAX, WERNER_F_MIN
from utils.errors import GridError

# Absorbs floating-point error in (stop - start) / step when counting points
_COUNT_SLACK = 1e-9


def parse_grid(text: str, name: str) -> tuple[float, ...]:
    """Expand 'start:stop:step' (inclusive stop) or a single number into grid values.

    Values are rounded to 12 decimals so that 0.05 * 3 prints as 0.15.

    Raises:
        GridError: On bad syntax, a non-positive step, an empty range or too many points
    """
    parts = text.strip().split(":")
    try:
        numbers = [float(part) for part in parts]
    except ValueError as e:
        raise GridError.bad_syntax(text) from e

    if len(numbers) == 1:
        return (round(numbers[0], GRID_DECIMALS),)
    if len(numbers) != 3:
        raise GridError.bad_syntax(text)

    start, stop, step = numbers
    if not all(math.isfinite(number) for number in numbers):
        raise GridError.bad_syntax(text)
    if step <= 0.0:
        raise GridError.not_increasing(name, start + step)
    if stop < start:
        raise GridError.empty(name)

    count = math.floor((stop - start) / step + _COUNT_SLACK) + 1
    if count > MAX_GRID_POINTS:
        raise GridError.too_large(name, count, MAX_GRID_POINTS)
    return tuple(round(start + i * step, GRID_DECIMALS) for i in range(count))


def _check_values(values: tuple[float, ...], name: str, inside, interval: str) -> None:
    if not values:
        raise GridError.empty(name)
    for value in values:
        if not inside(value):
            raise GridError.bad_value(name, value, interval)
    for previous, value in zip(values, values[1:], strict=False):
        if value <= previous:
            raise GridError.not_increasing(name, value)


@dataclass(frozen=True)
class SweepGrid:
    """q values in (0, 1) and optional F values in [1/4, 1], each strictly increasing."""

    q_values: tuple[float, ...]
    f_values: tuple[float, ...] | None = None

    def __post_init__(self):
        _check_values(self.q_values, "q", lambda q: 0.0 < q < 1.0, "(0, 1)")
        if self.f_values is not None:
            _check_values(
                self.f_values, "F", lambda f: WERNER_F_MIN <= f <= WERNER_F_MAX, "[1/4, 1]"
            )

    @classmethod
    def from_text(cls, q_text: str, f_text: str | None = None) -> "SweepGrid":
        q_values = parse_grid(q_text, "q")
        f_values = parse_grid(f_text, "F") if f_text is not None else None
        return cls(q_values=q_values, f_values=f_values)
