"""Reading and writing the JSON state file format.

A state file is a UTF-8 JSON document

    {"kind": "density" | "pure", "dim": n, "entries": [[re, im], ...]}

with n*n entries in row-major order for ``density`` and n entries for ``pure``.
"""

import json
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError, model_validator

from quantum.states import DensityMatrix, PureState, density_from_matrix, pure_state
from utils.errors import QuantumInfoError, StateParseError, StateValidationError
from utils.logging import logger


class StateDocument(BaseModel):
    """Schema of a state file."""

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False, strict=True)

    kind: Literal["density", "pure"]
    dim: PositiveInt
    entries: list[tuple[float, float]]

    @model_validator(mode="after")
    def check_entry_count(self) -> "StateDocument":
        expected = self.dim * self.dim if self.kind == "density" else self.dim
        if len(self.entries) != expected:
            raise ValueError(
                f"{self.kind} state of dim {self.dim} needs {expected} entries, "
                f"got {len(self.entries)}"
            )
        return self

    def amplitudes(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.entries], dtype=np.complex128)


def _first_error_field(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return "document"
    location = [str(part) for part in details[0]["loc"]]
    return ".".join(location) or "document"


def parse_state_file(data: bytes) -> DensityMatrix | PureState:
    """Parse and validate a state document.

    Args:
        data: Raw file contents

    Returns:
        DensityMatrix for kind "density", PureState for kind "pure"

    Raises:
        StateParseError: If the bytes are not UTF-8 JSON matching the schema
        StateValidationError: If the state violates the density/pure-state invariants
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise StateParseError.at(f"not valid UTF-8 ({e.reason})") from e

    # Decoded up front so syntax errors carry a line number
    try:
        json.loads(text)
    except json.JSONDecodeError as e:
        raise StateParseError.at(e.msg, line=e.lineno) from e

    try:
        document = StateDocument.model_validate_json(text)
    except ValidationError as e:
        field = _first_error_field(e)
        message = e.errors()[0]["msg"] if e.errors() else str(e)
        raise StateParseError.at(message, field=field) from e

    amplitudes = document.amplitudes()
    try:
        if document.kind == "density":
            state = density_from_matrix(amplitudes.reshape(document.dim, document.dim))
        else:
            state = pure_state(amplitudes)
    except QuantumInfoError as e:
        logger.debug(f"State document failed validation: {e}")
        raise StateValidationError.from_exception(e) from e

    logger.debug(f"Parsed {document.kind} state of dim {document.dim}")
    return state


def dump_state(state: DensityMatrix | PureState) -> bytes:
    """Serialize a state to the state file format (inverse of ``parse_state_file``)."""
    if isinstance(state, PureState):
        kind, values = "pure", state.amplitudes
    else:
        kind, values = "density", state.matrix.reshape(-1)

    document = StateDocument(
        kind=kind,
        dim=state.dim,
        entries=[(float(value.real), float(value.imag)) for value in values],
    )
    return (document.model_dump_json() + "\n").encode("utf-8")
