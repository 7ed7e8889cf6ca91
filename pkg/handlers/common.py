"""Common utilities for command handlers."""

import sys
from pathlib import Path

import numpy as np
import pandas as pd

from constants import NORM_TOL
from quantum.measures import purity
from quantum.states import DensityMatrix, PureState, pure_state
from utils.errors import MissingParameterError, NotPureError
from utils.logging import logger
from utils.state_spec import resolve_state


def log_command(command: str, detail: str) -> None:
    """Log a command invocation with standardized format.

    Args:
        command: Name of the command being run
        detail: Description of what the command is doing
    """
    logger.info(f"Command {command}: {detail}")


def load_state(text: str | None, flag: str, reason: str) -> DensityMatrix | PureState:
    """Resolve a ``--state``/``--reference`` value, insisting it was given."""
    if text is None:
        raise MissingParameterError.flag(flag, reason)
    return resolve_state(text)


def as_pure(state: DensityMatrix | PureState, spec: str) -> PureState:
    """Return the state as a vector, accepting rank-one density matrices.

    Raises:
        NotPureError: If the state is mixed
    """
    if isinstance(state, PureState):
        return state
    if abs(purity(state) - 1.0) > NORM_TOL:
        raise NotPureError.for_spec(spec)
    vector = state.spectrum.eigenvectors[:, -1]
    return pure_state(vector / np.linalg.norm(vector))


def render_table(frame: pd.DataFrame) -> str:
    """CSV with '\\n' line endings and no index column."""
    return frame.to_csv(index=False, lineterminator="\n")


def write_output(document: str, output: str | None) -> None:
    """Write a finished document to ``--output`` or stdout.

    Args:
        document: Text to write
        output: Destination path; None means stdout
    """
    if output is None:
        sys.stdout.write(document)
        sys.stdout.flush()
        return

    path = Path(output)
    path.write_text(document, encoding="utf-8")
    logger.info(f"Wrote {len(document)} characters to {path}")
