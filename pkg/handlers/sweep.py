"""Handler for the ``sweep`` command."""

import argparse

import pandas as pd

from constants import DEFAULT_F_GRID, DEFAULT_Q_GRID, SWEEP_COLUMNS
from handlers.common import load_state, log_command, render_table
from quantum.measures import bures_metric_sq, fidelity, q_divergence, werner_q_divergence_closed
from quantum.states import BellKind, DensityMatrix, as_density, bell_state, projector, werner_state
from utils.formatting import dump_json, format_grid_value, format_number, round_number
from utils.grid import SweepGrid
from utils.logging import logger

DEFAULT_REFERENCE = "bell:psi-"

# Reference counts as the singlet when its fidelity with |Psi-><Psi-| is this close to 1
_SINGLET_MATCH_TOL = 1e-12


def _is_singlet(reference: DensityMatrix) -> bool:
    singlet = projector(bell_state(BellKind.PSI_MINUS))
    if reference.dim != singlet.dim:
        return False
    return fidelity(singlet, reference) >= 1.0 - _SINGLET_MATCH_TOL


def _row(f_value, q_value, state: DensityMatrix, reference: DensityMatrix, closed: float | None) -> dict:
    return {
        "F": f_value,
        "q": q_value,
        "K_q": q_divergence(state, reference, q_value),
        "K_q_closed": closed,
        "fidelity": fidelity(reference, state),
        "bures_sq": bures_metric_sq(reference, state),
    }


def cmd_sweep(
    q_grid: str | None,
    f_grid: str | None = None,
    reference_spec: str | None = None,
    state_spec: str | None = None,
) -> list[dict]:
    """Tabulate K_q, fidelity and Bures distance over the sweep grids.

    Without ``state_spec`` the rows walk the Werner family, F-major, against
    ``reference_spec`` (the singlet by default); K_q_closed is filled only when the
    reference is the singlet. With ``state_spec`` only q varies and the F and
    K_q_closed cells stay empty.

    Raises:
        GridError: On malformed or out-of-range grids
        DimensionMismatchError: If the state and reference dimensions differ
    """
    reference_spec = reference_spec or DEFAULT_REFERENCE
    reference = as_density(load_state(reference_spec, "--reference", "for sweep"))

    if state_spec is not None:
        grid = SweepGrid.from_text(q_grid or DEFAULT_Q_GRID)
        if f_grid is not None:
            logger.warning("--f-grid is ignored when --state fixes the state")
        state = as_density(load_state(state_spec, "--state", "for sweep"))
        logger.info(f"Sweeping {state_spec} against {reference_spec} over {len(grid.q_values)} q values")
        return [_row(None, q, state, reference, None) for q in grid.q_values]

    grid = SweepGrid.from_text(q_grid or DEFAULT_Q_GRID, f_grid or DEFAULT_F_GRID)
    with_closed_form = _is_singlet(reference)
    if not with_closed_form:
        logger.info(f"Reference {reference_spec} is not the singlet; K_q_closed left empty")
    logger.info(
        f"Sweeping Werner family over {len(grid.f_values)} F x {len(grid.q_values)} q values"
    )

    rows = []
    for f_value in grid.f_values:
        state = werner_state(f_value)
        for q_value in grid.q_values:
            closed = werner_q_divergence_closed(f_value, q_value) if with_closed_form else None
            rows.append(_row(f_value, q_value, state, reference, closed))
    return rows


def _text_cell(column: str, value) -> str:
    if value is None:
        return ""
    if column in ("F", "q"):
        return format_grid_value(value)
    return format_number(value)


def _json_cell(column: str, value):
    if value is None or column in ("F", "q"):
        return value
    return round_number(value)


def sweep_handler(args: argparse.Namespace) -> str:
    """Handle ``sweep``: CSV by default, JSON array of row objects on request."""
    log_command("sweep", f"state={args.state} reference={args.reference}")
    rows = cmd_sweep(args.q_grid, args.f_grid, args.reference, args.state)

    if (args.format or "csv") == "json":
        return dump_json(
            [{column: _json_cell(column, row[column]) for column in SWEEP_COLUMNS} for row in rows]
        )

    frame = pd.DataFrame(
        [{column: _text_cell(column, row[column]) for column in SWEEP_COLUMNS} for row in rows],
        columns=SWEEP_COLUMNS,
    )
    return render_table(frame)
