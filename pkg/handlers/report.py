"""Handler for the ``report`` command: how far a state is from a pure target."""

import argparse

import pandas as pd

from constants import DEFAULT_Q_GRID
from handlers.common import as_pure, load_state, log_command, render_table
from quantum.measures import bures_metric_sq, fidelity, q_divergence_pure_ref
from quantum.states import as_density, projector
from utils.errors import GridError
from utils.formatting import dump_json, format_grid_value, format_number, round_number
from utils.grid import SweepGrid, parse_grid
from utils.logging import logger


def _q_values(q_list: list[float] | None, q_grid: str | None) -> tuple[float, ...]:
    if q_list and q_grid:
        raise GridError.conflicting("--q", "--q-grid", "report")
    if q_list:
        return SweepGrid(q_values=tuple(sorted(set(q_list)))).q_values
    return SweepGrid(q_values=parse_grid(q_grid or DEFAULT_Q_GRID, "q")).q_values


def cmd_purification_report(
    state_spec: str | None,
    reference_spec: str | None,
    q_list: list[float] | None = None,
    q_grid: str | None = None,
) -> dict:
    """Fidelity, Bures distance and K_q of a state against a pure target.

    Args:
        state_spec: Specification of the state rho being purified
        reference_spec: Specification of the pure target psi
        q_list: Explicit entropic indices (``--q`` repeated)
        q_grid: Grid of entropic indices; the default grid is used when neither is given

    Returns:
        ``{"fidelity": ..., "bures_sq": ..., "k_q": [{"q": ..., "value": ...}, ...]}``

    Raises:
        NotPureError: If the reference resolves to a mixed state
    """
    state = as_density(load_state(state_spec, "--state", "for report"))
    target = as_pure(load_state(reference_spec, "--reference", "for report"), reference_spec)
    q_values = _q_values(q_list, q_grid)
    logger.debug(f"Report over q = {q_values}")

    target_density = projector(target)
    return {
        "fidelity": fidelity(target_density, state),
        "bures_sq": bures_metric_sq(target_density, state),
        "k_q": [{"q": q, "value": q_divergence_pure_ref(state, target, q)} for q in q_values],
    }


def report_handler(args: argparse.Namespace) -> str:
    """Handle ``report``: JSON by default; CSV lists one row per q."""
    log_command("report", f"purification of {args.state} towards {args.reference}")
    report = cmd_purification_report(args.state, args.reference, args.q, args.q_grid)

    if (args.format or "json") == "csv":
        frame = pd.DataFrame(
            [
                {
                    "q": format_grid_value(entry["q"]),
                    "k_q": format_number(entry["value"]),
                    "fidelity": format_number(report["fidelity"]),
                    "bures_sq": format_number(report["bures_sq"]),
                }
                for entry in report["k_q"]
            ]
        )
        return render_table(frame)

    return dump_json(
        {
            "fidelity": round_number(report["fidelity"]),
            "bures_sq": round_number(report["bures_sq"]),
            "k_q": [
                {"q": entry["q"], "value": round_number(entry["value"])} for entry in report["k_q"]
            ],
        }
    )
