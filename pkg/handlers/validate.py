"""Handler for the ``validate`` command."""

import argparse

from handlers.common import load_state, log_command
from quantum.measures import purity, von_neumann_entropy
from quantum.states import PureState, WernerParameter, as_density
from utils.formatting import dump_json, round_number
from utils.state_io import dump_state
from utils.state_spec import NamedSpec, parse_state_spec


def cmd_validate(state_spec: str | None) -> dict:
    """Summarize a validated state: kind, dim, trace, spectrum, purity and entropy.

    Werner specifications also report whether the state is separable (F <= 1/2).
    """
    state = load_state(state_spec, "--state", "for validate")
    density = as_density(state)

    summary = {
        "state": state_spec,
        "kind": "pure" if isinstance(state, PureState) else "density",
        "dim": density.dim,
        "trace": round_number(float(density.eigenvalues.sum())),
        "eigenvalues": [round_number(float(value)) for value in density.eigenvalues],
        "purity": round_number(purity(density)),
        "von_neumann_entropy": round_number(von_neumann_entropy(density)),
    }

    spec = parse_state_spec(state_spec)
    if isinstance(spec, NamedSpec) and spec.generator == "werner":
        summary["separable"] = WernerParameter(float(spec.params["F"])).is_separable
    return summary


def validate_handler(args: argparse.Namespace) -> str:
    """Handle ``validate``: print the summary, or the normalized state document with --dump."""
    log_command("validate", f"checking {args.state}")
    if args.dump:
        return dump_state(load_state(args.state, "--state", "for validate")).decode("utf-8")
    return dump_json(cmd_validate(args.state))
