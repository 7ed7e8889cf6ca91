"""Handler for the ``measure`` command: evaluate one measure between two states."""

import argparse

import pandas as pd

from constants import MEASURES
from handlers.common import as_pure, load_state, log_command, render_table
from quantum.measures import (
    DivergenceValue,
    EntropicIndex,
    bures_metric_sq,
    fidelity,
    fubini_study_sq,
    kl_divergence,
    purity,
    q_divergence,
    q_divergence_eigensum,
    q_divergence_jackson,
    q_divergence_pure_ref,
    q_divergence_qlog,
    tsallis_entropy,
    von_neumann_entropy,
)
from quantum.states import as_density
from utils.errors import MissingParameterError
from utils.formatting import dump_json, format_number, round_number
from utils.logging import logger


def _pair(state, reference):
    return as_density(state), as_density(reference)


def _evaluate(name: str, state, reference, index, state_spec: str, reference_spec: str):
    """Dispatch to the measures module; returns a float or a DivergenceValue."""
    if name == "fidelity":
        rho, sigma = _pair(state, reference)
        return fidelity(sigma, rho)
    if name == "bures-sq":
        rho, sigma = _pair(state, reference)
        return bures_metric_sq(sigma, rho)
    if name == "kl-divergence":
        return kl_divergence(*_pair(state, reference))
    if name == "q-divergence":
        return q_divergence(*_pair(state, reference), index)
    if name == "q-divergence-eigensum":
        return q_divergence_eigensum(*_pair(state, reference), index)
    if name == "q-divergence-jackson":
        return q_divergence_jackson(*_pair(state, reference), index)
    if name == "q-divergence-qlog":
        return q_divergence_qlog(*_pair(state, reference), index)
    if name == "q-divergence-pure-ref":
        return q_divergence_pure_ref(as_density(state), as_pure(reference, reference_spec), index)
    if name == "fubini-study-sq":
        return fubini_study_sq(as_pure(state, state_spec), as_pure(reference, reference_spec))
    if name == "von-neumann-entropy":
        return von_neumann_entropy(as_density(state))
    if name == "tsallis-entropy":
        return tsallis_entropy(as_density(state), index)
    return purity(as_density(state))


def cmd_measure(
    state_spec: str | None, reference_spec: str | None, measure: str, q: float | None
) -> dict:
    """Evaluate a measure and return the report record.

    Args:
        state_spec: Specification of the state rho
        reference_spec: Specification of the reference sigma (ignored by single-state measures)
        measure: Key of ``MEASURES``
        q: Entropic index for measures that need one

    Returns:
        Record with keys measure, state, reference, q, value (math.inf for an infinite divergence)

    Raises:
        MissingParameterError: If q or the reference is required but absent
        DimensionMismatchError: If the two states have different dimensions
    """
    info = MEASURES[measure]
    if info["requires_q"] and q is None:
        raise MissingParameterError.flag("--q", f"for measure '{measure}'")

    state = load_state(state_spec, "--state", f"for measure '{measure}'")
    reference = None
    if info["requires_reference"]:
        reference = load_state(reference_spec, "--reference", f"for measure '{measure}'")
    index = EntropicIndex(q) if info["requires_q"] else None

    result = _evaluate(measure, state, reference, index, state_spec, reference_spec)
    if isinstance(result, DivergenceValue):
        value = float(result)
        if result.is_infinite:
            logger.info(f"{measure} is infinite: state support exceeds reference support")
    else:
        value = result
    logger.debug(f"{measure} = {value!r}")

    return {
        "measure": measure,
        "state": state_spec,
        "reference": reference_spec if info["requires_reference"] else None,
        "q": q if info["requires_q"] else None,
        "value": value,
    }


def measure_handler(args: argparse.Namespace) -> str:
    """Handle ``measure``: evaluate and render one record."""
    log_command("measure", f"{args.measure} of {args.state} against {args.reference}")
    record = cmd_measure(args.state, args.reference, args.measure, args.q)

    if (args.format or "json") == "csv":
        row = dict(record)
        row["q"] = "" if record["q"] is None else repr(record["q"])
        row["reference"] = record["reference"] or ""
        row["value"] = format_number(record["value"])
        return render_table(pd.DataFrame([row]))

    record["value"] = round_number(record["value"])
    return dump_json(record)
