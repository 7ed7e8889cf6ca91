"""State specifications accepted by ``--state`` and ``--reference``.

A specification is either a path to a state file or a generator string:

    bell:psi-  bell:psi+  bell:phi+  bell:phi-
    werner:F=<real>
    maximally-mixed:d=<int>
    random:d=<int>,seed=<int>
    random-pure:d=<int>,seed=<int>
"""

import re
from dataclasses import dataclass, field
from pathlib import Path

from quantum.states import (
    BellKind,
    DensityMatrix,
    PureState,
    bell_state,
    maximally_mixed,
    random_density,
    random_pure,
    werner_state,
)
from utils.errors import StateParseError
from utils.logging import logger
from utils.state_io import parse_state_file

_NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"

GENERATOR_PATTERNS = {
    "bell": re.compile(r"^bell:(?P<kind>psi-|psi\+|phi\+|phi-)$"),
    "werner": re.compile(rf"^werner:F=(?P<F>{_NUMBER})$"),
    "maximally-mixed": re.compile(r"^maximally-mixed:d=(?P<d>\d+)$"),
    "random": re.compile(r"^random:d=(?P<d>\d+),seed=(?P<seed>-?\d+)$"),
    "random-pure": re.compile(r"^random-pure:d=(?P<d>\d+),seed=(?P<seed>-?\d+)$"),
}


@dataclass(frozen=True)
class FileSpec:
    path: Path


@dataclass(frozen=True)
class NamedSpec:
    generator: str
    params: dict[str, str] = field(default_factory=dict)


StateSpec = FileSpec | NamedSpec


def parse_state_spec(text: str) -> StateSpec:
    """Classify a specification string.

    Strings whose prefix before ':' names a generator must match that generator's
    syntax exactly; everything else is taken as a file path.

    Raises:
        StateParseError: If a generator string is malformed
    """
    text = text.strip()
    prefix, separator, _ = text.partition(":")
    if separator and prefix in GENERATOR_PATTERNS:
        match = GENERATOR_PATTERNS[prefix].match(text)
        if match is None:
            logger.debug(f"Malformed generator string '{text}'")
            raise StateParseError.at(f"malformed {prefix} generator '{text}'", field="spec")
        return NamedSpec(generator=prefix, params=match.groupdict())
    return FileSpec(path=Path(text))


def _build_named(spec: NamedSpec) -> DensityMatrix | PureState:
    params = spec.params
    if spec.generator == "bell":
        return bell_state(BellKind(params["kind"]))
    if spec.generator == "werner":
        return werner_state(float(params["F"]))
    if spec.generator == "maximally-mixed":
        return maximally_mixed(int(params["d"]))
    if spec.generator == "random":
        return random_density(int(params["d"]), int(params["seed"]))
    return random_pure(int(params["d"]), int(params["seed"]))


def resolve_state(spec: StateSpec | str) -> DensityMatrix | PureState:
    """Build the state a specification refers to.

    Raises:
        StateParseError: If the file cannot be read or parsed
        StateValidationError: If a state file violates the state invariants
        OutOfRangeError: If a generator parameter is out of range
    """
    if isinstance(spec, str):
        spec = parse_state_spec(spec)

    if isinstance(spec, NamedSpec):
        return _build_named(spec)

    try:
        data = spec.path.read_bytes()
    except OSError as e:
        logger.error(f"Cannot read state file {spec.path}: {e}")
        raise StateParseError.at(f"cannot read state file '{spec.path}': {e.strerror}") from e
    return parse_state_file(data)
