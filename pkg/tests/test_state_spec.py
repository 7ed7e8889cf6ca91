"""Tests for --state/--reference specifications."""

from pathlib import Path

import numpy as np
import pytest

from quantum.states import DensityMatrix, PureState, werner_state
from utils.errors import OutOfRangeError, StateParseError
from utils.state_io import dump_state
from utils.state_spec import FileSpec, NamedSpec, parse_state_spec, resolve_state


class TestParseStateSpec:
    @pytest.mark.parametrize(
        "text, generator, params",
        [
            ("bell:psi-", "bell", {"kind": "psi-"}),
            ("bell:phi+", "bell", {"kind": "phi+"}),
            ("werner:F=0.7", "werner", {"F": "0.7"}),
            ("werner:F=1", "werner", {"F": "1"}),
            ("maximally-mixed:d=3", "maximally-mixed", {"d": "3"}),
            ("random:d=4,seed=12", "random", {"d": "4", "seed": "12"}),
            ("random-pure:d=2,seed=1", "random-pure", {"d": "2", "seed": "1"}),
        ],
    )
    def test_generators(self, text, generator, params):
        assert parse_state_spec(text) == NamedSpec(generator=generator, params=params)

    @pytest.mark.parametrize(
        "text",
        ["bell:chi+", "werner:F=abc", "werner:0.7", "random:d=4", "maximally-mixed:d=two"],
    )
    def test_malformed_generators(self, text):
        with pytest.raises(StateParseError, match="malformed"):
            parse_state_spec(text)

    @pytest.mark.parametrize("text", ["state.json", "data/rho.json", "C:/states/rho.json"])
    def test_paths(self, text):
        assert parse_state_spec(text) == FileSpec(path=Path(text))


class TestResolveState:
    def test_bell_is_pure(self):
        assert isinstance(resolve_state("bell:psi+"), PureState)

    def test_werner_is_density(self):
        state = resolve_state("werner:F=0.7")
        assert isinstance(state, DensityMatrix)
        np.testing.assert_allclose(state.matrix, werner_state(0.7).matrix)

    def test_random_is_reproducible(self):
        np.testing.assert_array_equal(
            resolve_state("random:d=3,seed=5").matrix, resolve_state("random:d=3,seed=5").matrix
        )

    def test_werner_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            resolve_state("werner:F=0.1")

    def test_reads_state_file(self, tmp_path):
        path = tmp_path / "rho.json"
        path.write_bytes(dump_state(werner_state(0.4)))
        np.testing.assert_allclose(resolve_state(str(path)).matrix, werner_state(0.4).matrix)

    def test_missing_file(self, tmp_path):
        with pytest.raises(StateParseError, match="cannot read state file"):
            resolve_state(str(tmp_path / "absent.json"))
