"""End-to-end tests of the purify command line, run in-process through main(argv)."""

import json
from pathlib import Path

import pytest

from purify import main
from quantum.states import werner_state
from utils.state_io import dump_state

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestGoldenFiles:
    """Documented invocations reproduce the committed outputs byte for byte."""

    @pytest.mark.parametrize(
        "argv, golden",
        [
            (
                [
                    "measure",
                    "--state", "werner:F=0.7",
                    "--reference", "bell:psi-",
                    "--measure", "q-divergence",
                    "--q", "0.5",
                ],
                "measure_q_divergence.json",
            ),
            (
                ["sweep", "--f-grid", "0.25:1.0:0.25", "--q-grid", "0.5"],
                "sweep_werner.csv",
            ),
            (
                [
                    "report",
                    "--state", "maximally-mixed:d=2",
                    "--reference", "random-pure:d=2,seed=1",
                    "--q", "0.5",
                ],
                "report_maximally_mixed.json",
            ),
        ],
    )
    def test_matches_golden(self, capsys, argv, golden):
        code, out = run(capsys, *argv)
        assert code == 0
        assert out == (GOLDEN / golden).read_text(encoding="utf-8")

    def test_deterministic(self, capsys):
        argv = ["sweep", "--f-grid", "0.25:1.0:0.05", "--q-grid", "0.1:0.9:0.2"]
        assert run(capsys, *argv) == run(capsys, *argv)


class TestMeasure:
    def test_fidelity_of_identical_states(self, capsys):
        code, out = run(
            capsys, "measure", "--state", "bell:psi-", "--reference", "bell:psi-", "--measure", "fidelity"
        )
        assert code == 0
        record = json.loads(out)
        assert record["value"] == 1.0
        assert record["q"] is None

    def test_kl_divergence_is_inf(self, capsys):
        code, out = run(
            capsys,
            "measure", "--state", "werner:F=0.7", "--reference", "bell:psi-", "--measure", "kl-divergence",
        )
        assert code == 0
        assert json.loads(out)["value"] == "inf"

    @pytest.mark.parametrize(
        "measure",
        ["q-divergence-eigensum", "q-divergence-jackson", "q-divergence-qlog", "q-divergence-pure-ref"],
    )
    def test_routes_agree_on_werner(self, capsys, measure):
        code, out = run(
            capsys,
            "measure", "--state", "werner:F=0.7", "--reference", "bell:psi-", "--measure", measure, "--q", "0.5",
        )
        assert code == 0
        assert json.loads(out)["value"] == 0.326679946932

    def test_single_state_measure_ignores_reference(self, capsys):
        code, out = run(capsys, "measure", "--state", "maximally-mixed:d=4", "--measure", "purity")
        assert code == 0
        record = json.loads(out)
        assert record["value"] == 0.25
        assert record["reference"] is None

    def test_csv_format(self, capsys):
        code, out = run(
            capsys,
            "measure", "--state", "werner:F=0.7", "--reference", "bell:psi-",
            "--measure", "q-divergence", "--q", "0.5", "--format", "csv",
        )
        assert code == 0
        assert out == (
            "measure,state,reference,q,value\n"
            "q-divergence,werner:F=0.7,bell:psi-,0.5,0.326679946932\n"
        )

    def test_fubini_study_needs_pure_states(self, capsys):
        code, _ = run(
            capsys, "measure", "--state", "werner:F=0.7", "--reference", "bell:psi-", "--measure", "fubini-study-sq"
        )
        assert code == 3


class TestSweep:
    def test_default_grid_row_count(self, capsys):
        code, out = run(capsys, "sweep")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "F,q,K_q,K_q_closed,fidelity,bures_sq"
        assert len(lines) == 1 + 16 * 19

    def test_k_q_decreasing_in_f(self, capsys):
        _, out = run(capsys, "sweep", "--q-grid", "0.3", "--format", "json")
        values = [row["K_q"] for row in json.loads(out)]
        assert values == sorted(values, reverse=True)

    def test_non_singlet_reference_has_no_closed_form(self, capsys):
        code, out = run(capsys, "sweep", "--reference", "bell:phi+", "--f-grid", "0.5", "--q-grid", "0.5")
        assert code == 0
        assert out.splitlines()[1].split(",")[3] == ""

    def test_fixed_state(self, capsys):
        code, out = run(
            capsys, "sweep", "--state", "werner:F=0.7", "--q-grid", "0.5", "--format", "json"
        )
        assert code == 0
        (row,) = json.loads(out)
        assert row["F"] is None
        assert row["K_q_closed"] is None
        assert row["K_q"] == 0.326679946932


class TestReport:
    def test_werner_against_singlet(self, capsys):
        code, out = run(
            capsys, "report", "--state", "werner:F=0.7", "--reference", "bell:psi-",
            "--q", "0.7", "--q", "0.3", "--q", "0.5",
        )
        assert code == 0
        report = json.loads(out)
        assert report["fidelity"] == 0.7
        assert [entry["q"] for entry in report["k_q"]] == [0.3, 0.5, 0.7]
        for entry in report["k_q"]:
            assert entry["value"] == pytest.approx((1.0 - 0.7 ** entry["q"]) / (1.0 - entry["q"]), abs=1e-11)

    def test_identical_states(self, capsys):
        _, out = run(capsys, "report", "--state", "werner:F=1", "--reference", "bell:psi-", "--q", "0.5")
        assert json.loads(out) == {"fidelity": 1.0, "bures_sq": 0.0, "k_q": [{"q": 0.5, "value": 0.0}]}

    def test_rank_one_density_counts_as_pure(self, capsys):
        code, _ = run(capsys, "report", "--state", "werner:F=0.7", "--reference", "werner:F=1", "--q", "0.5")
        assert code == 0

    def test_mixed_reference(self, capsys):
        code, _ = run(capsys, "report", "--state", "bell:psi-", "--reference", "werner:F=0.7", "--q", "0.5")
        assert code == 3


class TestValidate:
    def test_werner_summary(self, capsys):
        code, out = run(capsys, "validate", "--state", "werner:F=0.4")
        assert code == 0
        summary = json.loads(out)
        assert summary["kind"] == "density"
        assert summary["dim"] == 4
        assert summary["trace"] == 1.0
        assert summary["eigenvalues"] == [0.2, 0.2, 0.2, 0.4]
        assert summary["separable"] is True

    def test_pure_summary(self, capsys):
        _, out = run(capsys, "validate", "--state", "bell:phi-")
        summary = json.loads(out)
        assert summary["kind"] == "pure"
        assert summary["purity"] == 1.0
        assert summary["von_neumann_entropy"] == 0.0
        assert "separable" not in summary

    def test_dump_to_file(self, capsys, tmp_path):
        target = tmp_path / "rho.json"
        code, out = run(capsys, "validate", "--state", "werner:F=0.7", "--dump", "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_bytes() == dump_state(werner_state(0.7))

    def test_invalid_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"kind": "density", "dim": 1, "entries": [[2, 0]]}', encoding="utf-8")
        code, _ = run(capsys, "validate", "--state", str(path))
        assert code == 2


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["frobnicate"],
            ["measure", "--state", "bell:psi-", "--measure", "no-such-measure"],
            ["measure", "--state", "werner:F=abc", "--measure", "purity"],
            ["measure", "--state", "werner:F=0.1", "--measure", "purity"],
            ["measure", "--state", "bell:psi-", "--reference", "bell:psi-", "--measure", "q-divergence", "--q", "1.5"],
            ["sweep", "--q-grid", "0.5:0.1:0.1"],
            ["sweep", "--f-grid", "0.1:0.5:0.1"],
            ["sweep", "--q-grid", "0.05:0.95:1e-12"],
            ["validate", "--state", "does/not/exist.json"],
        ],
    )
    def test_parse_and_validation_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["measure", "--state", "bell:psi-", "--reference", "bell:psi-", "--measure", "q-divergence"],
            ["measure", "--state", "bell:psi-", "--measure", "fidelity"],
            ["measure", "--state", "bell:psi-", "--reference", "maximally-mixed:d=2", "--measure", "fidelity"],
            ["validate"],
        ],
    )
    def test_precondition_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 3

    def test_errors_leave_stdout_empty(self, capsys):
        code, out = run(capsys, "sweep", "--q-grid", "abc")
        assert code == 2
        assert out == ""

    def test_quoted_numbers_in_state_file(self, capsys, tmp_path):
        path = tmp_path / "quoted.json"
        path.write_text(
            '{"kind": "pure", "dim": "2", "entries": [["1", "0"], [false, 0]]}', encoding="utf-8"
        )
        code, out = run(capsys, "validate", "--state", str(path))
        assert code == 2
        assert out == ""
