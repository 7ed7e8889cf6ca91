import pytest

from utils.errors import GridError
from utils.grid import SweepGrid, parse_grid


class TestParseGrid:
    def test_single_value(self):
        assert parse_grid("0.5", "q") == (0.5,)

    def test_inclusive_stop(self):
        assert parse_grid("0.25:1.0:0.25", "F") == (0.25, 0.5, 0.75, 1.0)

    def test_values_are_rounded(self):
        values = parse_grid("0.05:0.95:0.05", "q")
        assert len(values) == 19
        assert values[2] == 0.15
        assert values[-1] == 0.95

    def test_stop_not_on_step(self):
        assert parse_grid("0.1:0.35:0.1", "q") == (0.1, 0.2, 0.3)

    @pytest.mark.parametrize("text", ["", "a:b:c", "0.1:0.2", "0.1:0.2:0.1:0.1", "0.1:inf:0.1"])
    def test_bad_syntax(self, text):
        with pytest.raises(GridError, match="start:stop:step"):
            parse_grid(text, "q")

    def test_non_positive_step(self):
        with pytest.raises(GridError, match="not strictly increasing"):
            parse_grid("0.1:0.5:0", "q")

    def test_reversed_range(self):
        with pytest.raises(GridError, match="empty"):
            parse_grid("0.5:0.1:0.1", "q")

    def test_too_many_points(self):
        with pytest.raises(GridError, match="more than 1000000"):
            parse_grid("0.05:0.95:1e-12", "q")

    def test_largest_allowed_grid(self):
        assert len(parse_grid("0:999999:1", "n")) == 1_000_000


class TestSweepGrid:
    def test_from_text(self):
        grid = SweepGrid.from_text("0.5", "0.25:0.5:0.25")
        assert grid.q_values == (0.5,)
        assert grid.f_values == (0.25, 0.5)

    def test_f_values_optional(self):
        assert SweepGrid.from_text("0.1:0.3:0.1").f_values is None

    @pytest.mark.parametrize("text", ["0.0", "1.0", "0.5:1.0:0.25"])
    def test_q_outside_open_interval(self, text):
        with pytest.raises(GridError, match=r"outside \(0, 1\)"):
            SweepGrid.from_text(text)

    @pytest.mark.parametrize("text", ["0.2", "0.5:1.5:0.5"])
    def test_f_outside_werner_range(self, text):
        with pytest.raises(GridError, match=r"outside \[1/4, 1\]"):
            SweepGrid.from_text("0.5", text)

    def test_not_increasing(self):
        with pytest.raises(GridError, match="not strictly increasing at 0.3"):
            SweepGrid(q_values=(0.5, 0.3))

    def test_empty(self):
        with pytest.raises(GridError, match="q grid is empty"):
            SweepGrid(q_values=())
