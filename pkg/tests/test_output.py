"""Tests for CSV and SVG output helpers."""

import pytest

from sea_mtt.core.mtt import Limiting
from sea_mtt.utils.csvio import CsvTable, format_number
from sea_mtt.utils.svg import Axis, Series, render_plot, write_plot


class TestFormatNumber:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (0.1, "0.1"),
            (1.0 / 3.0, "0.333333333"),
            (123456789012.0, "1.23456789e+11"),
            (3, "3"),
            (True, "1"),
            (float("nan"), "nan"),
            (Limiting.TORQUE, "torque"),
            ("static", "static"),
        ],
    )
    def test_cells(self, value, expected):
        assert format_number(value) == expected


class TestCsvTable:
    def test_ragged_row_rejected(self):
        table = CsvTable(["a", "b"])
        with pytest.raises(ValueError):
            table.add_row([1.0])

    def test_render_uses_lf(self):
        table = CsvTable(["a", "b"])
        table.add_row([1.5, "x"])
        assert table.render() == "a,b\n1.5,x\n"

    def test_write_replaces_file(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("old", encoding="utf-8")
        table = CsvTable(["a"])
        table.add_row([2.0])
        text = table.write(path)
        assert path.read_text(encoding="utf-8") == text == "a\n2\n"


class TestSvg:
    def test_log_axis_ticks(self):
        axis = Axis(0.01, 1000.0, True, 0.0, 100.0)
        assert axis.ticks() == pytest.approx([0.01, 0.1, 1.0, 10.0, 100.0, 1000.0])
        assert axis.px(1.0) == pytest.approx(40.0)

    def test_render_threshold_and_series(self):
        doc = render_plot(
            [Series("MTT_tau", [1.0, 10.0, 100.0], [0.5, 2.0, 0.8])],
            title="MTT <test>",
            x_label="omega",
            y_label="magnitude",
            threshold=1.0,
        )
        assert doc.count("<polyline") == 1
        assert "0 dB" in doc
        assert "MTT &lt;test&gt;" in doc

    def test_unplottable_samples_split_the_line(self):
        doc = render_plot(
            [Series("s", [1.0, 2.0, 3.0, 4.0], [1.0, float("nan"), 2.0, 3.0])],
            title="t",
            x_label="x",
            y_label="y",
        )
        assert doc.count("<polyline") == 2

    def test_write_plot(self, tmp_path):
        path = tmp_path / "p.svg"
        write_plot(path, "<svg/>")
        assert path.read_text(encoding="utf-8") == "<svg/>"
