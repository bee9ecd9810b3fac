"""Sweep configuration, CSV emission, figure presets, and the discrepancy report."""

import math
import re

import numpy as np
import pytest

from unruh_channels.channel import R_MAX, REGION_LABELS
from unruh_channels.states import Bell, GenericPure, InvariantViolation, Werner
from unruh_channels.sweep import (
    FIGURE_NAMES,
    AxisSpec,
    SweepConfig,
    SweepRow,
    acceleration_grid,
    discrepancy_report,
    emit_csv,
    figure_config,
    render_figure,
    run_sweep,
)


def small_config(**overrides):
    base = dict(
        family=Werner(0.6),
        acc_mode="locked",
        acc_axis=AxisSpec(0.0, R_MAX, 5),
    )
    base.update(overrides)
    return SweepConfig(**base)


class TestAxisSpec:
    def test_too_few_steps_rejected(self):
        with pytest.raises(ValueError, match="steps >= 2"):
            AxisSpec(0.0, 1.0, 1)

    def test_inverted_bounds_rejected(self):
        with pytest.raises(ValueError, match="start < stop"):
            AxisSpec(1.0, 0.0, 8)

    def test_endpoints_exact(self):
        vals = AxisSpec(0.0, R_MAX, 17).values()
        assert vals[0] == 0.0
        assert vals[-1] == R_MAX


class TestSweepConfig:
    def test_unknown_measure_rejected(self):
        with pytest.raises(ValueError, match="unknown measure"):
            small_config(measures=("concurrence", "entropy"))

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError, match="acc_mode"):
            small_config(acc_mode="diagonal")

    def test_acceleration_bounds_enforced(self):
        with pytest.raises(ValueError, match="pi/4"):
            small_config(acc_axis=AxisSpec(0.0, 1.0, 5))

    def test_family_axis_needs_param_name(self):
        with pytest.raises(ValueError, match="together"):
            small_config(family_axis=AxisSpec(0.0, 1.0, 5))

    def test_family_axis_param_must_exist(self):
        with pytest.raises(ValueError, match="no sweepable"):
            small_config(family_param="p", family_axis=AxisSpec(0.0, 1.0, 5))

    def test_family_axis_conflicts_with_2d_grid(self):
        with pytest.raises(ValueError, match="two swept axes"):
            small_config(
                acc_mode="grid",
                family_param="x",
                family_axis=AxisSpec(0.0, 1.0, 5),
            )

    def test_empty_regions_rejected(self):
        with pytest.raises(ValueError, match="region"):
            small_config(regions=())


class TestAccelerationGrid:
    def test_modes(self):
        axis = AxisSpec(0.0, R_MAX, 3)
        assert len(acceleration_grid("grid", axis)) == 9
        assert acceleration_grid("locked", axis) == [
            (0.0, 0.0),
            (R_MAX / 2, R_MAX / 2),
            (R_MAX, R_MAX),
        ]
        assert all(a == 0.0 for a, _ in acceleration_grid("stationary-alice", axis))
        assert all(b == 0.0 for _, b in acceleration_grid("stationary-rob", axis))


class TestRunSweep:
    def test_row_count_and_order(self):
        cfg = small_config(
            regions=(REGION_LABELS["I-I"], REGION_LABELS["II-II"]),
        )
        rows = run_sweep(cfg)
        assert len(rows) == 10
        assert [r.region for r in rows] == ["I-I"] * 5 + ["II-II"] * 5
        assert [r.r_a for r in rows[:5]] == list(AxisSpec(0.0, R_MAX, 5).values())

    def test_deterministic(self):
        cfg = small_config()
        assert run_sweep(cfg) == run_sweep(cfg)

    def test_family_axis_sweep(self):
        cfg = SweepConfig(
            family=GenericPure(0.0),
            acc_mode="locked",
            acc_axis=AxisSpec(0.0, R_MAX, 3),
            family_param="p",
            family_axis=AxisSpec(0.0, 1.0, 3),
        )
        rows = run_sweep(cfg)
        assert len(rows) == 9
        assert rows[0].param_name == "p"
        # the p=0, r=0 corner is the maximally entangled identity-channel point
        assert rows[0].concurrence == pytest.approx(1.0, abs=1e-12)
        assert rows[0].fidelity == pytest.approx(1.0, abs=1e-12)

    def test_bell_param_column(self):
        rows = run_sweep(small_config(family=Bell()))
        assert rows[0].param_name == "x"
        assert rows[0].param_value == 1.0


class TestEmitCsv:
    def test_header_and_line_count(self, tmp_path):
        rows = run_sweep(small_config(acc_axis=AxisSpec(0.0, R_MAX, 2)))
        path = emit_csv(rows, tmp_path / "out.csv")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 3
        assert lines[0] == "r_a,r_b,x,region,concurrence,fidelity,telp,purity"

    def test_byte_identical_reruns(self, tmp_path):
        cfg = small_config()
        a = emit_csv(run_sweep(cfg), tmp_path / "a.csv").read_bytes()
        b = emit_csv(run_sweep(cfg), tmp_path / "b.csv").read_bytes()
        assert a == b

    def test_round_trip_parse(self, tmp_path):
        rows = run_sweep(small_config())
        path = emit_csv(rows, tmp_path / "out.csv")
        lines = path.read_text(encoding="utf-8").splitlines()[1:]
        for line, row in zip(lines, rows):
            parts = line.split(",")
            parsed = [float(parts[i]) for i in (0, 1, 2, 4, 5, 6, 7)]
            original = [
                row.r_a,
                row.r_b,
                row.param_value,
                row.concurrence,
                row.fidelity,
                row.telp,
                row.purity,
            ]
            for got, want in zip(parsed, original):
                # 12 significant digits survive the round trip
                assert f"{got:.12g}" == f"{want:.12g}"

    def test_empty_rows_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="no rows"):
            emit_csv([], tmp_path / "out.csv")

    def test_out_of_range_measure_rejected(self, tmp_path):
        bad = SweepRow(
            r_a=0.1,
            r_b=0.1,
            param_name="x",
            param_value=0.5,
            region="I-I",
            concurrence=1.5,
            fidelity=0.5,
            telp=1.0,
            purity=0.5,
        )
        with pytest.raises(InvariantViolation, match="concurrence"):
            emit_csv([bad], tmp_path / "out.csv")

    def test_roundoff_clamped_at_boundaries(self, tmp_path):
        almost = SweepRow(
            r_a=0.1,
            r_b=0.1,
            param_name="x",
            param_value=0.5,
            region="I-I",
            concurrence=-1e-12,
            fidelity=1.0 + 1e-13,
            telp=0.0,
            purity=0.5,
        )
        path = emit_csv([almost], tmp_path / "out.csv")
        line = path.read_text(encoding="utf-8").splitlines()[1]
        parts = line.split(",")
        assert parts[4] == "0"
        assert parts[5] == "1"


class TestFigurePresets:
    def test_all_presets_build(self):
        for name in FIGURE_NAMES:
            cfg = figure_config(name, steps=4)
            assert isinstance(cfg, SweepConfig)

    def test_unknown_preset_rejected(self):
        with pytest.raises(ValueError, match="unknown figure"):
            figure_config("fig99")

    def test_fig1_covers_all_regions(self):
        cfg = figure_config("fig1", steps=4)
        assert len(cfg.regions) == 4
        assert cfg.acc_mode == "grid"

    def test_locked_presets_have_two_axes(self):
        for name in ("fig3", "fig4", "fig5", "fig6", "fig7"):
            cfg = figure_config(name, steps=4)
            assert cfg.acc_mode == "locked"
            assert cfg.family_axis is not None


class TestRenderFigure:
    def test_heatmap_and_sidecar_written(self, tmp_path):
        rows = run_sweep(small_config(acc_mode="grid", acc_axis=AxisSpec(0.0, R_MAX, 4)))
        dest = tmp_path / "surface.svg"
        out = render_figure(rows, "concurrence", dest)
        assert out.exists() and out.stat().st_size > 0
        sidecar = tmp_path / "surface.svg.gp"
        assert sidecar.exists()
        assert "pm3d" in sidecar.read_text(encoding="utf-8")

    def test_one_axis_rejected(self, tmp_path):
        rows = run_sweep(small_config())  # locked sweep: one swept axis
        with pytest.raises(ValueError, match="two swept axes"):
            render_figure(rows, "concurrence", tmp_path / "x.svg")

    def test_empty_rows_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="no rows"):
            render_figure([], "concurrence", tmp_path / "x.svg")

    def test_multiple_regions_rejected(self, tmp_path):
        cfg = small_config(
            acc_mode="grid",
            acc_axis=AxisSpec(0.0, R_MAX, 3),
            regions=(REGION_LABELS["I-I"], REGION_LABELS["II-II"]),
        )
        with pytest.raises(ValueError, match="one region"):
            render_figure(run_sweep(cfg), "concurrence", tmp_path / "x.svg")

    def test_unknown_measure_rejected(self, tmp_path):
        rows = run_sweep(small_config(acc_mode="grid", acc_axis=AxisSpec(0.0, R_MAX, 3)))
        with pytest.raises(ValueError, match="unknown measure"):
            render_figure(rows, "entropy", tmp_path / "x.svg")


class TestDiscrepancyReport:
    def test_report_quantifies_corrections(self):
        text = discrepancy_report(grid_steps=6, samples=5, seed=3)
        for label in REGION_LABELS:
            assert f"region {label}" in text
        # corrected forms and unflagged entries must track the channel tightly
        for value in re.findall(
            r"(?:corrected closed form vs channel|unflagged printed entries):"
            r" max deviation ([0-9.e+-]+)",
            text,
        ):
            assert float(value) <= 1e-12
        # every flagged entry must show a real deviation
        flagged = re.findall(r"as printed: max deviation ([0-9.e+-]+)", text)
        assert len(flagged) == 14
        assert all(float(v) > 1e-6 for v in flagged)

    def test_report_covers_fidelity_and_dyadic_sections(self):
        text = discrepancy_report(grid_steps=6, samples=4, seed=3)
        assert "c_xx, c_yy vs -cos(r_a)cos(r_b)" in text
        assert "overlap-fidelity formulas" in text
        match = re.search(
            r"c_xx, c_yy vs -cos\(r_a\)cos\(r_b\): max deviation ([0-9.e+-]+)", text
        )
        assert match and float(match.group(1)) <= 1e-12
        match = re.search(
            r"c_zz vs -\(cos2r_a\+cos2r_b\)/2: max deviation ([0-9.e+-]+)", text
        )
        assert match and float(match.group(1)) <= 1e-12
