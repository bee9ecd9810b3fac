"""Overlap fidelity between the accelerated channel and the initial state.

The similarity measure here is the trace overlap tr(rho_travelled rho_initial),
so for a mixed input it starts at the input purity rather than at 1 even when
nothing happens.  The script tabulates that baseline for the named families
and then sweeps the self-transposed x family and the generic pure family over
acceleration.  Heatmaps land in demos/output/.
"""

from pathlib import Path

import numpy as np

from unruh_channels import (
    R_MAX,
    REGION_LABELS,
    AccelerationPair,
    Bell,
    GeneralizedWerner,
    GenericPure,
    Werner,
    channel,
    figure_config,
    make_state,
    overlap_fidelity,
    purity,
    render_figure,
    run_sweep,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

FAMILIES = {
    "Bell (singlet)": Bell(),
    "Werner x=0.6": Werner(0.6),
    "X state (-0.7,-0.5,-0.3)": GeneralizedWerner(-0.7, -0.5, -0.3),
    "generic pure p=0.5": GenericPure(0.5),
}


def main():
    print("zero-acceleration baseline: overlap fidelity equals input purity")
    acc0 = AccelerationPair(0.0, 0.0)
    for name, family in FAMILIES.items():
        rho0 = make_state(family)
        fid = overlap_fidelity(channel(rho0, acc0, REGION_LABELS["I-I"]), rho0)
        print(f"  {name:28s} F = {fid:.6f}  purity = {purity(rho0):.6f}")

    print()
    print("fidelity decay of the singlet, locked r_a = r_b = r, region I-I")
    rho0 = make_state(Bell())
    for r in np.linspace(0.0, R_MAX, 9):
        acc = AccelerationPair(float(r), float(r))
        fid = overlap_fidelity(channel(rho0, acc, REGION_LABELS["I-I"]), rho0)
        print(f"  r = {r:6.4f}: F = {fid:.6f}")

    # x family over (r, x), all four regions
    rows = run_sweep(figure_config("fig4", steps=48))
    for label in ("I-I", "II-II", "I-II", "II-I"):
        region_rows = [row for row in rows if row.region == label]
        dest = OUT / f"x_family_fidelity_{label}.svg"
        render_figure(region_rows, "fidelity", dest)
        print(f"wrote {dest}")

    # generic pure family over (r, p), the two same-wedge regions
    rows = run_sweep(figure_config("fig5", steps=48))
    for label in ("I-I", "II-II"):
        region_rows = [row for row in rows if row.region == label]
        dest = OUT / f"pure_family_fidelity_{label}.svg"
        render_figure(region_rows, "fidelity", dest)
        print(f"wrote {dest}")


if __name__ == "__main__":
    main()
