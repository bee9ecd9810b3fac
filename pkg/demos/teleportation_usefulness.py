"""When does an accelerated channel remain useful for teleportation?

A two-qubit state is useful for standard teleportation when the sum of the
singular values of its correlation dyadic exceeds 1.  For Werner states that
sum is 3x, so the usefulness threshold sits exactly at x = 1/3; acceleration
shrinks the dyadic and pushes the threshold upward.  The script traces the
boundary of the useful region over the (x, r) plane and renders the
underlying surfaces into demos/output/.
"""

from pathlib import Path

import numpy as np

from unruh_channels import (
    R_MAX,
    REGION_LABELS,
    AccelerationPair,
    Werner,
    channel,
    figure_config,
    make_state,
    render_figure,
    run_sweep,
    teleportation_criterion,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    print("teleportation criterion of the unaccelerated Werner family: 3x")
    for x in (0.0, 1.0 / 3.0, 0.5, 1.0):
        telp = teleportation_criterion(make_state(Werner(float(x))))
        verdict = "useful" if telp > 1.0 else "not useful"
        print(f"  x = {x:6.4f}: Telp = {telp:.6f} ({verdict})")

    print()
    print("smallest x that stays useful in region I-I at locked acceleration r")
    xs = np.linspace(0.0, 1.0, 201)
    for r in np.linspace(0.0, R_MAX, 9):
        acc = AccelerationPair(float(r), float(r))
        threshold = None
        for x in xs:
            rho = channel(make_state(Werner(float(x))), acc, REGION_LABELS["I-I"])
            if teleportation_criterion(rho) > 1.0:
                threshold = x
                break
        label = f"{threshold:.3f}" if threshold is not None else "none (never useful)"
        print(f"  r = {r:6.4f}: x_min = {label}")

    # x family over (r, x), all four regions
    rows = run_sweep(figure_config("fig6", steps=48))
    for label in ("I-I", "II-II", "I-II", "II-I"):
        region_rows = [row for row in rows if row.region == label]
        dest = OUT / f"x_family_telp_{label}.svg"
        render_figure(region_rows, "telp", dest)
        print(f"wrote {dest}")

    # generic pure family over (r, p), region I-I
    rows = run_sweep(figure_config("fig7", steps=48))
    dest = OUT / "pure_family_telp.svg"
    render_figure(rows, "telp", dest)
    print(f"wrote {dest}")


if __name__ == "__main__":
    main()
