"""Audit the transcribed closed-form region matrices against the channel.

The constructive pipeline (isometry dilation followed by a partial trace) is
the single source of truth.  The literally transcribed closed forms for the
four region matrices and the two overlap-fidelity formulas carry documented
typographic defects; this script prints the per-entry deviation report that
quantifies each of them, plus the handful of entries that had to be corrected
to restore Hermiticity and trace preservation.
"""

from unruh_channels import (
    AccelerationPair,
    Bell,
    REGION_LABELS,
    closed_form_region,
    discrepancy_report,
    make_state,
)


def main():
    print(discrepancy_report(grid_steps=12, samples=15, seed=7))

    print()
    print("corrections applied to the region I-I closed form for the singlet")
    print("at r_a = 0.3, r_b = 0.5:")
    _, report = closed_form_region(
        make_state(Bell()), AccelerationPair(0.3, 0.5), REGION_LABELS["I-I"]
    )
    for entry in report.corrections:
        print(
            f"  entry ({entry.row},{entry.col}): printed {entry.printed_value:.6f}, "
            f"corrected {entry.corrected_value:.6f}"
        )
        print(f"    {entry.note}")


if __name__ == "__main__":
    main()
