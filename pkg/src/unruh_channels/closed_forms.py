"""Published closed-form matrices for the four region channels, with corrections.

The literature source for this model prints the four reduced matrices
explicitly in terms of the inertial elements rho_ij and C_i = cos r_i,
S_i = sin r_i.  Several printed entries carry transcription slips (a missing
factor, a wrong index, a dropped parenthesis); the constructive channel
(dilation + partial trace) is the authority.  This module evaluates the
printed matrices literally, substitutes the derived correct expression for
each flagged entry, and reports every correction so the discrepancies stay
visible instead of silently patched.

The fourth channel (Alice in II, Rob in I) is printed with the Rob factor
first; entry coordinates in its report refer to that printed ordering, while
returned matrices are always re-expressed in the canonical Alice (x) Rob
ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from .channel import AccelerationPair, RegionSelector, unruh_isometry

EntryFn = Callable[[np.ndarray, float, float, float, float], complex]

# SWAP between the two tensor factors of a 4x4 two-qubit matrix.
_SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class CorrectedEntry:
    """One flagged entry: printed value, substituted value, and why."""

    row: int  # 1-based, in the transcription's own factor ordering
    col: int
    printed_value: complex
    corrected_value: complex
    note: str

    @property
    def deviation(self) -> float:
        return float(abs(self.printed_value - self.corrected_value))


@dataclass(frozen=True)
class ClosedFormReport:
    """Which entries of a printed region matrix were corrected."""

    region: str
    printed_ordering: str  # "alice-rob" or "rob-alice"
    corrections: Tuple[CorrectedEntry, ...]


def _printed_i_i(q, c1, s1, c2, s2):
    m = np.empty((4, 4), dtype=complex)
    m[0, 0] = q[0, 0] * c1**2 * c2**2
    m[0, 1] = q[0, 1] * c1**2 * c2
    m[0, 2] = q[0, 2] * c1 * c2**2
    m[0, 3] = q[0, 3] * c1 * c2
    m[1, 0] = q[1, 0] * c1**2 * c2
    m[1, 1] = c1**2 * (q[1, 1] + q[0, 0] * s2**2)
    m[1, 2] = q[1, 2] * c1 * c2
    m[1, 3] = q[1, 3] * c1
    m[2, 0] = q[2, 0] * c1 * c2
    m[2, 1] = q[2, 1] * c1 * c2
    m[2, 2] = (q[2, 2] + q[0, 0] * s1**2) * c2**2
    m[2, 3] = (q[2, 3] + q[0, 1] * s1**2) * c2
    m[3, 0] = q[3, 0] * c1 * c2
    m[3, 1] = (q[3, 1] + q[2, 0] * s2**2) * c1
    m[3, 2] = (q[3, 2] + q[1, 0] * s1**2) * c2
    m[3, 3] = q[3, 3] + q[2, 2] * s2**2 + (q[1, 1] + q[0, 0] * s2**2)
    return m


_CORRECTIONS_I_I: Dict[Tuple[int, int], Tuple[EntryFn, str]] = {
    (2, 4): (
        lambda q, c1, s1, c2, s2: (q[1, 3] + q[0, 2] * s2**2) * c1,
        "printed entry drops the rho_13 S_2^2 term (breaks Hermiticity "
        "against its (4,2) partner)",
    ),
    (3, 1): (
        lambda q, c1, s1, c2, s2: q[2, 0] * c1 * c2**2,
        "printed entry has C_2 where C_2^2 is needed (its (1,3) partner "
        "carries C_2^2)",
    ),
    (4, 4): (
        lambda q, c1, s1, c2, s2: q[3, 3]
        + q[2, 2] * s2**2
        + s1**2 * (q[1, 1] + q[0, 0] * s2**2),
        "printed entry omits the S_1^2 factors and breaks trace preservation",
    ),
}


def _printed_ii_ii(q, c1, s1, c2, s2):
    m = np.empty((4, 4), dtype=complex)
    m[0, 0] = (q[1, 1] + q[0, 0] * c2**2) * c1**2 + q[3, 3] + q[2, 2] * c2**2
    m[0, 1] = (q[3, 2] + q[1, 0] * c1**2) * s2
    m[0, 2] = (q[3, 1] + q[2, 0] * c2**2) * s1
    m[0, 3] = q[3, 0] * s1 * s2
    m[1, 0] = (q[2, 3] + c1**2 * q[0, 1]) * s2**2
    m[1, 1] = (q[2, 2] + q[0, 0] * c1**2) * s2**2
    m[1, 2] = q[2, 1] * s1 * s2
    m[1, 3] = q[2, 0] * s1 * s2**2
    m[2, 0] = (q[1, 3] + q[0, 2] * c2**2) * s2**2
    m[2, 1] = q[1, 2] * s1 * s2
    m[2, 2] = (q[1, 1] + q[0, 0] * c2**2) * s1**2
    m[2, 3] = q[1, 0] * s1**2 * s2
    m[3, 0] = q[0, 3] * s1 * s2
    m[3, 1] = q[0, 2] * s1 * s2**2
    m[3, 2] = q[3, 2] * s1**2 * s2
    m[3, 3] = q[0, 0] * s1**2 * s2**2
    return m


_CORRECTIONS_II_II: Dict[Tuple[int, int], Tuple[EntryFn, str]] = {
    (2, 1): (
        lambda q, c1, s1, c2, s2: (q[2, 3] + c1**2 * q[0, 1]) * s2,
        "printed entry has S_2^2 where S_2 is needed (its (1,2) partner "
        "carries a single S_2)",
    ),
    (3, 1): (
        lambda q, c1, s1, c2, s2: (q[1, 3] + q[0, 2] * c2**2) * s1,
        "printed entry has S_2^2 where S_1 is needed (its (1,3) partner "
        "carries a single S_1)",
    ),
    (4, 3): (
        lambda q, c1, s1, c2, s2: q[0, 1] * s1**2 * s2,
        "printed entry reads rho_43 where rho_12 is needed (Hermitian "
        "partner of the (3,4) entry)",
    ),
}


def _printed_i_ii(q, c1, s1, c2, s2):
    m = np.empty((4, 4), dtype=complex)
    m[0, 0] = (q[1, 1] + q[0, 0] * c2**2) * c1**2
    m[0, 1] = q[1, 0] * c1**2 * s2**2
    m[0, 2] = (q[1, 3] + q[0, 2] * c2**2) * c1
    m[0, 3] = q[1, 2] * c1 * s2
    m[1, 0] = q[0, 1] * c1**2 * s2
    m[1, 1] = q[0, 0] * c1**2 * s2**2
    m[1, 2] = q[0, 3] * c1 * s2
    m[1, 3] = q[2, 1] * c1 * s2**2
    m[2, 0] = (q[3, 1] + q[2, 0] * c2**2) * c1
    m[2, 1] = q[3, 0] * c1 * s2
    m[2, 2] = (q[1, 1] + q[0, 0] * c2**2) * s1**2 + (q[3, 3] + q[2, 2] * c2**2)
    m[2, 3] = q[3, 2] + q[1, 0] * s1**2 * s2
    m[3, 0] = q[2, 1] * c1 * s2
    m[3, 1] = q[2, 0] * c1 * s2**2
    m[3, 2] = (q[2, 3] + q[3, 2] * s1**2) * s2
    m[3, 3] = (q[2, 2] + q[0, 0] * s1**2) * s2**2
    return m


_CORRECTIONS_I_II: Dict[Tuple[int, int], Tuple[EntryFn, str]] = {
    (1, 2): (
        lambda q, c1, s1, c2, s2: q[1, 0] * c1**2 * s2,
        "printed entry has S_2^2 where S_2 is needed (its (2,1) partner "
        "carries a single S_2)",
    ),
    (2, 4): (
        lambda q, c1, s1, c2, s2: q[0, 2] * c1 * s2**2,
        "printed entry reads rho_32 where rho_13 is needed (Hermitian "
        "partner of the (4,2) entry)",
    ),
    (3, 4): (
        lambda q, c1, s1, c2, s2: (q[3, 2] + q[1, 0] * s1**2) * s2,
        "printed entry drops the overall S_2 grouping (dangling parenthesis)",
    ),
    (4, 3): (
        lambda q, c1, s1, c2, s2: (q[2, 3] + q[0, 1] * s1**2) * s2,
        "printed entry reads rho_43 where rho_12 is needed (Hermitian "
        "partner of the (3,4) entry)",
    ),
}


def _printed_ii_i(q, c1, s1, c2, s2):
    # printed in Rob_I (x) Alice_II ordering
    m = np.empty((4, 4), dtype=complex)
    m[0, 0] = (q[2, 2] + q[0, 0] * c1**2) * c2**2
    m[0, 1] = q[2, 0] * s1**2 * c2**2
    m[0, 2] = q[2, 3] * c2 * s1
    m[0, 3] = q[2, 1] * c2 * s1
    m[1, 0] = q[0, 2] * s1**2 * c2**2
    m[1, 1] = q[0, 0] * s1**2 * c2**2
    m[1, 2] = q[0, 3] * s1 * c2
    m[1, 3] = q[3, 2] * c2 * s1**2
    m[2, 0] = (q[3, 2] + q[1, 0] * c1**2) * c2
    m[2, 1] = q[3, 0] * s1 * c2
    m[2, 2] = (q[1, 1] + q[0, 0] * s2**2) * c1**2 + (q[3, 3] + q[2, 2] * s2**2)
    m[2, 3] = (q[3, 1] + q[2, 0] * s2**2) * s1
    m[3, 0] = q[1, 2] * s1 * c2
    m[3, 1] = q[1, 0] * s1**2 * c2
    m[3, 2] = (q[1, 3] + q[0, 2] * s2**2) * s1
    m[3, 3] = (q[1, 1] + q[0, 0] * s2**2) * s1**2
    return m


_CORRECTIONS_II_I: Dict[Tuple[int, int], Tuple[EntryFn, str]] = {
    (1, 2): (
        lambda q, c1, s1, c2, s2: q[2, 0] * s1 * c2**2,
        "printed entry has S_1^2 where S_1 is needed (its (2,1) partner "
        "carries a single S_1)",
    ),
    (1, 3): (
        lambda q, c1, s1, c2, s2: (q[2, 3] + c1**2 * q[0, 1]) * c2,
        "printed entry drops the rho_12 C_1^2 term (Hermitian partner of "
        "the (3,1) entry)",
    ),
    (2, 1): (
        lambda q, c1, s1, c2, s2: q[0, 2] * s1 * c2**2,
        "printed entry has S_1^2 where S_1 is needed",
    ),
    (2, 4): (
        lambda q, c1, s1, c2, s2: q[0, 1] * c2 * s1**2,
        "printed entry reads rho_43 where rho_12 is needed (Hermitian "
        "partner of the (4,2) entry)",
    ),
}


_PRINTED = {
    "I-I": (_printed_i_i, _CORRECTIONS_I_I, "alice-rob"),
    "II-II": (_printed_ii_ii, _CORRECTIONS_II_II, "alice-rob"),
    "I-II": (_printed_i_ii, _CORRECTIONS_I_II, "alice-rob"),
    "II-I": (_printed_ii_i, _CORRECTIONS_II_I, "rob-alice"),
}


def _trig(acc: AccelerationPair):
    va = unruh_isometry(acc.r_a)
    vb = unruh_isometry(acc.r_b)
    return va[0, 0].real, va[3, 0].real, vb[0, 0].real, vb[3, 0].real


def printed_region_matrix(
    rho: np.ndarray, acc: AccelerationPair, sel: RegionSelector
) -> np.ndarray:
    """Literal printed matrix, re-expressed in Alice (x) Rob ordering."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    build, _, ordering = _PRINTED[sel.label]
    m = build(rho, *_trig(acc))
    if ordering == "rob-alice":
        m = _SWAP @ m @ _SWAP
    return m


def closed_form_region(
    rho: np.ndarray, acc: AccelerationPair, sel: RegionSelector
) -> Tuple[np.ndarray, ClosedFormReport]:
    """Printed matrix with flagged entries corrected, plus the correction report.

    The returned matrix matches the constructive channel; it exists for
    regression comparison, not as the primary computation path.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    build, corrections, ordering = _PRINTED[sel.label]
    c1, s1, c2, s2 = _trig(acc)
    m = build(rho, c1, s1, c2, s2)
    entries = []
    for (i, j), (fn, note) in sorted(corrections.items()):
        corrected = fn(rho, c1, s1, c2, s2)
        entries.append(
            CorrectedEntry(
                row=i,
                col=j,
                printed_value=complex(m[i - 1, j - 1]),
                corrected_value=complex(corrected),
                note=note,
            )
        )
        m[i - 1, j - 1] = corrected
    if ordering == "rob-alice":
        m = _SWAP @ m @ _SWAP
    return m, ClosedFormReport(
        region=sel.label, printed_ordering=ordering, corrections=tuple(entries)
    )


# --- published fidelity formulas (regression-only) -------------------------

def printed_fidelity_self_transposed(
    rho: np.ndarray, acc: AccelerationPair, region: str
) -> float:
    """Literal published overlap-fidelity formula for self-transposed inputs.

    Known to deviate from the numeric trace (the region-I form drops the
    correction terms of the (4,4) channel entry, the region-II form repeats
    rho_11 where rho_44 belongs).  Kept verbatim for the discrepancy report.
    """
    rho = np.asarray(rho, dtype=complex)
    c1, s1, c2, s2 = _trig(acc)
    q = rho
    czz = (q[0, 0] + q[3, 3] - q[1, 1] - q[2, 2]).real
    cxx = (q[0, 3] + q[3, 0] + q[1, 2] + q[2, 1]).real
    cyy = (-q[0, 3] - q[3, 0] + q[1, 2] + q[2, 1]).real
    if region == "I":
        val = (
            (1 + czz) / 4 * (q[0, 0] * c1**2 * c2**2 + q[3, 3])
            + (cxx + cyy) / 2 * (q[1, 2] + q[2, 1]) * c1 * c2
            + (cxx - cyy) / 4 * (q[0, 3] + q[3, 0]) * c1 * c2
            + (1 - czz)
            / 4
            * (
                c1**2 * (q[1, 1] + q[0, 0] * s2**2)
                + c2**2 * (q[2, 2] + q[0, 0] * s1**2)
            )
        )
    elif region == "II":
        val = (
            (1 + czz) / 4 * (q[0, 0] * s1**2 * s2**2 + q[0, 0])
            + (cxx + cyy) / 2 * (q[1, 2] + q[2, 1]) * s1 * s2
            + (cxx - cyy) / 4 * (q[0, 3] + q[3, 0]) * s1 * s2
            + (1 - czz)
            / 4
            * (
                s2**2 * (q[2, 2] + q[0, 0] * c1**2)
                + s1**2 * (q[1, 1] + q[0, 0] * c1**2)
            )
        )
    else:
        raise ValueError(f"region must be 'I' or 'II', got {region!r}")
    return float(val.real)


def printed_fidelity_pure(p: float, acc: AccelerationPair, region: str) -> float:
    """Literal published overlap-fidelity formula for the generic pure family.

    The printed region-I expression carries a dangling exponent and the
    region-II one a duplicated '+'; transcribed at face value, for the
    discrepancy report only.
    """
    c1, s1, c2, s2 = _trig(acc)
    q = float(np.sqrt(1.0 - p * p))
    if region == "I":
        return float(
            ((1 - q) / 4) ** 2 * (c1**2 * c2 + 2 * c1 * c2 + s1**2 * s2**2 + 1)
            + ((1 + q) / 4) ** 2 * (c1 + c2) ** 2
            + (p / 4) ** 2 * (4 * c2 + 2 * c1)
        )
    if region == "II":
        return float(
            ((1 + q) / 4) ** 2 * (1 + 2 * s1 * s2 + c1**2 * c2**2 + s1**2 * s2**2)
            + ((1 + q) / 4) ** 2 * (s1 + s2) ** 2
            + p**2 / 4 * (s1 + s2)
            + (1 - q**2) / 16 * (c1**2 + c2**2 + c1**2 * s2**2 + s1**2 * c2**2)
        )
    raise ValueError(f"region must be 'I' or 'II', got {region!r}")
