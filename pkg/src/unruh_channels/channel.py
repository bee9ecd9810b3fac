"""Unruh mode mixing and the four region-restricted two-qubit channels.

Each observer's qubit is carried through the mode decomposition

    |0> -> cos(r) |0_I 0_II> + sin(r) |1_I 1_II>
    |1> -> |1_I 0_II>

where r in [0, pi/4] is the dimensionless acceleration parameter
(tan r = exp(-2 pi omega c / a); r = pi/4 is the infinite-acceleration
limit).  The joint state lives on four factors ordered A_I (x) A_II (x)
R_I (x) R_II; keeping one wedge per observer and tracing the other two
factors yields the four channels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import InvariantViolation

R_MAX = math.pi / 4.0
SYMMETRIZATION_GUARD = 1e-9

# einsum subscripts for the partial trace, keyed by the kept (alice, rob)
# slots of the A_I A_II R_I R_II ordering; output is ket/bra over
# (alice factor, rob factor).
_TRACE_SUBSCRIPTS = {
    (0, 2): "abcdebgd->aceg",
    (0, 3): "abcdebch->adeh",
    (1, 2): "abcdafgd->bcfg",
    (1, 3): "abcdafch->bdfh",
}


@dataclass(frozen=True)
class AccelerationPair:
    """Acceleration parameters (radians) for Alice and Rob."""

    r_a: float
    r_b: float

    def __post_init__(self):
        for name, r in (("r_a", self.r_a), ("r_b", self.r_b)):
            if not 0.0 <= r <= R_MAX:
                raise ValueError(f"{name}={r} out of range [0, pi/4]")


@dataclass(frozen=True)
class RegionSelector:
    """Which Rindler wedge is kept for each observer."""

    alice_region: str
    rob_region: str

    def __post_init__(self):
        for name, reg in (
            ("alice_region", self.alice_region),
            ("rob_region", self.rob_region),
        ):
            if reg not in ("I", "II"):
                raise ValueError(f"{name} must be 'I' or 'II', got {reg!r}")

    @property
    def label(self) -> str:
        return f"{self.alice_region}-{self.rob_region}"


REGION_LABELS = {
    "I-I": RegionSelector("I", "I"),
    "II-II": RegionSelector("II", "II"),
    "I-II": RegionSelector("I", "II"),
    "II-I": RegionSelector("II", "I"),
}


def unruh_isometry(r: float) -> np.ndarray:
    """4x2 isometry mapping one qubit onto its wedge-I (x) wedge-II factors."""
    if not 0.0 <= r <= R_MAX:
        raise ValueError(f"r={r} out of range [0, pi/4]")
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def dilate(rho: np.ndarray, acc: AccelerationPair) -> np.ndarray:
    """Embed a two-qubit state into the 16-dim A_I A_II R_I R_II space."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    w = np.kron(unruh_isometry(acc.r_a), unruh_isometry(acc.r_b))
    return w @ rho @ w.conj().T


def project_region(dilated: np.ndarray, sel: RegionSelector) -> np.ndarray:
    """Partial trace onto the selected wedges; output ordered Alice (x) Rob."""
    dilated = np.asarray(dilated, dtype=complex)
    if dilated.shape != (16, 16):
        raise ValueError(f"expected a 16x16 matrix, got shape {dilated.shape}")
    keep = (
        0 if sel.alice_region == "I" else 1,
        2 if sel.rob_region == "I" else 3,
    )
    t = dilated.reshape((2,) * 8)
    reduced = np.einsum(_TRACE_SUBSCRIPTS[keep], t).reshape(4, 4)
    deviation = float(np.abs(reduced - reduced.conj().T).max())
    if deviation > SYMMETRIZATION_GUARD:
        raise InvariantViolation(
            f"pre-symmetrization Hermiticity deviation {deviation:.3e} "
            f"exceeds {SYMMETRIZATION_GUARD:.0e} for region {sel.label}"
        )
    return (reduced + reduced.conj().T) / 2.0


def channel(rho: np.ndarray, acc: AccelerationPair, sel: RegionSelector) -> np.ndarray:
    """Region-restricted channel: dilation followed by partial trace."""
    return project_region(dilate(rho, acc), sel)
