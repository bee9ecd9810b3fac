"""Channel quality measures: concurrence, overlap fidelity, teleportation criterion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import (
    SIGMA_Y,
    BlochForm,
    InvariantViolation,
    density_to_bloch,
    validate_density,
)

_SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)
EIGENVALUE_CLAMP = -1e-10


@dataclass(frozen=True)
class MeasureReport:
    """All channel measures for one state."""

    concurrence: float
    fidelity: float
    telp: float
    purity: float
    separable_verdict: str  # "separable" | "entangled" | "undetermined"


def _check_state(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    report = validate_density(rho)
    if not report.ok:
        raise ValueError(
            f"not a density matrix: hermiticity {report.hermiticity_deviation:.2e}, "
            f"trace deviation {report.trace_deviation:.2e}, "
            f"min eigenvalue {report.min_eigenvalue:.2e}"
        )
    return rho


def _concurrence_core(rho: np.ndarray) -> float:
    """Concurrence of an already-validated state (no invariant re-check).

    With rho = A A-dagger, the l_i of the Wootters formula are the singular
    values of A^T (sy x sy) A: this avoids squaring the spectrum, so
    rank-deficient states (pure states, channel outputs at the grid
    boundaries) keep full precision instead of sqrt(eps) error.
    """
    w, u = np.linalg.eigh(rho)
    if w.min() < EIGENVALUE_CLAMP:
        raise InvariantViolation(
            f"state eigenvalue {w.min():.3e} below the roundoff clamp "
            f"{EIGENVALUE_CLAMP:.0e}"
        )
    a = u * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(a.T @ _SPIN_FLIP @ a, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit state.

    C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
    eigenvalues of rho (sy x sy) rho* (sy x sy), computed in the numerically
    stable singular-value form described in _concurrence_core.
    """
    return _concurrence_core(_check_state(rho))


def concurrence_self_transposed(b: BlochForm) -> float:
    """Closed-form concurrence max(0, (tr|C| - 1)/2) for the self-transposed class."""
    _require_self_transposed(b)
    return float(max(0.0, (np.abs(np.diag(b.C)).sum() - 1.0) / 2.0))


def separability_self_transposed(b: BlochForm) -> str:
    """Exact separability dichotomy for the self-transposed class.

    Separable iff det(C) >= 0 or tr|C| <= 1; entangled otherwise.
    """
    _require_self_transposed(b)
    det = float(np.prod(np.diag(b.C)))
    tr_abs = float(np.abs(np.diag(b.C)).sum())
    if det >= 0.0 or tr_abs <= 1.0:
        return "separable"
    return "entangled"


def _require_self_transposed(b: BlochForm) -> None:
    off = b.C - np.diag(np.diag(b.C))
    if (
        np.abs(b.s).max() > 1e-12
        or np.abs(b.t).max() > 1e-12
        or np.abs(off).max() > 1e-12
    ):
        raise ValueError(
            "state is not self-transposed (needs zero Bloch vectors and a "
            "diagonal correlation dyadic)"
        )


def overlap_fidelity(rho_final: np.ndarray, rho_initial: np.ndarray) -> float:
    """Overlap fidelity tr(rho_final rho_initial).

    This is the trace overlap, not the Uhlmann fidelity; for mixed inputs it
    equals the input purity at zero acceleration.
    """
    rho_final = _check_state(rho_final)
    rho_initial = _check_state(rho_initial)
    val = np.trace(rho_final @ rho_initial)
    if abs(val.imag) > 1e-12:
        raise InvariantViolation(
            f"overlap fidelity has imaginary residue {val.imag:.3e}"
        )
    return float(val.real)


def _telp_core(rho: np.ndarray) -> float:
    C = density_to_bloch(rho).C
    return float(np.linalg.svd(C, compute_uv=False).sum())


def teleportation_criterion(rho: np.ndarray) -> float:
    """Teleportation quantity tr sqrt(C^T C) = sum of singular values of C.

    The state is useful for standard teleportation iff the returned value
    exceeds 1.  The singular-value form also covers accelerated channels with
    non-diagonal dyadics.
    """
    return _telp_core(_check_state(rho))


def purity(rho: np.ndarray) -> float:
    """tr(rho^2)."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.trace(rho @ rho).real)


def measure_report(rho: np.ndarray, rho_initial: np.ndarray | None = None) -> MeasureReport:
    """Evaluate all measures; fidelity is taken against rho_initial (or rho itself)."""
    rho = _check_state(rho)
    conc = concurrence(rho)
    if conc > 1e-8:
        verdict = "entangled"
    elif conc == 0.0:
        verdict = "separable"
    else:
        verdict = "undetermined"
    return MeasureReport(
        concurrence=conc,
        fidelity=overlap_fidelity(rho, rho if rho_initial is None else rho_initial),
        telp=teleportation_criterion(rho),
        purity=purity(rho),
        separable_verdict=verdict,
    )
