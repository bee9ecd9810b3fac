"""Two-qubit states: Bloch parameterization, matrix form, and named families.

A two-qubit density operator is described by 15 real parameters: the local
Bloch vectors ``s`` (Alice) and ``t`` (Rob) and a 3x3 correlation dyadic
``C`` with entries ``c_ij = tr(rho sigma_i tau_j)``,

    rho = (1/4) (I + s.sigma (x) I + I (x) t.tau + sum_ij c_ij sigma_i (x) tau_j)

Density matrices are plain complex numpy arrays throughout; ``BlochForm`` is
the 15-parameter view of the same state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
MIN_EIGENVALUE_TOL = -1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)
IDENTITY_2 = np.eye(2, dtype=complex)


class InvariantViolation(RuntimeError):
    """A numeric invariant (trace, Hermiticity, positivity) broke beyond tolerance."""


@dataclass(frozen=True)
class BlochForm:
    """Bloch vectors and correlation dyadic of a two-qubit state."""

    s: np.ndarray  # Alice Bloch vector, shape (3,)
    t: np.ndarray  # Rob Bloch vector, shape (3,)
    C: np.ndarray  # correlation dyadic, shape (3, 3)

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        t = np.asarray(self.t, dtype=float)
        C = np.asarray(self.C, dtype=float)
        if s.shape != (3,) or t.shape != (3,) or C.shape != (3, 3):
            raise ValueError(
                f"BlochForm needs s,t of shape (3,) and C of shape (3,3); "
                f"got {s.shape}, {t.shape}, {C.shape}"
            )
        if not (np.isfinite(s).all() and np.isfinite(t).all() and np.isfinite(C).all()):
            raise ValueError("BlochForm entries must be finite")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "C", C)


@dataclass(frozen=True)
class ValidationReport:
    """Deviations of a matrix from the density-operator invariants."""

    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return (
            self.hermiticity_deviation <= HERMITICITY_TOL
            and self.trace_deviation <= TRACE_TOL
            and self.min_eigenvalue >= MIN_EIGENVALUE_TOL
        )


def bloch_to_density(b: BlochForm) -> np.ndarray:
    """Build the 4x4 density matrix from its Bloch parameterization.

    Hermitian and unit-trace by construction; positivity is not enforced here.
    """
    rho = np.eye(4, dtype=complex)
    for i in range(3):
        rho += b.s[i] * np.kron(PAULI[i], IDENTITY_2)
        rho += b.t[i] * np.kron(IDENTITY_2, PAULI[i])
        for j in range(3):
            rho += b.C[i, j] * np.kron(PAULI[i], PAULI[j])
    return rho / 4.0


# stacked Pauli observables for fast trace extraction
_S_OBS = np.stack([np.kron(p, IDENTITY_2) for p in PAULI])
_T_OBS = np.stack([np.kron(IDENTITY_2, p) for p in PAULI])
_C_OBS = np.stack([np.kron(p, q) for p in PAULI for q in PAULI])


def density_to_bloch(rho: np.ndarray) -> BlochForm:
    """Extract Bloch vectors and correlation dyadic; exact inverse of bloch_to_density."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    s = np.einsum("ij,kji->k", rho, _S_OBS).real
    t = np.einsum("ij,kji->k", rho, _T_OBS).real
    C = np.einsum("ij,kji->k", rho, _C_OBS).real.reshape(3, 3)
    return BlochForm(s=s, t=t, C=C)


def validate_density(rho: np.ndarray) -> ValidationReport:
    """Report Hermiticity, trace, and positivity deviations of a candidate state."""
    rho = np.asarray(rho, dtype=complex)
    herm = float(np.abs(rho - rho.conj().T).max())
    trace = float(abs(np.trace(rho) - 1.0))
    sym = (rho + rho.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(sym).min())
    return ValidationReport(
        hermiticity_deviation=herm, trace_deviation=trace, min_eigenvalue=min_eig
    )


def is_self_transposed(rho: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff the state has zero Bloch vectors and a diagonal correlation dyadic."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    b = density_to_bloch(rho)
    off = b.C - np.diag(np.diag(b.C))
    return (
        np.abs(b.s).max() <= tol
        and np.abs(b.t).max() <= tol
        and np.abs(off).max() <= tol
    )


# --- named state families -------------------------------------------------

@dataclass(frozen=True)
class GeneralizedWerner:
    """X state: zero Bloch vectors, C = diag(c_xx, c_yy, c_zz)."""

    c_xx: float
    c_yy: float
    c_zz: float


@dataclass(frozen=True)
class Bell:
    """Bell state with C = diag(sign_x, sign_y, sign_z); defaults to the singlet.

    Only sign triples with product -1 give density matrices (the four Bell
    states); other triples are rejected by the positivity check.
    """

    sign_x: int = -1
    sign_y: int = -1
    sign_z: int = -1


@dataclass(frozen=True)
class Werner:
    """Isotropic mixture of a maximally entangled state with white noise.

    Realized with C = diag(x, x, -x) so that the nonzero matrix elements sit
    at rho_23 = rho_32 = x/2; separable iff x <= 1/3.
    """

    x: float


@dataclass(frozen=True)
class GenericPure:
    """One-parameter pure state with Bloch vector length p.

    s = (p,0,0), t = (-p,0,0), c_xx = -1, c_yy = c_zz = -sqrt(1-p^2);
    maximally entangled at p = 0, product state at p = 1.
    """

    p: float


@dataclass(frozen=True)
class Explicit:
    """A state given directly by its Bloch parameterization."""

    bloch: BlochForm


StateFamily = Union[GeneralizedWerner, Bell, Werner, GenericPure, Explicit]


def family_bloch(family: StateFamily) -> BlochForm:
    """Bloch parameterization of a family member (parameter ranges checked)."""
    zero = np.zeros(3)
    if isinstance(family, GeneralizedWerner):
        cs = (family.c_xx, family.c_yy, family.c_zz)
        for name, c in zip(("c_xx", "c_yy", "c_zz"), cs):
            if not -1.0 <= c <= 1.0:
                raise ValueError(f"{name}={c} out of range [-1, 1]")
        return BlochForm(s=zero, t=zero, C=np.diag(cs))
    if isinstance(family, Bell):
        signs = (family.sign_x, family.sign_y, family.sign_z)
        if any(sg not in (-1, 1) for sg in signs):
            raise ValueError(f"Bell signs must be +1 or -1, got {signs}")
        return BlochForm(s=zero, t=zero, C=np.diag([float(sg) for sg in signs]))
    if isinstance(family, Werner):
        if not -1.0 / 3.0 <= family.x <= 1.0:
            raise ValueError(f"Werner x={family.x} out of range [-1/3, 1]")
        return BlochForm(s=zero, t=zero, C=np.diag([family.x, family.x, -family.x]))
    if isinstance(family, GenericPure):
        if not 0.0 <= family.p <= 1.0:
            raise ValueError(f"GenericPure p={family.p} out of range [0, 1]")
        p = family.p
        q = np.sqrt(1.0 - p * p)
        return BlochForm(
            s=np.array([p, 0.0, 0.0]),
            t=np.array([-p, 0.0, 0.0]),
            C=np.diag([-1.0, -q, -q]),
        )
    if isinstance(family, Explicit):
        return family.bloch
    raise TypeError(f"not a state family: {family!r}")


def make_state(family: StateFamily) -> np.ndarray:
    """Instantiate a family member as a validated 4x4 density matrix."""
    rho = bloch_to_density(family_bloch(family))
    report = validate_density(rho)
    if not report.ok:
        raise ValueError(
            f"{family!r} does not define a density matrix "
            f"(min eigenvalue {report.min_eigenvalue:.3e})"
        )
    return rho


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Random density matrix from the Ginibre ensemble."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real
