"""Shared fixtures and random-state helpers for the test suite."""

import numpy as np
import pytest

from unruh_channels.states import BlochForm, bloch_to_density

# SWAP of the two qubit factors in the computational basis
SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def random_self_transposed(rng, n):
    """n random valid states with zero Bloch vectors and diagonal dyadic.

    Validity of the diagonal dyadic (c1, c2, c3) is equivalent to
    1 + e1 c1 + e2 c2 + e3 c3 >= 0 for the four sign triples with
    e1 e2 e3 = -1, so rejection sampling from the cube is cheap.
    """
    signs = np.array(
        [[-1, -1, -1], [-1, 1, 1], [1, -1, 1], [1, 1, -1]], dtype=float
    )
    out = []
    while len(out) < n:
        c = rng.uniform(-1.0, 1.0, size=(4 * (n - len(out)), 3))
        ok = (1.0 + c @ signs.T >= 0.0).all(axis=1)
        out.extend(c[ok])
    zero = np.zeros(3)
    return [
        BlochForm(s=zero, t=zero, C=np.diag(c)) for c in np.asarray(out[:n])
    ]


def random_qubit_density(rng):
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_product_state(rng):
    return np.kron(random_qubit_density(rng), random_qubit_density(rng))


def random_unitary(rng, dim):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def self_transposed_density(c_diag):
    zero = np.zeros(3)
    return bloch_to_density(BlochForm(s=zero, t=zero, C=np.diag(c_diag)))
