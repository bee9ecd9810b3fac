"""Concurrence, overlap fidelity, teleportation criterion, and separability."""

import numpy as np
import pytest

from unruh_channels.channel import R_MAX, REGION_LABELS, AccelerationPair, channel
from unruh_channels.measures import (
    concurrence,
    concurrence_self_transposed,
    measure_report,
    overlap_fidelity,
    purity,
    separability_self_transposed,
    teleportation_criterion,
)
from unruh_channels.states import (
    Bell,
    BlochForm,
    GenericPure,
    Werner,
    bloch_to_density,
    make_state,
    random_density,
)
from conftest import (
    random_product_state,
    random_self_transposed,
    random_unitary,
)

MIXED = np.eye(4) / 4.0


class TestConcurrence:
    def test_singlet(self):
        assert concurrence(make_state(Bell())) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert concurrence(MIXED) == 0.0

    def test_werner(self):
        assert concurrence(make_state(Werner(0.6))) == pytest.approx(0.4, abs=1e-10)

    def test_invalid_state_rejected(self):
        with pytest.raises(ValueError, match="not a density matrix"):
            concurrence(np.eye(4))

    def test_local_unitary_invariance(self, rng):
        for _ in range(200):
            rho = random_density(rng)
            u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
            rotated = u @ rho @ u.conj().T
            assert concurrence(rotated) == pytest.approx(
                concurrence(rho), abs=1e-10
            )

    def test_product_states_have_zero_concurrence(self, rng):
        for _ in range(10_000):
            assert concurrence(random_product_state(rng)) == 0.0


class TestConcurrenceSelfTransposed:
    def test_singlet_dyadic(self):
        b = BlochForm(np.zeros(3), np.zeros(3), np.diag([-1.0, -1.0, -1.0]))
        assert concurrence_self_transposed(b) == 1.0

    def test_separability_boundary(self):
        x = 1.0 / 3.0
        b = BlochForm(np.zeros(3), np.zeros(3), np.diag([x, x, x]))
        assert concurrence_self_transposed(b) == pytest.approx(0.0, abs=1e-15)

    def test_rejects_general_states(self):
        b = BlochForm(np.array([0.5, 0, 0]), np.zeros(3), np.zeros((3, 3)))
        with pytest.raises(ValueError, match="self-transposed"):
            concurrence_self_transposed(b)

    def test_matches_eigen_solve(self, rng):
        worst = 0.0
        for b in random_self_transposed(rng, 2000):
            closed = concurrence_self_transposed(b)
            full = concurrence(bloch_to_density(b))
            worst = max(worst, abs(closed - full))
        assert worst <= 1e-10


class TestOverlapFidelity:
    def test_self_overlap_is_purity(self, rng):
        for _ in range(20):
            rho = random_density(rng)
            assert overlap_fidelity(rho, rho) == pytest.approx(
                purity(rho), abs=1e-13
            )

    def test_pure_self_overlap_is_one(self):
        for p in np.linspace(0.0, 1.0, 11):
            rho = make_state(GenericPure(float(p)))
            assert overlap_fidelity(rho, rho) == pytest.approx(1.0, abs=1e-12)

    def test_identity_channel_gives_input_purity(self, rng):
        for _ in range(20):
            rho = random_density(rng)
            out = channel(rho, AccelerationPair(0.0, 0.0), REGION_LABELS["I-I"])
            assert overlap_fidelity(out, rho) == pytest.approx(
                purity(rho), abs=1e-12
            )

    def test_invalid_input_rejected(self):
        with pytest.raises(ValueError):
            overlap_fidelity(np.eye(4), MIXED)


class TestTeleportationCriterion:
    def test_singlet(self):
        assert teleportation_criterion(make_state(Bell())) == pytest.approx(
            3.0, abs=1e-12
        )

    def test_maximally_mixed(self):
        assert teleportation_criterion(MIXED) == 0.0

    def test_werner_scaling_and_threshold(self):
        for x in np.linspace(0.0, 1.0, 21):
            telp = teleportation_criterion(make_state(Werner(float(x))))
            assert telp == pytest.approx(3.0 * x, abs=1e-12)
        third = teleportation_criterion(make_state(Werner(1.0 / 3.0)))
        assert third == pytest.approx(1.0, abs=1e-12)

    def test_local_unitary_invariance(self, rng):
        for _ in range(100):
            rho = random_density(rng)
            u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
            rotated = u @ rho @ u.conj().T
            assert teleportation_criterion(rotated) == pytest.approx(
                teleportation_criterion(rho), abs=1e-10
            )

    def test_defined_for_non_diagonal_dyadics(self):
        # accelerated generic pure states develop xz/zx dyadic entries; the
        # singular-value form must still apply
        rho = make_state(GenericPure(0.5))
        out = channel(rho, AccelerationPair(0.4, 0.4), REGION_LABELS["I-I"])
        assert teleportation_criterion(out) >= 0.0


class TestSeparability:
    def test_singlet_entangled(self):
        b = BlochForm(np.zeros(3), np.zeros(3), np.diag([-1.0, -1.0, -1.0]))
        assert separability_self_transposed(b) == "entangled"

    def test_zero_dyadic_separable(self):
        b = BlochForm(np.zeros(3), np.zeros(3), np.zeros((3, 3)))
        assert separability_self_transposed(b) == "separable"

    def test_rejects_general_states(self):
        b = BlochForm(np.array([0.1, 0, 0]), np.zeros(3), np.zeros((3, 3)))
        with pytest.raises(ValueError, match="self-transposed"):
            separability_self_transposed(b)

    def test_verdict_agrees_with_concurrence(self, rng):
        for b in random_self_transposed(rng, 10_000):
            verdict = separability_self_transposed(b)
            conc = concurrence(bloch_to_density(b))
            if verdict == "entangled":
                assert conc > 0.0
            else:
                assert conc <= 1e-10


class TestPurity:
    def test_maximally_mixed(self):
        assert purity(MIXED) == pytest.approx(0.25, abs=1e-15)

    def test_singlet(self):
        assert purity(make_state(Bell())) == pytest.approx(1.0, abs=1e-13)

    def test_werner(self):
        assert purity(make_state(Werner(0.6))) == pytest.approx(0.52, abs=1e-13)


class TestMeasureReport:
    def test_entangled_verdict(self):
        rep = measure_report(make_state(Bell()))
        assert rep.separable_verdict == "entangled"
        assert rep.concurrence == pytest.approx(1.0, abs=1e-12)
        assert rep.purity == pytest.approx(1.0, abs=1e-12)

    def test_separable_verdict(self):
        assert measure_report(MIXED).separable_verdict == "separable"

    def test_fidelity_against_reference_state(self):
        rho0 = make_state(Werner(0.6))
        out = channel(rho0, AccelerationPair(0.0, 0.0), REGION_LABELS["I-I"])
        rep = measure_report(out, rho0)
        assert rep.fidelity == pytest.approx(purity(rho0), abs=1e-12)


class TestAcceleratedSinglet:
    def test_one_stationary_concurrence_monotone_and_persistent(self):
        # with Rob stationary the singlet's entanglement degrades but survives
        # the infinite-acceleration limit
        rho = make_state(Bell())
        values = [
            concurrence(
                channel(rho, AccelerationPair(float(r), 0.0), REGION_LABELS["I-I"])
            )
            for r in np.linspace(0.0, R_MAX, 256)
        ]
        diffs = np.diff(values)
        assert (diffs <= 1e-12).all()
        assert values[-1] > 0.3

    def test_one_stationary_closed_form(self):
        # the surviving concurrence equals cos(r) for the singlet
        rho = make_state(Bell())
        for r in np.linspace(0.0, R_MAX, 32):
            out = channel(rho, AccelerationPair(float(r), 0.0), REGION_LABELS["I-I"])
            assert concurrence(out) == pytest.approx(np.cos(r), abs=1e-12)
