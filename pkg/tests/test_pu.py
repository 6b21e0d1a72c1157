import math

import numpy as np
import pytest

from reswell import (BoundaryLeak, DomainError, PUSpec, classify_realization,
                     exponent_matrix, pu_hamiltonian_coefficients,
                     pu_rayleigh_and_residual, pu_wavefunction)


@pytest.fixture(scope="module")
def spec12():
    return PUSpec(omega1=1.0, omega2=2.0)


@pytest.fixture(scope="module")
def spec_conj():
    return PUSpec(omega1=1.0 + 1.0j, omega2=1.0 - 1.0j)


class TestPUSpec:
    def test_realization_inference(self, spec12, spec_conj):
        assert spec12.realization == "unequal_real"
        assert spec_conj.realization == "conjugate_pair"
        assert PUSpec(omega1=1.5, omega2=1.5).realization == "equal_real"

    def test_companion_matrix_classification_agrees(self, spec12, spec_conj):
        assert classify_realization(spec12) == "unequal_real"
        assert classify_realization(spec_conj) == "conjugate_pair"
        assert classify_realization(PUSpec(omega1=1.5, omega2=1.5)) == "equal_real"

    def test_inconsistent_label_rejected(self):
        with pytest.raises(DomainError):
            PUSpec(omega1=1.0, omega2=2.0, realization="conjugate_pair")

    def test_nonreal_combinations_rejected(self):
        with pytest.raises(DomainError):
            PUSpec(omega1=1.0 + 1.0j, omega2=2.0)

    def test_nonpositive_combinations_rejected(self):
        with pytest.raises(DomainError):
            PUSpec(omega1=-1.0, omega2=-2.0)
        with pytest.raises(DomainError):
            PUSpec(omega1=1.0, omega2=-2.0)


class TestWavefunction:
    def test_unit_at_origin(self, spec12, spec_conj):
        assert pu_wavefunction(spec12, 0.0, 0.0) == 1.0
        assert pu_wavefunction(spec_conj, 0.0, 0.0) == 1.0

    def test_real_positive_everywhere(self, spec12):
        rng = np.random.default_rng(5)
        y = rng.uniform(-3, 3, 100)
        x = rng.uniform(-3, 3, 100)
        vals = pu_wavefunction(spec12, y, x)
        assert np.max(np.abs(vals.imag)) == 0.0
        assert np.min(vals.real) > 0.0

    def test_exponent_matrix_positive_definite(self, spec12, spec_conj):
        for spec in (spec12, spec_conj):
            A = exponent_matrix(spec)
            vals = np.linalg.eigvalsh(A)
            assert np.all(vals > 0)
            # the quadratic form reproduces the exponent
            for y, x in ((0.5, -1.0), (2.0, 0.3)):
                v = np.array([y, x])
                assert pu_wavefunction(spec, y, x) == pytest.approx(
                    math.exp(-v @ A @ v), rel=1e-12)

    def test_conjugate_pair_still_gaussian(self, spec_conj):
        # only the real combinations enter the exponent
        assert pu_wavefunction(spec_conj, 1.0, 1.0) == pytest.approx(
            math.exp(-0.5 * 2 * 2 - 2 - 0.5 * 2), rel=1e-12)


class TestRayleighAndResidual:
    def test_eigenvalue_estimate_unequal_real(self, spec12):
        e_est, residual = pu_rayleigh_and_residual(spec12, extent=8.0, points=512)
        # converged value is half the frequency sum
        assert e_est.real == pytest.approx(0.5 * spec12.freq_sum, abs=5e-3)
        assert abs(e_est.imag) < 1e-10
        assert residual < 2e-3

    def test_eigenvalue_real_for_conjugate_pair(self, spec_conj):
        e_est, residual = pu_rayleigh_and_residual(spec_conj, extent=8.0,
                                                   points=512)
        assert abs(e_est.imag) < 1e-6
        assert e_est.real == pytest.approx(0.5 * spec_conj.freq_sum, abs=5e-3)
        assert residual < 2e-3

    def test_second_order_convergence(self, spec12):
        res = [pu_rayleigh_and_residual(spec12, extent=8.0, points=n)[1]
               for n in (256, 512, 1024)]
        # log-log slope of residual vs h: expect 2 +/- 0.2
        h = np.array([1.0 / 256, 1.0 / 512, 1.0 / 1024])
        slope = np.polyfit(np.log(h), np.log(res), 1)[0]
        assert slope == pytest.approx(2.0, abs=0.2)
        for r1, r2 in zip(res, res[1:]):
            assert 3.0 < r1 / r2 < 5.5

    def test_extent_stability(self, spec12):
        e1 = pu_rayleigh_and_residual(spec12, extent=8.0, points=512)[0]
        e2 = pu_rayleigh_and_residual(spec12, extent=12.0, points=768)[0]
        assert abs(e1 - e2) < 1e-6

    def test_boundary_leak_detected(self, spec12):
        with pytest.raises(BoundaryLeak):
            pu_rayleigh_and_residual(spec12, extent=2.0, points=256)

    def test_grid_size_guard(self, spec12):
        with pytest.raises(DomainError):
            pu_rayleigh_and_residual(spec12, points=128)


class TestHamiltonianCoefficients:
    def test_unequal_real(self, spec12):
        assert pu_hamiltonian_coefficients(spec12) == pytest.approx(
            (0.5, 1.0, 2.5, -2.0), abs=1e-15)

    def test_conjugate_pair_coefficients_real(self, spec_conj):
        coeffs = pu_hamiltonian_coefficients(spec_conj)
        # omega = 1 +/- i: a^2 - b^2 = 0 and -(a^2+b^2)^2/2 = -2
        assert coeffs == pytest.approx((0.5, 1.0, 0.0, -2.0), abs=1e-12)
        assert all(isinstance(c, float) for c in coeffs)
