import math

import numpy as np
import pytest

from reswell import (ComplexEnergy, NonFinite, NoSignChange, NoConvergence,
                     SingularJacobian, WellSpec, find_real_root, newton2d,
                     principal_sqrt)


class TestWellSpec:
    def test_natural_units(self):
        w = WellSpec.natural(2.0)
        assert w.gamma == pytest.approx(1.0, abs=1e-15)
        assert w.energy_scale == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("field,value", [
        ("depth", -1.0), ("depth", 0.0), ("radius", 0.0),
        ("mass", -2.0), ("hbar", 0.0), ("depth", math.inf),
    ])
    def test_rejects_nonpositive(self, field, value):
        kwargs = dict(depth=1.0, radius=1.0, mass=0.5, hbar=1.0)
        kwargs[field] = value
        with pytest.raises(ValueError):
            WellSpec(**kwargs)

    def test_rejects_bad_geometry(self):
        with pytest.raises(ValueError):
            WellSpec(depth=1.0, geometry="spherical")


class TestBranches:
    @pytest.mark.parametrize("E", [
        2.0 + 3.0j, 2.0 - 3.0j, -1.0 + 0.5j, 10.0, 0.25, -4.0,
        100.0 + 1e-6j, 1e-8 - 1e-8j,
    ])
    def test_branch_consistency(self, E):
        w = WellSpec.natural(1.0)
        ce = ComplexEnergy.at(w, E)
        # (hbar K)^2/2m = E and (hbar k)^2/2m = E - V0, Re >= 0
        assert abs(ce.branch_K**2 * w.hbar**2 / (2 * w.mass) - E) <= 1e-12 * max(abs(E), 1)
        assert abs(ce.branch_k**2 * w.hbar**2 / (2 * w.mass) - (E - w.depth)) \
            <= 1e-12 * max(abs(E - w.depth), 1)
        assert ce.branch_K.real >= 0
        assert ce.branch_k.real >= 0

    def test_imaginary_sign_follows_energy(self):
        w = WellSpec.natural(1.0)
        for E in (2 + 1j, 2 - 1j, 5 + 0.01j, 5 - 0.01j):
            ce = ComplexEnergy.at(w, E)
            assert np.sign(ce.branch_k.imag) == np.sign(E.imag)

    def test_conjugation_covariance(self):
        w = WellSpec.natural(1.0)
        for E in (2 + 3j, -1 + 0.5j, 12.68 + 18.96j):
            a = ComplexEnergy.at(w, E)
            b = ComplexEnergy.at(w, np.conj(E))
            assert b.branch_k == a.branch_k.conjugate()
            assert b.branch_K == a.branch_K.conjugate()

    def test_principal_sqrt_on_cut(self):
        # Re = 0 resolves to Im >= 0
        assert principal_sqrt(-4.0) == 2j
        assert principal_sqrt(-4.0 - 0.0j) == 2j

    def test_unit_covariance_three_decades(self):
        # a -> lam*a, V0 -> V0/lam^2 maps K -> K/lam at E -> E/lam^2
        E = 3.0 + 1.5j
        base = WellSpec(depth=2.0, radius=1.0, mass=0.5, hbar=1.0)
        K0 = ComplexEnergy.at(base, E).branch_K
        for lam in (0.1, 1.0, 10.0, 100.0):
            scaled = WellSpec(depth=2.0 / lam**2, radius=lam, mass=0.5, hbar=1.0)
            K = ComplexEnergy.at(scaled, E / lam**2).branch_K
            assert abs(K - K0 / lam) <= 1e-9 * abs(K0 / lam)


class TestFindRealRoot:
    def test_sqrt2(self):
        x = find_real_root(lambda x: x * x - 2.0, (1.0, 2.0), tol=1e-12)
        assert x == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_sin_pi(self):
        x = find_real_root(math.sin, (3.0, 4.0), tol=1e-12)
        assert x == pytest.approx(math.pi, abs=1e-12)

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            find_real_root(lambda x: x - 5.0, (0.0, 1.0))

    def test_non_finite(self):
        with pytest.raises(NonFinite):
            find_real_root(lambda x: math.nan if 0.4 < x < 0.6 else x - 0.5,
                           (0.0, 1.0))


class TestNewton2d:
    def test_circle_line(self):
        x, y = newton2d(lambda x, y: (x * x + y * y - 1.0, x - y), (1.0, 0.0))
        assert x == pytest.approx(math.sqrt(2) / 2, abs=1e-10)
        assert y == pytest.approx(math.sqrt(2) / 2, abs=1e-10)

    def test_linear_one_step(self):
        x, y = newton2d(lambda x, y: (x - 3.0, y + 4.0), (0.0, 0.0), max_iter=2)
        assert (x, y) == pytest.approx((3.0, -4.0), abs=1e-10)

    def test_singular_jacobian(self):
        with pytest.raises(SingularJacobian):
            newton2d(lambda x, y: (1.0, 1.0), (0.0, 0.0))

    def test_no_convergence(self):
        with pytest.raises(NoConvergence):
            newton2d(lambda x, y: (x * x + 1.0, y), (1.0, 1.0), max_iter=5)
