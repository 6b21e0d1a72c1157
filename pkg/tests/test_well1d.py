import math

import numpy as np
import pytest

from reswell import (DomainError, WellSpec, inverse_transmission_amplitude,
                     pole_condition_residual_1d, pole_pairs_1d,
                     sweep_transmission, transmission_reflection,
                     transmission_resonances_1d)

LINE = "line1d"


def well1d(v0: float) -> WellSpec:
    return WellSpec(depth=v0, radius=1.0, mass=0.5, hbar=1.0, geometry=LINE)


@pytest.fixture(scope="module")
def well():
    return well1d(1.0)


@pytest.fixture(scope="module")
def pairs(well):
    return pole_pairs_1d(well, 3)


class TestTransmissionReflection:
    def test_flux_conservation_sweep(self, well):
        E = np.linspace(1.0 + 1e-6, 500.0, 10_000)
        for res in sweep_transmission(well, E):
            assert res.T + res.R == pytest.approx(1.0, abs=1e-12)

    def test_transmission_formula(self, well):
        for E in (1.5, 2.0, 7.3, 40.0):
            res = transmission_reflection(well, E)
            assert res.T == pytest.approx(1.0 / (1.0 + res.X2), rel=1e-12)

    def test_unit_transmission_at_resonances(self, well):
        for E in transmission_resonances_1d(well, 4):
            res = transmission_reflection(well, E)
            assert res.T == pytest.approx(1.0, abs=1e-12)
            assert res.X2 == pytest.approx(0.0, abs=1e-28)
            assert abs(math.sin(well.gamma * math.sqrt(E))) < 1e-13

    def test_resonance_energies_closed_form(self, well):
        got = transmission_resonances_1d(well, 3)
        want = [n * n * math.pi**2 for n in (1, 2, 3)]
        assert got == pytest.approx(want, rel=1e-15)

    def test_resonances_skip_values_below_depth(self):
        w = well1d(50.0)
        got = transmission_resonances_1d(w, 2)
        # n = 1 gives pi^2 < 50, n = 2 gives 4 pi^2 < 50; first valid is n = 3
        assert got[0] == pytest.approx(9 * math.pi**2, rel=1e-15)
        assert got[1] == pytest.approx(16 * math.pi**2, rel=1e-15)

    def test_vanishing_depth_is_transparent(self):
        w = well1d(1e-10)
        for E in (0.5, 2.0, 9.0):
            assert transmission_reflection(w, E).T == pytest.approx(1.0, abs=1e-9)

    def test_amplitude_ratio_normalization(self, well):
        for E in (1.2, 3.0, 11.0):
            res = transmission_reflection(well, E)
            b_over_a = res.B_over_C * res.C_over_A
            assert abs(res.C_over_A) ** 2 + abs(b_over_a) ** 2 == pytest.approx(
                1.0, abs=1e-12)

    def test_domain_guards(self, well):
        with pytest.raises(DomainError):
            transmission_reflection(well, well.depth)
        with pytest.raises(DomainError):
            transmission_reflection(WellSpec.natural(1.0), 2.0)
        with pytest.raises(DomainError):
            transmission_resonances_1d(well, 0)


class TestPolePairs1D:
    def test_frozen_values(self, pairs):
        table = [(-7.007249, 48.038192), (30.207024, 98.031463),
                 (89.976759, 151.154479)]
        assert len(pairs) == 3
        for p, (e0, g) in zip(pairs, table):
            assert p.E0 == pytest.approx(e0, abs=1e-5)
            assert p.Gamma == pytest.approx(g, abs=1e-5)

    def test_pole_residual_both_members(self, well, pairs):
        for p in pairs:
            assert pole_condition_residual_1d(well, p.E_plus) <= 1e-9
            assert pole_condition_residual_1d(well, p.E_minus) <= 1e-9

    def test_inverse_transmission_vanishes(self, well, pairs):
        for p in pairs:
            assert inverse_transmission_amplitude(well, p.E_plus) < 1e-6
            assert inverse_transmission_amplitude(well, p.E_minus) < 1e-6

    def test_generic_point_is_not_a_pole(self, well):
        assert pole_condition_residual_1d(well, 25.0 + 3.0j) > 0.01
        assert inverse_transmission_amplitude(well, 25.0 + 3.0j) > 0.01

    def test_conjugate_pairing(self, pairs):
        for p in pairs:
            assert p.Gamma > 0
            assert p.E_minus == p.E_plus.conjugate()
            assert p.K_minus == p.K_plus.conjugate()
            assert p.k_minus == p.k_plus.conjugate()

    def test_momentum_energy_identity(self, well, pairs):
        hb2m = well.hbar**2 / (2 * well.mass)
        for p in pairs:
            assert abs(hb2m * p.K_plus**2 - p.E_plus) <= 1e-9 * abs(p.E_plus)
            assert abs(hb2m * p.k_plus**2 - (p.E_plus - well.depth)) \
                <= 1e-9 * abs(p.E_plus - well.depth)

    def test_real_parts_near_transmission_resonances(self, well, pairs):
        # each pole's real part sits within 2*Gamma of a transmission peak
        peaks = transmission_resonances_1d(well, 8)
        for p in pairs:
            assert any(abs(p.E0 - Ep) < 2 * p.Gamma for Ep in peaks)

    def test_unit_covariance(self):
        base = pole_pairs_1d(well1d(1.0), 2)
        for lam in (0.5, 2.0):
            scaled_well = WellSpec(depth=1.0 / lam**2, radius=lam, mass=0.5,
                                   hbar=1.0, geometry=LINE)
            scaled = pole_pairs_1d(scaled_well, 2)
            for b, s in zip(base, scaled):
                assert s.E0 == pytest.approx(b.E0 / lam**2, rel=1e-9)
                assert s.Gamma == pytest.approx(b.Gamma / lam**2, rel=1e-9)

    def test_geometry_guard(self):
        with pytest.raises(DomainError):
            pole_pairs_1d(WellSpec.natural(1.0), 2)
