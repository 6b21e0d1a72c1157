import math

import numpy as np
import pytest
from scipy.integrate import quad

from reswell import (DomainError, WellSpec, bound_energies, bound_state_count,
                     bound_wavefunction, threshold_hits)


def grid_scan_bound_count(v0: float, n_points: int = 1_000_000) -> int:
    """Independent oracle: sign-change scan of tan(Ka) + K/sigma over E in (0, V0).

    Sign changes at tangent poles are rejected by requiring the straddling
    values to be small (a genuine root crosses near zero on a fine grid).
    """
    E = np.linspace(v0 / n_points, v0 * (1 - 1e-12), n_points)
    K = np.sqrt(E)
    sigma = np.sqrt(v0 - E)
    f = np.tan(K) + K / sigma
    a, b = f[:-1], f[1:]
    crossing = a * b < 0
    genuine = np.minimum(np.abs(a), np.abs(b)) < 1.0
    return int(np.count_nonzero(crossing & genuine))


class TestBoundEnergies:
    def test_empty_below_first_threshold(self):
        w = WellSpec.natural(math.pi**2 / 4 - 1e-3)
        assert bound_energies(w) == []

    def test_one_state_just_above_first_threshold(self):
        w = WellSpec.natural(math.pi**2 / 4 + 1e-3)
        states = bound_energies(w)
        assert len(states) == 1
        assert 0 < states[0].energy < w.depth

    def test_exactly_one_at_second_exceptional_depth(self):
        # the would-be second state sits at E = V0 and is excluded
        w = WellSpec.natural(9 * math.pi**2 / 4)
        states = bound_energies(w)
        assert len(states) == 1
        assert threshold_hits(w) == [w.depth]

    def test_v0_50_matches_grid_oracle(self):
        w = WellSpec.natural(50.0)
        states = bound_energies(w)
        assert len(states) == grid_scan_bound_count(50.0)
        for st in states:
            # oracle residual: the defining transcendental condition
            assert abs(math.tan(st.K) + st.K / st.sigma) < 1e-8

    def test_matching_conditions(self):
        w = WellSpec.natural(50.0)
        for st in bound_energies(w):
            a = w.radius
            lhs_val = st.A * math.sin(st.K * a)
            rhs_val = st.B * math.exp(-st.sigma * a)
            assert abs(lhs_val - rhs_val) <= 1e-10 * abs(rhs_val)
            lhs_d = st.A * st.K * math.cos(st.K * a)
            rhs_d = -st.B * st.sigma * math.exp(-st.sigma * a)
            assert abs(lhs_d - rhs_d) <= 1e-10 * max(abs(rhs_d), 1e-300)

    def test_sine_relation_residual(self):
        # |sin(Ka)| = sqrt(E/V0) on the bound branch
        w = WellSpec.natural(50.0)
        for st in bound_energies(w):
            assert abs(abs(math.sin(st.K)) - math.sqrt(st.energy / w.depth)) < 1e-10

    def test_increasing_and_bounded(self):
        w = WellSpec.natural(200.0)
        energies = [st.energy for st in bound_energies(w)]
        assert energies == sorted(energies)
        assert all(0 < E < w.depth for E in energies)

    def test_count_law_random_depths(self):
        rng = np.random.default_rng(42)
        for v0 in rng.uniform(1e-3, 100.0, 100):
            w = WellSpec.natural(float(v0))
            assert bound_state_count(w) == len(bound_energies(w)), v0

    def test_count_matches_grid_oracle_random_depths(self):
        rng = np.random.default_rng(3)
        for v0 in rng.uniform(0.5, 100.0, 12):
            assert len(bound_energies(WellSpec.natural(float(v0)))) == \
                grid_scan_bound_count(float(v0), 200_000), v0

    def test_level_sinks_below_threshold_with_depth(self):
        # fixed branch: E - V0 decreases monotonically as V0 grows (the level
        # binds deeper below threshold; absolute E rises toward the
        # infinite-well limit instead)
        depths = np.linspace(5.0, 80.0, 16)
        below = [bound_energies(WellSpec.natural(v0))[0].energy - v0
                 for v0 in depths]
        assert all(b < a for a, b in zip(below, below[1:]))

    def test_geometry_guard(self):
        with pytest.raises(DomainError):
            bound_energies(WellSpec(depth=1.0, geometry="line1d"))


@pytest.fixture(scope="module")
def states():
    return bound_energies(WellSpec.natural(50.0))


class TestBoundWavefunction:
    def test_continuity_at_radius(self, states):
        for st in states:
            lo = bound_wavefunction(st, 1.0 - 1e-12)
            hi = bound_wavefunction(st, 1.0 + 1e-12)
            assert abs(hi - lo) <= 1e-10 * abs(lo)

    def test_asymptotic_decay(self, states):
        st = states[0]
        for r in (5.0, 10.0, 20.0):
            val = abs(bound_wavefunction(st, r)) * r * math.exp(st.sigma * r)
            assert val == pytest.approx(abs(st.B), rel=1e-12)

    def test_unit_norm_adaptive_quadrature(self, states):
        for st in states:
            integrand = lambda r: 4 * math.pi * r * r * abs(bound_wavefunction(st, r))**2
            inner, _ = quad(integrand, 0.0, 1.0, limit=200)
            outer, _ = quad(integrand, 1.0, np.inf, limit=200)
            assert inner + outer == pytest.approx(1.0, abs=1e-8)

    def test_domain_error(self, states):
        with pytest.raises(DomainError):
            bound_wavefunction(states[0], 0.0)
        with pytest.raises(DomainError):
            bound_wavefunction(states[0], -1.0)
