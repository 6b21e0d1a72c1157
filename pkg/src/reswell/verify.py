"""Invariant suite behind the `verify-all` CLI subcommand.

Each check is a named predicate over the library's own operations; run_all
returns (name, passed) tuples in a fixed order.  The full suite runs in a
few seconds.
"""

from __future__ import annotations

import math

import numpy as np

from .bound import bound_energies, bound_state_count
from .core import WellSpec
from .exceptional import (exceptional_potentials, pair_collapse_check,
                          threshold_mode_psi1, threshold_mode_psi2,
                          threshold_modes)
from .ptalgebra import (PropagatorSpec, classify_spectrum, intertwiner_residual,
                        m_of_s, propagator_energy, propagator_energy_pole_sum,
                        propagator_time, pt_commutation_residual,
                        solve_intertwiner, time_advance_profile,
                        two_level_closure, two_level_vnorm)
from .pu import PUSpec, pu_hamiltonian_coefficients, pu_rayleigh_and_residual
from .resonance import (pt_norm_profile, resonance_pairs,
                        resonance_wavefunction, verify_pole_condition)
from .scattering import phase_shift, phase_shift_sweep, time_delay_profile
from .well1d import (pole_condition_residual_1d, pole_pairs_1d,
                     sweep_transmission, transmission_resonances_1d,
                     transmission_reflection)


def check_exceptional_closed_form() -> bool:
    w = WellSpec.natural(1.0)
    vals = exceptional_potentials(w, 3)
    exact = [math.pi**2 / 4, 9 * math.pi**2 / 4, 25 * math.pi**2 / 4]
    return all(abs(a - b) <= 4 * np.finfo(float).eps * b
               for a, b in zip(vals, exact))


def check_bound_gate() -> bool:
    # the state at V0 = pi^2/4 + eps sits eps^2/4 below threshold, so eps
    # must be large enough to clear the threshold-hit exclusion band
    eps = 1e-3
    lo = WellSpec.natural(math.pi**2 / 4 - eps)
    hi = WellSpec.natural(math.pi**2 / 4 + eps)
    return len(bound_energies(lo)) == 0 and len(bound_energies(hi)) == 1


def check_bound_count_formula() -> bool:
    rng = np.random.default_rng(7)
    for v0 in rng.uniform(0.01, 100.0, 20):
        well = WellSpec.natural(float(v0))
        if bound_state_count(well) != len(bound_energies(well)):
            return False
    return True


def check_first_pair() -> bool:
    well = WellSpec.natural(1.0)
    pairs = resonance_pairs(well, 1)
    if not pairs:
        return False
    p = pairs[0]
    ok = math.pi < p.mu < 1.5 * math.pi and p.residual <= 1e-10
    ok &= verify_pole_condition(well, p.E_plus) <= 1e-8
    ok &= verify_pole_condition(well, p.E_minus) <= 1e-8
    K1, K2 = p.K_plus.real, p.K_plus.imag
    k1, k2 = p.k_plus.real, p.k_plus.imag
    ok &= abs(K1 * K1 - K2 * K2 - p.E0) <= 1e-9 * max(abs(p.E0), 1.0)
    ok &= abs(2 * K1 * K2 - p.Gamma) <= 1e-9 * p.Gamma
    ok &= abs(k1 * k1 - k2 * k2 - (p.E0 - 1.0)) <= 1e-9 * max(abs(p.E0 - 1.0), 1.0)
    ok &= abs(2 * k1 * k2 - p.Gamma) <= 1e-9 * p.Gamma
    return bool(ok)


def check_pt_norm() -> bool:
    well = WellSpec.natural(1.0)
    p = resonance_pairs(well, 1)[0]
    ts = [0.0, 1.0 / p.Gamma, 10.0 / p.Gamma]
    vals = pt_norm_profile(p, 2.5, ts)
    ref = vals[0]
    if any(abs(v - ref) > 1e-10 * abs(ref) for v in vals[1:]):
        return False
    rs = np.linspace(1.5, 6.0, 7)
    prods = [pt_norm_profile(p, float(r), [0.0, 1.0])[0] * r * r for r in rs]
    return all(abs(q - prods[0]) <= 1e-10 * abs(prods[0]) for q in prods)


def check_threshold_modes() -> bool:
    well = WellSpec.natural(math.pi**2 / 4)
    modes = threshold_modes(well)
    a = well.radius
    eps = 1e-7
    for t in (0.0, 1.0, 10.0):
        for psi in (threshold_mode_psi1, threshold_mode_psi2):
            lo = psi(modes, a - eps, t)
            hi = psi(modes, a + eps, t)
            if abs(hi - lo) > 1e-5 * max(abs(lo), 1.0):
                return False
    q0 = threshold_mode_psi2(modes, 0.5, 0.0)
    q1 = threshold_mode_psi2(modes, 0.5, 1.0)
    p1 = threshold_mode_psi1(modes, 0.5, 1.0)
    # psi2's linear-in-t part is psi1 * t
    lin = q1 - np.exp(-1j * well.depth * 1.0) * (q0 / 1.0)
    return abs(lin - p1 * 1.0) < 1e-10


def check_collapse_scaling() -> bool:
    rep = pair_collapse_check(1.0, [1e-3, 5e-4, 2.5e-4], np.linspace(0, 1, 11))
    sums, diffs = rep.error_ratios()
    return all(abs(r - 0.25) < 0.025 for r in sums + diffs)


def check_unitarity_and_cancellation() -> bool:
    well = WellSpec.natural(1.0)
    pts = phase_shift_sweep(well, np.linspace(1.1, 20.0, 300))
    if any(abs(abs(np.exp(2j * p.delta)) - 1.0) > 1e-12 for p in pts):
        return False
    Es = np.linspace(0.0, 30.0, 101)
    total = time_advance_profile(12.0, 3.0, Es) + time_delay_profile(12.0, 3.0, Es)
    return bool(np.all(total == 0.0))


def check_well1d() -> bool:
    well = WellSpec(depth=1.0, radius=1.0, mass=0.5, hbar=1.0, geometry="line1d")
    res = sweep_transmission(well, np.linspace(1.001, 50.0, 500))
    if any(abs(r.T + r.R - 1.0) > 1e-12 for r in res):
        return False
    for E in transmission_resonances_1d(well, 3):
        if abs(transmission_reflection(well, E).T - 1.0) > 1e-12:
            return False
    pairs = pole_pairs_1d(well, 2)
    return all(pole_condition_residual_1d(well, p.E_plus) <= 1e-9
               and pole_condition_residual_1d(well, p.E_minus) <= 1e-9
               for p in pairs)


def check_m_of_s() -> bool:
    ok = classify_spectrum(m_of_s(2.0).matrix) == "real-spectrum"
    ok &= classify_spectrum(m_of_s(0.5).matrix) == "conjugate-pairs"
    ok &= classify_spectrum(m_of_s(1.0).matrix) == "exceptional"
    ok &= all(pt_commutation_residual(m_of_s(s).matrix) == 0.0
              for s in (0.5, 1.0, 2.0))
    V = solve_intertwiner(m_of_s(2.0))
    ok &= intertwiner_residual(m_of_s(2.0), V) <= 1e-10
    return bool(ok)


def check_two_level() -> bool:
    want = np.array([[0.0, -1.0], [1.0, 0.0]])
    for t in (0.0, 1.0, 7.0):
        if np.max(np.abs(two_level_vnorm(2.0, 0.5, t) - want)) > 1e-12:
            return False
        if np.max(np.abs(two_level_closure(2.0, 0.5, t) - np.eye(2))) > 1e-12:
            return False
    return True


def check_propagators() -> bool:
    spec = PropagatorSpec(E0=5.0, Gamma=0.7, kind="pt_pair", contour="real_axis")
    Es = np.linspace(-10.0, 20.0, 401)
    diff = np.abs(propagator_energy(spec, Es) - propagator_energy_pole_sum(spec, Es))
    if np.max(diff) > 1e-14:
        return False
    causal = PropagatorSpec(E0=5.0, Gamma=0.7, kind="pt_pair",
                            contour="deformed_lower")
    return all(propagator_time(causal, t) == 0.0 for t in (-3.0, -0.5, -1e-9))


def check_pu() -> bool:
    spec = PUSpec(omega1=1.0, omega2=2.0)
    _, r1 = pu_rayleigh_and_residual(spec, extent=8.0, points=256)
    e2, r2 = pu_rayleigh_and_residual(spec, extent=8.0, points=512)
    if not 3.0 < r1 / r2 < 5.5:
        return False
    if abs(e2.imag) > 1e-8:
        return False
    conj = PUSpec(omega1=1 + 1j, omega2=1 - 1j)
    coeffs = pu_hamiltonian_coefficients(conj)
    return coeffs == (0.5, 1.0, 0.0, -2.0)


def check_unit_covariance() -> bool:
    base = WellSpec.natural(5.0)
    e_base = [s.energy for s in bound_energies(base)]
    for lam in (0.1, 1.0, 10.0):
        scaled = WellSpec(depth=5.0 / lam**2, radius=lam, mass=0.5, hbar=1.0)
        e_scaled = [s.energy for s in bound_energies(scaled)]
        if len(e_base) != len(e_scaled):
            return False
        for eb, es in zip(e_base, e_scaled):
            if abs(es - eb / lam**2) > 1e-9 * abs(eb / lam**2):
                return False
    return True


def check_resonance_wavefunction_matching() -> bool:
    well = WellSpec.natural(1.0)
    p = resonance_pairs(well, 1)[0]
    a, eps = well.radius, 1e-7
    lo = resonance_wavefunction(p, "minus", a - eps)
    hi = resonance_wavefunction(p, "minus", a + eps)
    dlo = (resonance_wavefunction(p, "minus", a - eps)
           - resonance_wavefunction(p, "minus", a - 3 * eps)) / (2 * eps)
    dhi = (resonance_wavefunction(p, "minus", a + 3 * eps)
           - resonance_wavefunction(p, "minus", a + eps)) / (2 * eps)
    scale = max(abs(dlo), abs(dhi), 1.0)
    return abs(hi - lo) < 1e-5 and abs(dhi - dlo) / scale < 1e-4


CHECKS = [
    ("exceptional potentials closed form", check_exceptional_closed_form),
    ("bound-state gate at first threshold", check_bound_gate),
    ("bound count formula vs solver", check_bound_count_formula),
    ("first resonance pair residuals", check_first_pair),
    ("resonance wavefunction matching", check_resonance_wavefunction_matching),
    ("mixed-member norm time independence", check_pt_norm),
    ("threshold mode pair structure", check_threshold_modes),
    ("pair collapse quadratic scaling", check_collapse_scaling),
    ("unitarity and delay/advance cancellation", check_unitarity_and_cancellation),
    ("1D well conservation and poles", check_well1d),
    ("M(s) taxonomy and intertwiner", check_m_of_s),
    ("two-level V-norm and closure", check_two_level),
    ("propagator pole sum and causality", check_propagators),
    ("PU grid residual convergence", check_pu),
    ("unit covariance of bound energies", check_unit_covariance),
]


def run_all():
    results = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
