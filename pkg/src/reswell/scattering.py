"""Real-axis scattering observables of the 3D well.

The s-wave phase shift solves K*tan(ka + delta) = k*tan(Ka) above threshold.
With alpha = ka and beta = k*tan(Ka)/K this is tan(alpha + delta) = beta, so

    delta = atan2(k*sin(Ka)*cos(alpha) - K*cos(Ka)*sin(alpha),
                  k*sin(Ka)*sin(alpha) + K*cos(Ka)*cos(alpha))

which stays finite through cos(Ka) = 0 and through the tan poles.  Real-axis
resonances are the energies where delta crosses pi/2 mod pi, i.e. roots of
beta*tan(alpha) + 1; widths come from a local least-squares fit of
cot(delta) = (E0 - E)/Gamma, with the dimensionless closed form
beta0 + 1/beta0 reported alongside for comparison.
"""

from __future__ import annotations

import math
import cmath
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import RADIAL3D, ComplexEnergy, WellSpec, find_real_root
from .errors import DomainError, FitFailed, NonFinite, NoSignChange

NEAR_SINGULAR_COS = 1e-12


@dataclass(frozen=True)
class PhaseShiftPoint:
    """Phase shift and auxiliary quantities at one real energy above threshold."""

    E: float
    delta: float
    alpha: float
    beta: float
    near_singular: bool


def _momenta(well: WellSpec, E: float):
    if well.geometry != RADIAL3D:
        raise DomainError("scattering requires radial3d geometry")
    if not E > well.depth:
        raise DomainError(f"E = {E} must exceed V0 = {well.depth}")
    K = math.sqrt(2.0 * well.mass * E) / well.hbar
    k = math.sqrt(2.0 * well.mass * (E - well.depth)) / well.hbar
    return K, k


def phase_shift(well: WellSpec, E: float) -> PhaseShiftPoint:
    """Principal-value phase shift at energy E > V0."""
    K, k = _momenta(well, E)
    a = well.radius
    alpha = k * a
    S, C = math.sin(K * a), math.cos(K * a)
    delta = math.atan2(k * S * math.cos(alpha) - K * C * math.sin(alpha),
                       k * S * math.sin(alpha) + K * C * math.cos(alpha))
    near = abs(C) < NEAR_SINGULAR_COS
    beta = math.inf if near else k * math.tan(K * a) / K
    return PhaseShiftPoint(E=float(E), delta=delta, alpha=alpha, beta=beta,
                           near_singular=near)


def _thread_count() -> int:
    raw = os.environ.get("RESWELL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def phase_shift_sweep(well: WellSpec, energies) -> list[PhaseShiftPoint]:
    """Phase shifts along an energy sweep, unwrapped to a continuous branch.

    The sweep fans out over RESWELL_THREADS workers; results are assembled in
    input order so output is deterministic regardless of thread count.
    """
    energies = [float(E) for E in energies]
    workers = _thread_count()
    if workers > 1 and len(energies) > 16:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda E: phase_shift(well, E), energies))
    else:
        points = [phase_shift(well, E) for E in energies]
    deltas = np.unwrap([p.delta for p in points], period=math.pi)
    return [PhaseShiftPoint(E=p.E, delta=float(d), alpha=p.alpha, beta=p.beta,
                            near_singular=p.near_singular)
            for p, d in zip(points, deltas)]


def scattering_amplitude(well: WellSpec, E: float) -> complex:
    """Partial-wave amplitude f = exp(i*delta)*sin(delta); Im f = |f|^2."""
    d = phase_shift(well, E).delta
    return cmath.exp(1j * d) * math.sin(d)


def tan_delta_complex(well: WellSpec, E: complex) -> complex:
    """tan(delta) continued to complex E via branch-consistent momenta."""
    ce = ComplexEnergy.at(well, complex(E))
    a = well.radius
    beta = ce.branch_k * cmath.tan(ce.branch_K * a) / ce.branch_K
    alpha = ce.branch_k * a
    return (beta - cmath.tan(alpha)) / (beta * cmath.tan(alpha) + 1.0)


def find_resonances_real_axis(well: WellSpec, E_range, n_scan: int = 10000,
                              residual_tol: float = 1e-9) -> list[float]:
    """Energies in E_range where delta = pi/2 mod pi (roots of beta*tan(alpha)+1).

    A sign-change scan over n_scan points is refined by bisection; candidates
    whose refined residual exceeds residual_tol are poles of the objective,
    not roots, and are discarded.  An empty list is valid.
    """
    lo, hi = float(E_range[0]), float(E_range[1])
    if not lo > well.depth:
        raise DomainError("E_range must lie above V0")
    if not hi > lo:
        raise DomainError("E_range must be increasing")
    if n_scan < 100:
        raise DomainError("n_scan must be >= 100")

    def g(E):
        p = phase_shift(well, E)
        if p.near_singular or not math.isfinite(p.beta):
            return math.inf
        return p.beta * math.tan(p.alpha) + 1.0

    grid = np.linspace(lo, hi, n_scan)
    vals = np.array([g(E) for E in grid])
    roots = []
    for i in range(n_scan - 1):
        a, b = vals[i], vals[i + 1]
        if not (np.isfinite(a) and np.isfinite(b)) or a * b > 0.0:
            continue
        try:
            E0 = find_real_root(g, (grid[i], grid[i + 1]), tol=1e-13)
        except (NoSignChange, NonFinite):
            continue
        if abs(g(E0)) <= residual_tol:
            roots.append(E0)
    return sorted(roots)


@dataclass(frozen=True)
class BreitWignerFit:
    """Local resonance fit tan(delta) = Gamma/(E0 - E).

    gamma is the canonical least-squares value (negative at an anti-resonance
    where delta crosses pi/2 falling); gamma_closed_form is the dimensionless
    beta0 + 1/beta0 comparison value.
    """

    gamma: float
    e0: float
    gamma_closed_form: float


def fit_breit_wigner(delta_of_E, e0_guess: float, gamma_guess: float,
                     e_min: float = -math.inf, n_points: int = 201,
                     n_refine: int = 3) -> tuple[float, float]:
    """Least-squares fit of cot(delta) = (E0 - E)/Gamma around e0_guess.

    Returns (Gamma, E0).  The window |E - E0| <= |Gamma|/2 is re-centered
    n_refine times; FitFailed if it ever dips to e_min or the fitted slope
    degenerates.
    """
    gamma, e0 = float(gamma_guess), float(e0_guess)
    for _ in range(n_refine):
        half = abs(gamma) / 2.0
        if not half > 0:
            raise FitFailed("degenerate width estimate")
        if e0 - half <= e_min:
            raise FitFailed(f"fit window [{e0 - half}, {e0 + half}] leaves E > {e_min}")
        Es = np.linspace(e0 - half, e0 + half, n_points)
        deltas = np.array([delta_of_E(E) for E in Es])
        sines = np.sin(deltas)
        keep = np.abs(sines) > 1e-12
        if np.count_nonzero(keep) < 3:
            raise FitFailed("phase shift vanishes across the fit window")
        cots = np.cos(deltas[keep]) / sines[keep]
        design = np.column_stack([np.ones_like(Es[keep]), Es[keep]])
        (c0, c1), *_ = np.linalg.lstsq(design, cots, rcond=None)
        if c1 == 0.0 or not np.isfinite(c1):
            raise FitFailed("degenerate cot(delta) slope")
        gamma, e0 = -1.0 / c1, -c0 / c1
    return float(gamma), float(e0)


def breit_wigner_width(well: WellSpec, E0: float) -> BreitWignerFit:
    """Width of the real-axis resonance at E0 (from find_resonances_real_axis)."""
    h = max(1e-7, 1e-7 * abs(E0))
    slope = _nearest_branch_slope(well, E0, h)
    if slope == 0.0 or not math.isfinite(slope):
        raise FitFailed("flat phase shift at E0")
    gamma0 = 1.0 / slope
    gamma, e0 = fit_breit_wigner(lambda E: phase_shift(well, E).delta,
                                 E0, gamma0, e_min=well.depth)
    p0 = phase_shift(well, E0)
    beta0 = p0.beta
    closed = beta0 + 1.0 / beta0 if beta0 not in (0.0, math.inf) else math.nan
    return BreitWignerFit(gamma=gamma, e0=e0, gamma_closed_form=closed)


def _nearest_branch_slope(well: WellSpec, E: float, h: float) -> float:
    """d(delta)/dE by central difference with mod-pi branch alignment."""
    d_lo = phase_shift(well, E - h).delta
    d_hi = phase_shift(well, E + h).delta
    d_hi -= math.pi * round((d_hi - d_lo) / math.pi)
    return (d_hi - d_lo) / (2.0 * h)


def wigner_time_delay(well: WellSpec, E: float, h: float = 1e-5) -> float:
    """Time delay hbar*d(delta)/dE by Richardson-extrapolated central difference."""
    if not E - h > well.depth:
        raise DomainError("stencil E - h must stay above V0")
    d1 = _nearest_branch_slope(well, E, h)
    d2 = _nearest_branch_slope(well, E, h / 2.0)
    return well.hbar * (4.0 * d2 - d1) / 3.0


def time_delay_profile(E0: float, Gamma: float, E, hbar: float = 1.0):
    """Lorentzian resonance time delay hbar*Gamma/((E-E0)^2 + Gamma^2)."""
    E = np.asarray(E, dtype=float)
    out = hbar * Gamma / ((E - E0) ** 2 + Gamma**2)
    return float(out) if out.ndim == 0 else out
