"""Exceptional depths of the 3D well and their threshold modes.

At V0(n) = (2n+1)^2 * pi^2 * hbar^2 / (8 m a^2) a matched state sits exactly
at the threshold E = V0 (condition cos(gamma*sqrt(V0)) = 0, with
sin(gamma*sqrt(V0)) = (-1)^n).  There the stationary mode psi_1 (exterior
1/r) is joined by a second, linearly-growing-in-time solution psi_2 that
solves the time-dependent wave equation without being an energy eigenstate.
As the depth approaches such a value from above, the branch-n conjugate pair
collapses onto the single threshold state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import WellSpec
from .errors import DomainError, NotExceptional

EXCEPTIONAL_TOL = 1e-9  # |cos(gamma*sqrt(V0))| below this counts as exceptional


@dataclass(frozen=True)
class ThresholdModes:
    """Coefficient data of the threshold pair (psi_1, psi_2) at an exceptional depth."""

    well: WellSpec
    n: int
    A1: float
    B1: float
    A2: float
    B2: float

    @property
    def psi1_coeffs(self):
        return (self.A1, self.B1)

    @property
    def psi2_coeffs(self):
        return (self.A2, self.B2)


def exceptional_potentials(well_template: WellSpec, n_max: int) -> list[float]:
    """First n_max exceptional depths (2n+1)^2 pi^2 hbar^2 / (8 m a^2), n = 0.."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    scale = (math.pi ** 2 * well_template.hbar ** 2
             / (8.0 * well_template.mass * well_template.radius ** 2))
    return [(2 * n + 1) ** 2 * scale for n in range(n_max)]


def _check_exceptional(well: WellSpec) -> int:
    """Branch index n, raising NotExceptional when cos(gamma*sqrt(V0)) != 0."""
    ga = well.gamma * math.sqrt(well.depth)
    if abs(math.cos(ga)) >= EXCEPTIONAL_TOL:
        raise NotExceptional(
            f"V0 = {well.depth} is not exceptional: |cos(gamma*sqrt(V0))| = "
            f"{abs(math.cos(ga)):.3e}")
    return int(round(ga / math.pi - 0.5))


def threshold_modes(well: WellSpec) -> ThresholdModes:
    """Build the threshold-mode pair for a well at an exceptional depth.

    Amplitude convention A1 = A2 = 1; the exterior amplitudes follow from the
    matching line B = A*sin(gamma*sqrt(V0)) = +/- A.
    """
    n = _check_exceptional(well)
    s = math.sin(well.gamma * math.sqrt(well.depth))
    return ThresholdModes(well=well, n=n, A1=1.0, B1=s, A2=1.0, B2=s)


def threshold_mode_psi1(modes: ThresholdModes, r, t: float = 0.0):
    """Stationary threshold mode: sin(Kr)/r inside, 1/r outside, energy V0."""
    _check_exceptional(modes.well)
    well = modes.well
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    K = math.sqrt(2.0 * well.mass * well.depth) / well.hbar
    phase = np.exp(-1j * well.depth * t / well.hbar)
    inside = modes.A1 * np.sin(K * r_arr) / r_arr
    outside = modes.B1 / r_arr
    out = phase * np.where(r_arr < well.radius, inside, outside)
    if np.isscalar(r) or r_arr.ndim == 0:
        return complex(out)
    return out


def threshold_mode_psi2(modes: ThresholdModes, r, t: float = 0.0):
    """Linearly growing threshold solution; solves the wave equation but is
    not an eigenstate of i*hbar*d/dt (its linear-in-t part is psi_1 * t)."""
    _check_exceptional(modes.well)
    well = modes.well
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    a, m, hbar, V0 = well.radius, well.mass, well.hbar, well.depth
    K = math.sqrt(2.0 * m * V0) / hbar
    phase = np.exp(-1j * V0 * t / hbar)
    inside = modes.A2 * (t * np.sin(K * r_arr) / r_arr
                         + 1j * m * np.cos(K * r_arr) / math.sqrt(2.0 * m * V0))
    outside = modes.B2 * (t / r_arr - 1j * m * (r_arr - a) / hbar)
    out = phase * np.where(r_arr < a, inside, outside)
    if np.isscalar(r) or r_arr.ndim == 0:
        return complex(out)
    return out


@dataclass(frozen=True)
class CollapseReport:
    """Max-over-time errors of the two collapse limits, per width."""

    E0: float
    gamma_seq: list
    sum_errors: list
    diff_errors: list

    def error_ratios(self):
        """(sum, diff) error ratios between consecutive widths."""
        sums = [b / a if a > 0 else math.nan
                for a, b in zip(self.sum_errors, self.sum_errors[1:])]
        diffs = [b / a if a > 0 else math.nan
                 for a, b in zip(self.diff_errors, self.diff_errors[1:])]
        return sums, diffs


def pair_collapse_check(E0: float, gamma_seq, t_grid) -> CollapseReport:
    """Collapse of a conjugate pair onto a single state as Gamma -> 0.

    Checks (exp(-i(E0-iG)t) + exp(-i(E0+iG)t))/2 -> exp(-i E0 t)  (O(G^2 t^2))
    and (exp(-i(E0-iG)t) - exp(-i(E0+iG)t))/(-2G) -> t exp(-i E0 t) (O(G^2 t^3)).
    """
    gamma_seq = [float(g) for g in gamma_seq]
    if any(g < 0 for g in gamma_seq):
        raise DomainError("widths must be non-negative")
    if any(b >= a for a, b in zip(gamma_seq, gamma_seq[1:])):
        raise DomainError("gamma_seq must be strictly decreasing")
    t = np.asarray(list(t_grid), dtype=float)
    base = np.exp(-1j * E0 * t)
    sum_errors, diff_errors = [], []
    for g in gamma_seq:
        lower = np.exp(-1j * (E0 - 1j * g) * t)
        upper = np.exp(-1j * (E0 + 1j * g) * t)
        sum_errors.append(float(np.max(np.abs((lower + upper) / 2.0 - base))))
        if g == 0.0:
            diff_errors.append(0.0)
        else:
            quot = (lower - upper) / (-2.0 * g)
            diff_errors.append(float(np.max(np.abs(quot - t * base))))
    return CollapseReport(E0=float(E0), gamma_seq=gamma_seq,
                          sum_errors=sum_errors, diff_errors=diff_errors)
