"""Bound states of the 3D square well (s-wave).

Energies 0 < E < V0 solve tan(Ka) = -K/sigma with interior wavenumber
K = sqrt(2mE)/hbar and exterior decay rate sigma = sqrt(2m(V0-E))/hbar.
There is exactly one root per branch Ka in ((n+1/2)pi, (n+1)pi) that
intersects (0, V0).  States landing at the threshold E = V0 itself belong to
the exceptional-point machinery and are excluded here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import RADIAL3D, WellSpec, find_real_root
from .errors import DomainError

THRESHOLD_BAND = 1e-9  # |E - V0| < band*V0 counts as a threshold hit


@dataclass(frozen=True)
class BoundState:
    """A single bound level with matched interior/exterior coefficients."""

    well: WellSpec
    energy: float
    K: float
    sigma: float
    A: float
    B: float
    branch_index: int


def _matching_function(well: WellSpec):
    """Smooth matching residual g(w) = w*cos(w) + sigma*a*sin(w), w = Ka.

    Roots of g coincide with tan(Ka) = -K/sigma but g stays finite at the
    tangent poles, so it brackets cleanly.
    """
    ga = well.gamma * math.sqrt(well.depth)

    def g(w):
        sa2 = ga * ga - w * w
        if sa2 < 0.0:
            return math.nan
        return w * math.cos(w) + math.sqrt(sa2) * math.sin(w)

    return g, ga


def _scan_roots(well: WellSpec, tol: float = 1e-14):
    """All matching roots in w = Ka, split into interior roots and threshold hits."""
    g, ga = _matching_function(well)
    roots, hits = [], []
    n = 0
    while (n + 0.5) * math.pi < ga:
        w_lo = (n + 0.5) * math.pi
        w_hi = min((n + 1.0) * math.pi, ga)
        if g(w_lo) * g(w_hi) < 0.0:
            w = find_real_root(g, (w_lo, w_hi), tol=tol)
            E = well.energy_scale * w * w
            if abs(E - well.depth) < THRESHOLD_BAND * well.depth:
                hits.append((n, E))
            else:
                roots.append((n, w, E))
        elif g(w_hi) == 0.0 and w_hi == ga:
            hits.append((n, well.depth))
        n += 1
    return roots, hits


def _normalization(well: WellSpec, w: float, sigma: float) -> float:
    """Interior amplitude A giving unit L2 norm of A*sin(Kr)/r (4*pi*r^2 measure)."""
    a = well.radius
    K = w / a
    interior = a / 2.0 - math.sin(2.0 * w) / (4.0 * K)
    exterior = math.sin(w) ** 2 / (2.0 * sigma)
    return 1.0 / math.sqrt(4.0 * math.pi * (interior + exterior))


def bound_energies(well: WellSpec) -> list[BoundState]:
    """All bound states of the well, sorted by energy.

    One state per branch Ka in ((n+1/2)pi, (n+1)pi) with 0 < E < V0.  An
    empty list is valid (shallow well); threshold-sitting states are excluded
    (see threshold_hits).
    """
    if well.geometry != RADIAL3D:
        raise DomainError("bound_energies requires radial3d geometry")
    roots, _ = _scan_roots(well)
    states = []
    for n, w, E in roots:
        a = well.radius
        K = w / a
        sigma = math.sqrt(2.0 * well.mass * (well.depth - E)) / well.hbar
        A = _normalization(well, w, sigma)
        B = A * math.sin(w) * math.exp(sigma * a)
        states.append(BoundState(well=well, energy=E, K=K, sigma=sigma,
                                 A=A, B=B, branch_index=n))
    return states


def threshold_hits(well: WellSpec) -> list[float]:
    """Energies of matching roots sitting at E = V0 (routed to exceptional points)."""
    if well.geometry != RADIAL3D:
        raise DomainError("threshold_hits requires radial3d geometry")
    _, hits = _scan_roots(well)
    out = [E for _, E in hits]
    # a threshold mode at the edge of a not-yet-open branch (cos(gamma*sqrt(V0))=0)
    ga = well.gamma * math.sqrt(well.depth)
    if abs(math.cos(ga)) < THRESHOLD_BAND and not out:
        out.append(well.depth)
    return out


def bound_state_count(well: WellSpec) -> int:
    """Closed-form count ceil(gamma*sqrt(V0)/pi - 1/2), clamped at >= 0.

    A half-ulp guard snaps arguments sitting within 1e-12 of an integer down,
    so exactly-at-threshold depths count their threshold state as excluded.
    """
    x = well.gamma * math.sqrt(well.depth) / math.pi - 0.5
    return max(0, math.ceil(x - 1e-12))


def bound_wavefunction(state: BoundState, r) -> complex:
    """Radial wavefunction psi(r), unit L2 normalized.

    A*sin(Kr)/r inside the well, B*exp(-sigma*r)/r outside; continuous at
    r = a by construction of B.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    a = state.well.radius
    inside = state.A * np.sin(state.K * r_arr) / r_arr
    outside = state.B * np.exp(-state.sigma * r_arr) / r_arr
    out = np.where(r_arr < a, inside, outside)
    if np.isscalar(r) or r_arr.ndim == 0:
        return complex(out)
    return out.astype(complex)
