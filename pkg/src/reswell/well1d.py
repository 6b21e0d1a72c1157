"""One-dimensional finite well: transmission, reflection, and pole pairs.

For a well of width a (zero inside, V0 outside) with incoming wave A*e^{ikx}
and transmitted wave C*e^{ikx},

    C/A = e^{-ika} / (cos(Ka) - i*sin(Ka)*(k^2+K^2)/(2kK))
    B/C = i*sin(Ka)*(K^2-k^2)/(2kK)

so T = |C/A|^2 = 1/(1+X^2) with X^2 = V0^2 sin^2(Ka)/(4E(E-V0)) and
R = 1 - T.  Transmission resonances sit at sin(Ka) = 0, i.e.
E = n^2 pi^2 hbar^2/(2 m a^2).  Poles of C/A in the complex energy plane
solve tan(Ka) = -2ikK/(k^2+K^2); like the 3D case they come in conjugate
pairs, with the conjugate member satisfying the condition on the opposite
branch of k, so the residual is evaluated over both branches.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

import numpy as np

from .core import LINE1D, WellSpec, newton2d, principal_sqrt
from .errors import DomainError, NoConvergence, SingularJacobian
from .resonance import ResonancePair


@dataclass(frozen=True)
class Well1DResult:
    """Scattering coefficients of the 1D well at one energy above V0."""

    E: float
    T: float
    R: float
    X2: float
    C_over_A: complex
    B_over_C: complex


def _require_1d(well: WellSpec):
    if well.geometry != LINE1D:
        raise DomainError("this operation requires line1d geometry")


def _amplitude_ratios(well: WellSpec, E: complex):
    """(C/A, B/C) at complex energy, with branch-consistent momenta."""
    a = well.radius
    K = well.interior_K(E)
    k = well.exterior_k(E)
    denom = cmath.cos(K * a) - 1j * cmath.sin(K * a) * (k * k + K * K) / (2.0 * k * K)
    c_over_a = cmath.exp(-1j * k * a) / denom
    b_over_c = 1j * cmath.sin(K * a) * (K * K - k * k) / (2.0 * k * K)
    return c_over_a, b_over_c


def transmission_reflection(well: WellSpec, E: float) -> Well1DResult:
    """Transmission/reflection coefficients at real energy E > V0."""
    _require_1d(well)
    if not E > well.depth:
        raise DomainError(f"E = {E} must exceed V0 = {well.depth}")
    c_over_a, b_over_c = _amplitude_ratios(well, E)
    T = abs(c_over_a) ** 2
    R = abs(b_over_c * c_over_a) ** 2
    Ka = well.gamma * math.sqrt(E)
    X2 = well.depth**2 * math.sin(Ka) ** 2 / (4.0 * E * (E - well.depth))
    return Well1DResult(E=float(E), T=T, R=R, X2=X2,
                        C_over_A=c_over_a, B_over_C=b_over_c)


def transmission_resonances_1d(well: WellSpec, n_max: int) -> list[float]:
    """First n_max energies n^2 pi^2 hbar^2/(2 m a^2) above V0 (T = 1 there)."""
    _require_1d(well)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    scale = math.pi**2 * well.hbar**2 / (2.0 * well.mass * well.radius**2)
    out = []
    n = 1
    while len(out) < n_max:
        E = n * n * scale
        if E > well.depth:
            out.append(E)
        n += 1
    return out


def pole_condition_residual_1d(well: WellSpec, E: complex) -> float:
    """|cos(Ka) - i*sin(Ka)*(k^2+K^2)/(2kK)|, minimized over the k branch."""
    a = well.radius
    K = well.interior_K(E)
    vals = []
    for k in (well.exterior_k(E), -well.exterior_k(E)):
        vals.append(abs(cmath.cos(K * a)
                        - 1j * cmath.sin(K * a) * (k * k + K * K) / (2.0 * k * K)))
    return min(vals)


def pole_pairs_1d(well: WellSpec, n_max: int, return_skipped: bool = False):
    """Conjugate pole pairs of C/A, one Newton search per branch seed.

    Solved in the complex variable w = Ka with E = hbar^2 w^2/(2 m a^2);
    branches whose search fails or duplicates another root are skipped.
    """
    _require_1d(well)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    g2V0 = well.gamma**2 * well.depth
    a = well.radius
    scale = well.energy_scale

    def D(wr, wi):
        w = complex(wr, wi)
        ka_ext = principal_sqrt(w * w - g2V0)
        val = (cmath.cos(w)
               - 1j * cmath.sin(w) * (ka_ext * ka_ext + w * w) / (2.0 * ka_ext * w))
        return val.real, val.imag

    pairs, skipped, found_w = [], [], []
    for n in range(1, n_max + 1):
        seed = (n * math.pi + math.pi / 4.0, 0.3)
        try:
            wr, wi = newton2d(D, seed, tol=1e-12, max_iter=300)
        except (NoConvergence, SingularJacobian) as exc:
            skipped.append((n, str(exc)))
            continue
        w = complex(wr, wi)
        if wr <= 0.0 or any(abs(w - u) < 1e-8 or abs(w.conjugate() - u) < 1e-8
                            for u in found_w):
            skipped.append((n, f"duplicate or unphysical root {w}"))
            continue
        found_w.append(w)
        E = scale * w * w
        E_plus = E if E.imag > 0 else E.conjugate()
        root = principal_sqrt(E_plus)
        mu, nu = root.real, root.imag
        K_plus = well.interior_K(E_plus)
        k_plus = well.exterior_k(E_plus)
        res = pole_condition_residual_1d(well, E_plus)
        pair = ResonancePair(
            well=well, branch_index=n, mu=mu, nu=nu,
            E0=E_plus.real, Gamma=E_plus.imag,
            K_plus=K_plus, K_minus=K_plus.conjugate(),
            k_plus=k_plus, k_minus=k_plus.conjugate(),
            residual=res)
        pairs.append(pair)
    if return_skipped:
        return pairs, skipped
    return pairs


def inverse_transmission_amplitude(well: WellSpec, E: complex) -> float:
    """1/|C/A| at complex energy, minimized over the exterior branch.

    Vanishes at pole-pair members (the denominator of C/A has a zero there).
    """
    a = well.radius
    K = well.interior_K(E)
    vals = []
    for k in (well.exterior_k(E), -well.exterior_k(E)):
        denom = cmath.cos(K * a) - 1j * cmath.sin(K * a) * (k * k + K * K) / (2.0 * k * K)
        vals.append(abs(denom * cmath.exp(1j * k * a)))
    return min(vals)


def sweep_transmission(well: WellSpec, energies) -> list[Well1DResult]:
    """Transmission/reflection along an energy sweep."""
    return [transmission_reflection(well, float(E)) for E in np.asarray(energies, float)]
