"""Complex-conjugate resonance pairs of the 3D square well.

Above threshold the matched-wave condition continues to complex energy
E = (mu + i*nu)^2.  Splitting into real and imaginary parts gives, on branch
n (with gamma*mu in (n*pi, (n+1/2)*pi)),

    sin(gamma*mu)*cosh(gamma*nu) = s * mu / sqrt(V0)
    cos(gamma*mu)*sinh(gamma*nu) = s * nu / sqrt(V0)

with s = (-1)^n the sign of sin(Ka) on that branch.  Each root with nu > 0
pairs with its conjugate (mu, -nu); the pair's center and width are
E0 = mu^2 - nu^2 and Gamma = 2*mu*nu.

The pole condition beta = k*tan(Ka)/K = -i is met exactly by the lower-half
member on the principal momentum branch; conjugation covariance then forces
beta = +i at the upper-half member, so the pole residual is evaluated as
min(|beta + i|, |beta - i|), which vanishes at both members and stays order
one at generic energies.

Wavefunctions follow the piecewise forms with interior sin(K r)/r and
exterior C*exp(i k1 r -/+ k2 r)/r for the +/- members: both exterior pieces
solve the wave equation, value continuity fixes C, and radial-derivative
matching is exact for the minus member (the plus member's matched
eigenfunction would instead carry the spatially growing conjugate exterior
wave; the decaying form used here is what makes the mixed product
conj(psi_+)*psi_- fall off as 1/r^2 with no time dependence).
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

import numpy as np

from .core import RADIAL3D, ComplexEnergy, WellSpec, newton2d
from .errors import DomainError, NoConvergence, SingularJacobian


@dataclass(frozen=True)
class ResonancePair:
    """A conjugate pair of complex energies E0 +/- i*Gamma.

    Only the nu > 0 representative is stored; the conjugate member is implied
    (K_minus = conj(K_plus), k_minus = conj(k_plus) exactly).
    """

    well: WellSpec
    branch_index: int
    mu: float
    nu: float
    E0: float
    Gamma: float
    K_plus: complex
    K_minus: complex
    k_plus: complex
    k_minus: complex
    residual: float

    @property
    def E_plus(self) -> complex:
        return complex(self.E0, self.Gamma)

    @property
    def E_minus(self) -> complex:
        return complex(self.E0, -self.Gamma)


def _branch_system(well: WellSpec, n: int):
    """The two real equations for branch n, in physical (mu, nu)."""
    g = well.gamma
    sv = math.sqrt(well.depth)
    s = -1.0 if n % 2 else 1.0

    def F(mu, nu):
        return (math.sin(g * mu) * math.cosh(g * nu) - s * mu / sv,
                math.cos(g * mu) * math.sinh(g * nu) - s * nu / sv)

    return F


def resonance_pairs(well: WellSpec, n_max: int, return_skipped: bool = False):
    """Conjugate pairs for branches n = 1..n_max where a nu > 0 root exists.

    Branches whose Newton search fails or whose root leaves the branch
    interval are skipped (reported via return_skipped), never fatal.
    """
    if well.geometry != RADIAL3D:
        raise DomainError("resonance_pairs requires radial3d geometry")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    g = well.gamma
    pairs, skipped = [], []
    for n in range(1, n_max + 1):
        F = _branch_system(well, n)
        seed = ((n * math.pi + math.pi / 4.0) / g, 0.5 / g)
        try:
            mu, nu = newton2d(F, seed, tol=1e-13, max_iter=200)
        except (NoConvergence, SingularJacobian) as exc:
            skipped.append((n, str(exc)))
            continue
        if not n * math.pi < g * mu < (n + 0.5) * math.pi:
            skipped.append((n, f"root ({mu}, {nu}) left branch {n}"))
            continue
        # nu at roundoff scale means the branch's pair has merged onto the
        # real axis: a real root, not a conjugate pair
        if not nu > 1e-12 * max(1.0, abs(mu)):
            skipped.append((n, f"root ({mu}, {nu}) is real (collapsed pair)"))
            continue
        res = max(abs(v) for v in F(mu, nu))
        E_plus = complex(mu, nu) ** 2
        K_plus = well.interior_K(E_plus)
        k_plus = well.exterior_k(E_plus)
        pairs.append(ResonancePair(
            well=well, branch_index=n, mu=mu, nu=nu,
            E0=mu * mu - nu * nu, Gamma=2.0 * mu * nu,
            K_plus=K_plus, K_minus=K_plus.conjugate(),
            k_plus=k_plus, k_minus=k_plus.conjugate(),
            residual=res))
    if return_skipped:
        return pairs, skipped
    return pairs


def verify_pole_condition(well: WellSpec, E: complex) -> float:
    """Residual of the matched-wave pole condition at complex energy E.

    Returns min(|beta + i|, |beta - i|) with beta = k*tan(Ka)/K on
    branch-consistent momenta: zero at bound states and at both members of
    every resonance pair, order one at generic energies.
    """
    E = complex(E)
    if E == complex(well.depth):
        raise DomainError("pole condition undefined at the branch point E = V0")
    ce = ComplexEnergy.at(well, E)
    beta = ce.branch_k * cmath.tan(ce.branch_K * well.radius) / ce.branch_K
    return min(abs(beta + 1j), abs(beta - 1j))


def _member_data(pair: ResonancePair, member: str):
    if member == "plus":
        return pair.E_plus, pair.K_plus, pair.k_plus
    if member == "minus":
        return pair.E_minus, pair.K_minus, pair.k_minus
    raise DomainError("member must be 'plus' or 'minus'")


def resonance_coefficient_C(pair: ResonancePair, member: str) -> complex:
    """Exterior amplitude from value continuity at r = a, with A = 1."""
    _, K, k = _member_data(pair, member)
    a = pair.well.radius
    return cmath.sin(K * a) * cmath.exp(-1j * k * a)


def resonance_wavefunction(pair: ResonancePair, member: str, r, t: float = 0.0):
    """Piecewise wavefunction of one pair member at radius r and time t.

    Interior A*sin(K r)/r, exterior C*exp(i k r)/r, time factor
    exp(-i E t / hbar); A = 1 and C from value continuity at r = a.
    """
    E, K, k = _member_data(pair, member)
    well = pair.well
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    a = well.radius
    C = resonance_coefficient_C(pair, member)
    inside = np.sin(K * r_arr) / r_arr
    outside = C * np.exp(1j * k * r_arr) / r_arr
    phase = cmath.exp(-1j * E * t / well.hbar)
    out = np.where(r_arr < a, inside, outside) * phase
    if np.isscalar(r) or r_arr.ndim == 0:
        return complex(out)
    return out


def pt_norm_profile(pair: ResonancePair, r, t_samples) -> list:
    """Mixed-member amplitude conj(psi_+)*psi_- at each sample time.

    Time independent by construction, and proportional to 1/r^2 outside the
    well (|value|*r^2 constant in r).
    """
    t_samples = list(t_samples)
    if len(t_samples) < 2:
        raise DomainError("need at least two time samples")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("r must be positive")
    out = []
    for t in t_samples:
        plus = resonance_wavefunction(pair, "plus", r, t)
        minus = resonance_wavefunction(pair, "minus", r, t)
        out.append(np.conj(plus) * minus)
    return out
