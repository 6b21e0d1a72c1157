"""Shared numeric substrate: units, branch conventions, root finding.

Everything downstream (bound states, resonance pairs, scattering, the 1D
well) is phrased in terms of a `WellSpec` carrying physical parameters and a
`ComplexEnergy` carrying branch-consistent interior/exterior wavenumbers.
Default construction uses natural units hbar = 1, 2m = 1, a = 1, in which the
dimensionless scale gamma = a*sqrt(2m)/hbar equals 1 and E = K^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoConvergence, NonFinite, NoSignChange, SingularJacobian

RADIAL3D = "radial3d"
LINE1D = "line1d"

_GEOMETRIES = (RADIAL3D, LINE1D)


@dataclass(frozen=True)
class WellSpec:
    """Physical parameters of a finite-depth square well.

    The potential is zero inside (r < a or |x| < a/2) and ``depth`` outside.

    Parameters
    ----------
    depth : float
        Well depth V0 > 0 (exterior potential level).
    radius : float
        Well radius a > 0 (full width for the 1D geometry).
    mass : float
        Particle mass m > 0.
    hbar : float
        Reduced Planck constant > 0.
    geometry : str
        Either "radial3d" (s-wave radial problem) or "line1d".
    """

    depth: float
    radius: float = 1.0
    mass: float = 0.5
    hbar: float = 1.0
    geometry: str = RADIAL3D

    def __post_init__(self):
        for name in ("depth", "radius", "mass", "hbar"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if self.geometry not in _GEOMETRIES:
            raise ValueError(f"geometry must be one of {_GEOMETRIES}")

    @classmethod
    def natural(cls, depth: float, geometry: str = RADIAL3D) -> "WellSpec":
        """Well in natural units hbar = 1, 2m = 1, a = 1 (so gamma = 1)."""
        return cls(depth=depth, radius=1.0, mass=0.5, hbar=1.0, geometry=geometry)

    @property
    def gamma(self) -> float:
        """Dimensionless scale a*sqrt(2m)/hbar."""
        return self.radius * math.sqrt(2.0 * self.mass) / self.hbar

    @property
    def energy_scale(self) -> float:
        """hbar^2 / (2 m a^2), the natural energy unit of the well."""
        return self.hbar**2 / (2.0 * self.mass * self.radius**2)

    def interior_K(self, E: complex) -> complex:
        """Interior wavenumber sqrt(2mE)/hbar on the principal branch."""
        return principal_sqrt(2.0 * self.mass * E) / self.hbar

    def exterior_k(self, E: complex) -> complex:
        """Exterior wavenumber sqrt(2m(E - V0))/hbar, principal branch."""
        return principal_sqrt(2.0 * self.mass * (E - self.depth)) / self.hbar


def principal_sqrt(z: complex) -> complex:
    """Principal square root with Re >= 0; if Re = 0, Im >= 0."""
    w = np.sqrt(complex(z))
    if w.real < 0.0 or (w.real == 0.0 and w.imag < 0.0):
        w = -w
    return complex(w)


@dataclass(frozen=True)
class ComplexEnergy:
    """A complex energy with branch-consistent interior/exterior momenta.

    branch_K satisfies (hbar*K)^2 / 2m = E and branch_k satisfies
    (hbar*k)^2 / 2m = E - V0, both on the principal branch Re >= 0; with that
    convention sign(Im k) = sign(Im E) whenever Im E != 0, so the lower-half
    member of a conjugate pair carries a spatially growing exterior wave.
    """

    value: complex
    branch_K: complex = field(init=False)
    branch_k: complex = field(init=False)
    well: WellSpec = WellSpec.natural(1.0)

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "branch_K", self.well.interior_K(self.value))
        object.__setattr__(self, "branch_k", self.well.exterior_k(self.value))

    @classmethod
    def at(cls, well: WellSpec, E: complex) -> "ComplexEnergy":
        return cls(value=E, well=well)


def find_real_root(f, bracket, tol: float = 1e-12) -> float:
    """Bracketed root of a continuous scalar function (Brent's method).

    Raises NoSignChange if f(lo) and f(hi) have the same sign, NonFinite if f
    evaluates to NaN/inf inside the bracket.  The returned abscissa is within
    a bracket of width <= tol.
    """
    from scipy.optimize import brentq

    lo, hi = float(bracket[0]), float(bracket[1])
    if not tol > 0:
        raise ValueError("tol must be positive")

    def g(x):
        y = f(x)
        if not np.isfinite(y):
            raise NonFinite(f"f({x!r}) evaluated to {y!r}")
        return y

    flo, fhi = g(lo), g(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise NoSignChange(f"f({lo}) = {flo} and f({hi}) = {fhi} have equal sign")
    return float(brentq(g, lo, hi, xtol=tol, rtol=4.0 * np.finfo(float).eps))


def _fd_jacobian(F, x):
    """Central finite-difference Jacobian with step max(1e-7, 1e-7*|x_i|)."""
    J = np.empty((2, 2))
    for j in range(2):
        h = max(1e-7, 1e-7 * abs(x[j]))
        xp = x.copy()
        xm = x.copy()
        xp[j] += h
        xm[j] -= h
        fp = np.asarray(F(xp[0], xp[1]), dtype=float)
        fm = np.asarray(F(xm[0], xm[1]), dtype=float)
        J[:, j] = (fp - fm) / (2.0 * h)
    return J


def newton2d(F, seed, tol: float = 1e-12, max_iter: int = 100):
    """Damped Newton iteration for a 2D real system F(x, y) = (0, 0).

    The Jacobian is taken by central finite differences; a step is halved up
    to 20 times whenever it fails to decrease the residual infinity norm.

    Raises NoConvergence after max_iter iterations (or when no damped step
    improves the residual) and SingularJacobian when the finite-difference
    Jacobian has condition estimate above 1e12.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    x = np.array(seed, dtype=float)
    fx = np.asarray(F(x[0], x[1]), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise NonFinite(f"F{tuple(x)} evaluated non-finite")
    for _ in range(max_iter):
        res = np.max(np.abs(fx))
        if res <= tol:
            return float(x[0]), float(x[1])
        J = _fd_jacobian(F, x)
        if not np.all(np.isfinite(J)) or np.linalg.cond(J) > 1e12:
            raise SingularJacobian(f"Jacobian near-singular at {tuple(x)}")
        step = np.linalg.solve(J, fx)
        lam = 1.0
        for _ in range(21):
            xn = x - lam * step
            fn = np.asarray(F(xn[0], xn[1]), dtype=float)
            if np.all(np.isfinite(fn)) and np.max(np.abs(fn)) < res:
                break
            lam *= 0.5
        else:
            raise NoConvergence(f"no damped step improved residual {res} at {tuple(x)}")
        x, fx = xn, fn
    if np.max(np.abs(fx)) <= tol:
        return float(x[0]), float(x[1])
    raise NoConvergence(f"residual {np.max(np.abs(fx))} > tol after {max_iter} iterations")
