"""Grid verification of the two-frequency oscillator ground eigenfunction.

The similarity-transformed Hamiltonian

    H' = p_x^2/2 - i q x + (omega1^2 + omega2^2) x^2 / 2
         + omega1^2 omega2^2 y^2 / 2,       q = -i d/dy

has the explicit eigenfunction

    psi(y, x) = exp[-(omega1+omega2) omega1 omega2 y^2 / 2
                    - omega1 omega2 y x - (omega1+omega2) x^2 / 2].

Applying H' on a finite-difference grid and forming the Rayleigh quotient
verifies the eigenfunction directly.  Note: the converged eigenvalue is
(omega1 + omega2)/2, half the value quoted alongside the eigenfunction in
the source derivation; the comparison is reported, not forced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryLeak, DomainError
from .ptalgebra import (CONJUGATE_PAIRS, EXCEPTIONAL, REAL_SPECTRUM,
                        classify_spectrum)

UNEQUAL_REAL = "unequal_real"
EQUAL_REAL = "equal_real"
CONJUGATE_PAIR = "conjugate_pair"

_REALITY_TOL = 1e-12


@dataclass(frozen=True)
class PUSpec:
    """Frequency pair with real, positive symmetric combinations."""

    omega1: complex
    omega2: complex
    realization: str = ""

    def __post_init__(self):
        w1, w2 = complex(self.omega1), complex(self.omega2)
        s, p = w1 + w2, w1 * w2
        scale = max(abs(s), abs(p), 1.0)
        if abs(s.imag) > _REALITY_TOL * scale or abs(p.imag) > _REALITY_TOL * scale:
            raise DomainError("omega1+omega2 and omega1*omega2 must be real")
        if not (s.real > 0 and p.real > 0):
            raise DomainError("omega1+omega2 and omega1*omega2 must be positive")
        object.__setattr__(self, "omega1", w1)
        object.__setattr__(self, "omega2", w2)
        if abs(w1.imag) > _REALITY_TOL * scale:
            inferred = CONJUGATE_PAIR
        elif abs(w1 - w2) <= 1e-12 * scale:
            inferred = EQUAL_REAL
        else:
            inferred = UNEQUAL_REAL
        if self.realization and self.realization != inferred:
            raise DomainError(
                f"realization {self.realization!r} inconsistent with frequencies "
                f"(inferred {inferred!r})")
        object.__setattr__(self, "realization", inferred)

    @property
    def freq_sum(self) -> float:
        return (self.omega1 + self.omega2).real

    @property
    def freq_product(self) -> float:
        return (self.omega1 * self.omega2).real


def pu_wavefunction(spec: PUSpec, y, x):
    """The explicit eigenfunction, evaluated pointwise (psi(0,0) = 1)."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    s, p = spec.freq_sum, spec.freq_product
    exponent = -0.5 * s * p * y**2 - p * y * x - 0.5 * s * x**2
    out = np.exp(exponent)
    if out.ndim == 0:
        return complex(out)
    return out.astype(complex)


def exponent_matrix(spec: PUSpec) -> np.ndarray:
    """Coefficient matrix A with exponent = -(y,x) A (y,x)^T; decay needs A > 0."""
    s, p = spec.freq_sum, spec.freq_product
    return np.array([[0.5 * s * p, 0.5 * p], [0.5 * p, 0.5 * s]])


def pu_rayleigh_and_residual(spec: PUSpec, extent: float = 8.0,
                             points: int = 512) -> tuple[complex, float]:
    """Rayleigh quotient and relative residual of H'psi on an (N x N) grid.

    Central differences for d/dx^2 and d/dy; boundary amplitude above 1e-8
    raises BoundaryLeak (enlarge the extent).
    """
    if points < 256:
        raise DomainError("points must be >= 256 per axis")
    L, N = float(extent), int(points)
    axis = np.linspace(-L, L, N)
    h = axis[1] - axis[0]
    Y, X = np.meshgrid(axis, axis, indexing="ij")
    psi = pu_wavefunction(spec, Y, X)
    edge = max(np.abs(psi[0, :]).max(), np.abs(psi[-1, :]).max(),
               np.abs(psi[:, 0]).max(), np.abs(psi[:, -1]).max())
    if edge > 1e-8:
        raise BoundaryLeak(f"boundary amplitude {edge:.3e} exceeds 1e-8")

    d2x = (psi[1:-1, 2:] - 2.0 * psi[1:-1, 1:-1] + psi[1:-1, :-2]) / h**2
    dy = (psi[2:, 1:-1] - psi[:-2, 1:-1]) / (2.0 * h)
    Yi, Xi = Y[1:-1, 1:-1], X[1:-1, 1:-1]
    psi_i = psi[1:-1, 1:-1]
    w1, w2 = spec.omega1, spec.omega2
    hpsi = (-0.5 * d2x - Xi * dy
            + 0.5 * (w1**2 + w2**2) * Xi**2 * psi_i
            + 0.5 * (w1 * w2) ** 2 * Yi**2 * psi_i)
    norm2 = np.sum(np.conj(psi_i) * psi_i)
    e_est = complex(np.sum(np.conj(psi_i) * hpsi) / norm2)
    residual = float(np.linalg.norm(hpsi - e_est * psi_i) / math.sqrt(norm2.real))
    return e_est, residual


def pu_hamiltonian_coefficients(spec: PUSpec) -> tuple[float, float, float, float]:
    """Real coefficients of the (p_z^2, p_z x, x^2, z^2) terms.

    (1/2, 1, (omega1^2+omega2^2)/2, -(omega1 omega2)^2/2); for the conjugate
    realization omega = a +/- ib these are (1/2, 1, a^2-b^2, -(a^2+b^2)^2/2).
    """
    w1, w2 = spec.omega1, spec.omega2
    cx = 0.5 * (w1**2 + w2**2)
    cz = -0.5 * (w1 * w2) ** 2
    return (0.5, 1.0, float(cx.real), float(cz.real))


def classify_realization(spec: PUSpec) -> str:
    """Realization label from the spectrum of the frequency companion matrix."""
    s, p = spec.freq_sum, spec.freq_product
    companion = np.array([[s, -p], [1.0, 0.0]], dtype=complex)
    label = classify_spectrum(companion, tol=1e-9)
    return {REAL_SPECTRUM: UNEQUAL_REAL,
            EXCEPTIONAL: EQUAL_REAL,
            CONJUGATE_PAIRS: CONJUGATE_PAIR}.get(label, label)
