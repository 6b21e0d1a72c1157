"""Finite-dimensional antilinear-symmetry machinery.

Covers the intertwiner equation V H = H^dagger V (pseudo-Hermiticity),
spectrum classification (real / conjugate pairs / exceptional / mixed), the
one-parameter matrix family M(s), the two-level V-norm algebra of a
conjugate pair, and the Breit-Wigner versus two-pole propagators in energy
and time.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NoInvertibleIntertwiner

REAL_SPECTRUM = "real-spectrum"
CONJUGATE_PAIRS = "conjugate-pairs"
EXCEPTIONAL = "exceptional"
MIXED = "mixed"

_JORDAN_SV_TOL = 1e-8  # singular values of H - lambda*I below tol*|H| count as zero


@dataclass(frozen=True)
class FiniteOperator:
    """A small dense complex matrix with spectrum classification attached."""

    matrix: np.ndarray
    classification: str = field(init=False)
    eigenvalues: np.ndarray = field(init=False)
    right_eigenvectors: np.ndarray = field(init=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError("matrix must be square")
        if not 2 <= m.shape[0] <= 64:
            raise DomainError("matrix dimension must be between 2 and 64")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        vals, vecs = np.linalg.eig(m)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "right_eigenvectors", vecs)
        object.__setattr__(self, "classification", classify_spectrum(m, tol=1e-9))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _as_matrix(H) -> np.ndarray:
    if isinstance(H, FiniteOperator):
        return H.matrix
    return np.asarray(H, dtype=complex)


def _geometric_multiplicity(m: np.ndarray, lam: complex, scale: float) -> int:
    sv = np.linalg.svd(m - lam * np.eye(m.shape[0]), compute_uv=False)
    return int(np.sum(sv < _JORDAN_SV_TOL * max(scale, 1e-300)))


def classify_spectrum(H, tol: float = 1e-9) -> str:
    """Classify the eigenvalue structure of a matrix.

    "exceptional" when some eigenvalue's geometric multiplicity falls short
    of its algebraic one; otherwise "real-spectrum" when all eigenvalues are
    real to tol*scale, "conjugate-pairs" when all are non-real and closed
    under conjugation, "mixed" for a mixture.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    m = _as_matrix(H)
    scale = np.linalg.norm(m)
    vals = np.linalg.eig(m)[0]
    band = tol * max(scale, 1.0)
    # defective eigenvalues split by ~sqrt(eps) numerically, so clustering for
    # the Jordan test uses a wider band than the reality test
    cluster_band = max(tol, 1e-6) * max(scale, 1.0)

    remaining = list(vals)
    clusters = []
    while remaining:
        lam = remaining.pop(0)
        members = [lam] + [v for v in remaining if abs(v - lam) < cluster_band]
        remaining = [v for v in remaining if abs(v - lam) >= cluster_band]
        clusters.append((np.mean(members), len(members)))
    for lam, alg in clusters:
        if alg > _geometric_multiplicity(m, lam, scale):
            return EXCEPTIONAL

    is_real = np.abs(vals.imag) <= band
    if np.all(is_real):
        return REAL_SPECTRUM
    # conjugation closure as a multiset: pair each non-real value with a
    # distinct conjugate partner
    unmatched = list(vals[~is_real])
    while unmatched:
        v = unmatched.pop(0)
        dists = [abs(u - v.conjugate()) for u in unmatched]
        if not dists or min(dists) >= band:
            return MIXED
        unmatched.pop(int(np.argmin(dists)))
    return CONJUGATE_PAIRS if not np.any(is_real) else MIXED


def m_of_s(s: float) -> FiniteOperator:
    """The PT-symmetric family [[1+i, s], [s, 1-i]], s > 0."""
    if not s > 0:
        raise DomainError("s must be positive")
    return FiniteOperator(np.array([[1 + 1j, s], [s, 1 - 1j]], dtype=complex))


def pt_commutation_residual(H) -> float:
    """||P conj(M) P - M|| with P the exchange matrix and T complex conjugation."""
    m = _as_matrix(H)
    P = np.eye(m.shape[0])[::-1]
    return float(np.linalg.norm(P @ m.conj() @ P - m))


def _hermitian_kernel_basis(m: np.ndarray) -> list[np.ndarray]:
    """Orthonormal basis of the Hermitian part of {V : VH = H^dagger V}."""
    n = m.shape[0]
    eye = np.eye(n)
    # column-major vectorization: vec(V H) = (H^T kron I) vec V
    sys = np.kron(m.T, eye) - np.kron(eye, m.conj().T)
    _, sv, vh = np.linalg.svd(sys)
    tol = max(sv[0], 1.0) * 1e-12
    null = [vh[i].conj().reshape((n, n), order="F")
            for i in range(len(sv)) if sv[i] < tol]
    null += [vh[i].conj().reshape((n, n), order="F") for i in range(len(sv), n * n)]
    # the kernel is closed under dagger, so Hermitian parts stay inside it
    herm = []
    for B in null:
        herm.append((B + B.conj().T) / 2.0)
        herm.append((B - B.conj().T) / 2j)
    if not herm:
        return []
    stacked = np.array([h.flatten() for h in herm])
    # re-orthonormalize over the reals (Hermitian matrices form a real space)
    real_stack = np.hstack([stacked.real, stacked.imag])
    _, sv2, vh2 = np.linalg.svd(real_stack, full_matrices=False)
    basis = []
    for i, s in enumerate(sv2):
        if s < 1e-10 * max(sv2[0], 1e-300):
            continue
        flat = vh2[i][: n * n] + 1j * vh2[i][n * n:]
        B = flat.reshape((n, n))
        B = (B + B.conj().T) / 2.0
        if np.linalg.norm(B) > 1e-10:
            basis.append(B / np.linalg.norm(B))
    return basis


def solve_intertwiner(H) -> FiniteOperator:
    """An invertible Hermitian-normalized V with V H = H^dagger V.

    The kernel of the vectorized Sylvester system is searched over real
    combinations of its Hermitian basis for the best-conditioned element
    (largest smallest-singular-value), then scaled to unit spectral norm.
    """
    m = _as_matrix(H)
    if m.shape[0] > 64:
        raise DomainError("dimension must be <= 64")
    basis = _hermitian_kernel_basis(m)
    if not basis:
        raise NoInvertibleIntertwiner("intertwiner kernel is empty")

    rng = np.random.default_rng(20260823)
    candidates = [np.eye(len(basis))[i] for i in range(len(basis))]
    candidates += list(rng.standard_normal((512, len(basis))))
    best, best_smin = None, -1.0
    for c in candidates:
        V = sum(ci * Bi for ci, Bi in zip(c, basis))
        sv = np.linalg.svd(V, compute_uv=False)
        if sv[0] < 1e-14:
            continue
        smin = sv[-1] / sv[0]
        if smin > best_smin:
            best, best_smin = V / sv[0], smin
    if best is None or best_smin < 1e-8:
        raise NoInvertibleIntertwiner(
            f"no invertible kernel element (best inverse condition {best_smin:.3e})")
    return FiniteOperator(best)


def intertwiner_residual(H, V) -> float:
    """||V H - H^dagger V||_F relative to ||H||_F."""
    m, v = _as_matrix(H), _as_matrix(V)
    return float(np.linalg.norm(v @ m - m.conj().T @ v)
                 / max(np.linalg.norm(m), 1e-300))


def two_level_mode_vectors(E0: float, Gamma: float, t: float):
    """(u_plus, u_minus) of the diagonal two-level pair at time t."""
    u_plus = cmath.exp(-1j * E0 * t + Gamma * t) * np.array([1.0, 0.0], dtype=complex)
    u_minus = cmath.exp(-1j * E0 * t - Gamma * t) * np.array([0.0, 1.0], dtype=complex)
    return u_plus, u_minus


V_TWO_LEVEL = np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)  # -i*sigma_2


def two_level_vnorm(E0: float, Gamma: float, t: float) -> np.ndarray:
    """Gram matrix G_ij = u_i^dagger V u_j with V = -i*sigma_2, i,j in (+,-).

    Equals [[0, -1], [1, 0]] independent of t: the conserved inner products
    link only the growing and decaying members.
    """
    if not Gamma > 0:
        raise DomainError("Gamma must be positive")
    u_plus, u_minus = two_level_mode_vectors(E0, Gamma, t)
    us = (u_plus, u_minus)
    return np.array([[us[i].conj() @ V_TWO_LEVEL @ us[j] for j in range(2)]
                     for i in range(2)])


def two_level_closure(E0: float, Gamma: float, t: float) -> np.ndarray:
    """u_+ (u_-^dagger V) - u_- (u_+^dagger V); equals the identity for all t."""
    u_plus, u_minus = two_level_mode_vectors(E0, Gamma, t)
    return (np.outer(u_plus, u_minus.conj() @ V_TWO_LEVEL)
            - np.outer(u_minus, u_plus.conj() @ V_TWO_LEVEL))


BREIT_WIGNER = "breit_wigner"
PT_PAIR = "pt_pair"
REAL_AXIS = "real_axis"
DEFORMED_LOWER = "deformed_lower"


@dataclass(frozen=True)
class PropagatorSpec:
    """Resonance propagator parameters and contour prescription."""

    E0: float
    Gamma: float
    kind: str = BREIT_WIGNER
    contour: str = REAL_AXIS

    def __post_init__(self):
        if not self.Gamma > 0:
            raise DomainError("Gamma must be positive")
        if self.kind not in (BREIT_WIGNER, PT_PAIR):
            raise DomainError(f"unknown kind {self.kind!r}")
        if self.contour not in (REAL_AXIS, DEFORMED_LOWER):
            raise DomainError(f"unknown contour {self.contour!r}")


def propagator_energy(spec: PropagatorSpec, E) -> complex:
    """Energy-domain propagator: 1/(E-E0+i*Gamma) or -2i*Gamma/((E-E0)^2+Gamma^2)."""
    E = np.asarray(E, dtype=float)
    if spec.kind == BREIT_WIGNER:
        out = 1.0 / (E - spec.E0 + 1j * spec.Gamma)
    else:
        out = -2j * spec.Gamma / ((E - spec.E0) ** 2 + spec.Gamma**2)
    out = np.asarray(out, dtype=complex)
    return complex(out) if out.ndim == 0 else out


def propagator_energy_pole_sum(spec: PropagatorSpec, E) -> complex:
    """Two-pole form 1/(E-(E0-iG)) - 1/(E-(E0+iG)); equals the pt_pair closed form."""
    E = np.asarray(E, dtype=float)
    out = (1.0 / (E - (spec.E0 - 1j * spec.Gamma))
           - 1.0 / (E - (spec.E0 + 1j * spec.Gamma)))
    out = np.asarray(out, dtype=complex)
    return complex(out) if out.ndim == 0 else out


def _theta(t):
    return np.where(t > 0, 1.0, np.where(t < 0, 0.0, 0.5))


def propagator_time(spec: PropagatorSpec, t) -> complex:
    """Time-domain propagator (closed forms, theta(0) = 1/2).

    breit_wigner: -i*theta(t)*exp(-i*E0*t - Gamma*t) for either contour;
    pt_pair/deformed_lower: -i*theta(t)*[exp(-i*E0*t-Gamma*t) - exp(-i*E0*t+Gamma*t)];
    pt_pair/real_axis: -i*exp(-i*E0*t - Gamma*|t|) (nonzero for t < 0).
    """
    t = np.asarray(t, dtype=float)
    phase = np.exp(-1j * spec.E0 * t)
    if spec.kind == BREIT_WIGNER:
        out = -1j * _theta(t) * phase * np.exp(-spec.Gamma * np.where(t > 0, t, 0.0))
        out = np.where(t < 0, 0.0, out)
    elif spec.contour == DEFORMED_LOWER:
        out = -1j * _theta(t) * phase * (np.exp(-spec.Gamma * t) - np.exp(spec.Gamma * t))
        out = np.where(t < 0, 0.0, out)
    else:
        out = -1j * phase * np.exp(-spec.Gamma * np.abs(t))
    return complex(out) if out.ndim == 0 else out


def time_advance_profile(E0: float, Gamma: float, E, hbar: float = 1.0):
    """Lorentzian time advance -hbar*Gamma/((E-E0)^2+Gamma^2); -hbar/Gamma at E0.

    The exact negative of the resonance time-delay profile.
    """
    E = np.asarray(E, dtype=float)
    out = -hbar * Gamma / ((E - E0) ** 2 + Gamma**2)
    return float(out) if out.ndim == 0 else out


def non_eigenstate_solutions_m1(t):
    """The t-linear solutions ((1+t)e^{-it}, -i t e^{-it}) of i d/dt psi = M(1) psi."""
    t = np.asarray(t, dtype=float)
    phase = np.exp(-1j * t)
    return np.stack([(1.0 + t) * phase, -1j * t * phase])
