"""Figure rendering for the CLI report path (Agg backend, PNG files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _save(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bound_levels(states, well, path: str) -> str:
    """Energy-level diagram of the bound spectrum inside the well."""
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.axhline(well.depth, color="k", lw=1.2, label="V0")
    for st in states:
        ax.hlines(st.energy, 0.1, 0.9, color="C0")
        ax.annotate(f"n={st.branch_index}", (0.92, st.energy), fontsize=8,
                    va="center")
    ax.set_xlim(0, 1.1)
    ax.set_xticks([])
    ax.set_ylabel("E")
    ax.set_title("bound levels")
    ax.legend(loc="lower right")
    return _save(fig, path)


def plot_resonance_map(pairs, path: str) -> str:
    """Pole pairs in the complex energy plane."""
    fig, ax = plt.subplots(figsize=(5, 4))
    for p in pairs:
        ax.plot([p.E0, p.E0], [p.Gamma, -p.Gamma], "C3o", ms=5)
        ax.annotate(f"n={p.branch_index}", (p.E0, p.Gamma), fontsize=8,
                    textcoords="offset points", xytext=(4, 4))
    ax.axhline(0.0, color="k", lw=0.8)
    ax.set_xlabel("Re E")
    ax.set_ylabel("Im E")
    ax.set_title("conjugate pole pairs")
    return _save(fig, path)


def plot_phase_shift(energies, deltas, delays, path: str) -> str:
    """Unwrapped phase shift and Wigner delay along an energy sweep."""
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 5), sharex=True)
    ax1.plot(energies, deltas, "C0")
    ax1.set_ylabel("delta (rad)")
    ax2.plot(energies, delays, "C1")
    ax2.set_ylabel("time delay")
    ax2.set_xlabel("E")
    ax1.set_title("phase shift sweep")
    return _save(fig, path)


def plot_transmission(energies, T, R, path: str) -> str:
    """Transmission/reflection coefficients of the 1D well."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(energies, T, "C0", label="T")
    ax.plot(energies, R, "C1", label="R")
    ax.set_xlabel("E")
    ax.set_ylabel("coefficient")
    ax.set_ylim(-0.05, 1.05)
    ax.legend()
    ax.set_title("1D transmission and reflection")
    return _save(fig, path)


def plot_propagator(x, values, domain: str, path: str) -> str:
    """Real/imaginary parts of a propagator over energy or time."""
    values = np.asarray(values)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(x, values.real, "C0", label="Re D")
    ax.plot(x, values.imag, "C1", label="Im D")
    ax.set_xlabel(domain)
    ax.set_ylabel("D")
    ax.legend()
    ax.set_title(f"propagator ({domain} domain)")
    return _save(fig, path)
