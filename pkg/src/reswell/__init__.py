"""Spectral structure of the finite square well.

Bound states, complex-conjugate resonance pairs, exceptional points with
linearly-growing modes, real-axis scattering observables, the 1D well, and
the finite-dimensional pseudo-Hermiticity toolbox, with a CLI front end.
"""

from .bound import (BoundState, bound_energies, bound_state_count,
                    bound_wavefunction, threshold_hits)
from .core import (LINE1D, RADIAL3D, ComplexEnergy, WellSpec, find_real_root,
                   newton2d, principal_sqrt)
from .errors import (BoundaryLeak, DomainError, FitFailed, NoConvergence,
                     NoInvertibleIntertwiner, NonFinite, NoSignChange,
                     NotExceptional, ReswellError, SingularJacobian,
                     ValidationError)
from .exceptional import (CollapseReport, ThresholdModes, exceptional_potentials,
                          pair_collapse_check, threshold_mode_psi1,
                          threshold_mode_psi2, threshold_modes)
from .ptalgebra import (BREIT_WIGNER, CONJUGATE_PAIRS, DEFORMED_LOWER,
                        EXCEPTIONAL, MIXED, PT_PAIR, REAL_AXIS, REAL_SPECTRUM,
                        V_TWO_LEVEL, FiniteOperator, PropagatorSpec,
                        classify_spectrum, intertwiner_residual, m_of_s,
                        non_eigenstate_solutions_m1, propagator_energy,
                        propagator_energy_pole_sum, propagator_time,
                        pt_commutation_residual, solve_intertwiner,
                        time_advance_profile, two_level_closure,
                        two_level_mode_vectors, two_level_vnorm)
from .pu import (PUSpec, classify_realization, exponent_matrix,
                 pu_hamiltonian_coefficients, pu_rayleigh_and_residual,
                 pu_wavefunction)
from .resonance import (ResonancePair, pt_norm_profile, resonance_pairs,
                        resonance_wavefunction, verify_pole_condition)
from .scattering import (BreitWignerFit, PhaseShiftPoint, breit_wigner_width,
                         find_resonances_real_axis, fit_breit_wigner,
                         phase_shift, phase_shift_sweep, scattering_amplitude,
                         tan_delta_complex, time_delay_profile,
                         wigner_time_delay)
from .well1d import (Well1DResult, inverse_transmission_amplitude,
                     pole_condition_residual_1d, pole_pairs_1d,
                     sweep_transmission, transmission_reflection,
                     transmission_resonances_1d)

__version__ = "0.1.0"
