"""Command-line front end with deterministic JSON/CSV output.

Subcommands: bound, resonances, exceptional, scatter, well1d, ptmatrix, pu,
propagator, verify-all.  JSON output is one object {"meta": ..., "data": ...}
with sorted keys; CSV is comma-separated with a header row, LF line endings,
and floats in %.12e.  Exit codes: 0 success, 2 validation error, 3 solver
non-convergence.  --plot renders PNG figures next to the delimited output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bound import bound_energies
from .core import LINE1D, WellSpec
from .errors import (DomainError, NoConvergence, NotExceptional, ReswellError,
                     SingularJacobian, ValidationError)
from .exceptional import exceptional_potentials
from .ptalgebra import (PropagatorSpec, intertwiner_residual, m_of_s,
                        propagator_energy, propagator_time,
                        pt_commutation_residual, solve_intertwiner)
from .pu import (PUSpec, pu_hamiltonian_coefficients, pu_rayleigh_and_residual)
from .resonance import resonance_pairs, verify_pole_condition
from .scattering import phase_shift_sweep
from .well1d import pole_pairs_1d, sweep_transmission, transmission_resonances_1d


def _fnum(x: float) -> float:
    """Round to the printed %.12e precision so JSON round-trips exactly."""
    return float(f"{float(x):.12e}")


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _fnum(obj.real), "im": _fnum(obj.imag)}
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _fnum(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonify(v) for v in obj.tolist()]
    return obj


def _render_json(meta: dict, data) -> str:
    doc = {"meta": _jsonify(meta), "data": _jsonify(data)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _render_csv(columns: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([f"{v:.12e}" if isinstance(v, (float, np.floating))
                         else v for v in row])
    return buf.getvalue()


def _write(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _plot_path(args, suffix: str = "") -> str:
    base = Path(args.out).with_suffix("") if args.out else Path(f"reswell_{args.command}")
    return str(base) + (f"_{suffix}" if suffix else "") + ".png"


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValidationError(
            "missing required option(s): --" + ", --".join(missing))


def _make_well(args, geometry: str) -> WellSpec:
    _require(args, "v0")
    if args.units == "si":
        missing = [n for n in ("hbar", "mass", "radius")
                   if getattr(args, n) is None]
        if missing:
            raise ValidationError(f"--units si requires explicit --{', --'.join(missing)}")
        return WellSpec(depth=args.v0, radius=args.radius, mass=args.mass,
                        hbar=args.hbar, geometry=geometry)
    return WellSpec(depth=args.v0,
                    radius=args.radius if args.radius is not None else 1.0,
                    mass=args.mass if args.mass is not None else 0.5,
                    hbar=args.hbar if args.hbar is not None else 1.0,
                    geometry=geometry)


def _meta(args, **extra) -> dict:
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "config") and v is not None}
    params.pop("out", None)
    meta = {"version": __version__, "command": args.command, "params": params}
    meta.update(extra)
    return meta


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ValidationError(f"cannot parse complex number {text!r}") from exc


# ----------------------------------------------------------------- commands

def cmd_bound(args) -> int:
    well = _make_well(args, "radial3d")
    states = bound_energies(well)
    rows = [[st.branch_index, st.energy, st.K, st.sigma, st.A, st.B]
            for st in states]
    if args.format == "csv":
        _write(args, _render_csv(["branch", "E", "K", "sigma", "A", "B"], rows))
    else:
        data = [{"branch": st.branch_index, "E": st.energy, "K": st.K,
                 "sigma": st.sigma, "A": st.A, "B": st.B} for st in states]
        _write(args, _render_json(_meta(args, count=len(states)), data))
    if args.plot:
        from .plotting import plot_bound_levels
        plot_bound_levels(states, well, _plot_path(args))
    return 0


def cmd_resonances(args) -> int:
    well = _make_well(args, "radial3d")
    pairs, skipped = resonance_pairs(well, args.nmax, return_skipped=True)
    rows = []
    for p in pairs:
        rows.append([p.branch_index, p.mu, p.nu, p.E0, p.Gamma,
                     p.K_plus.real, p.K_plus.imag, p.k_plus.real, p.k_plus.imag,
                     p.residual, verify_pole_condition(well, p.E_plus)])
    cols = ["branch", "mu", "nu", "E0", "Gamma", "K1", "K2", "k1", "k2",
            "residual", "pole_residual"]
    if args.format == "csv":
        _write(args, _render_csv(cols, rows))
    else:
        data = [dict(zip(cols, row)) for row in rows]
        meta = _meta(args, skipped=[{"branch": n, "reason": r} for n, r in skipped])
        _write(args, _render_json(meta, data))
    if args.plot:
        from .plotting import plot_resonance_map
        plot_resonance_map(pairs, _plot_path(args))
    return 0


def cmd_exceptional(args) -> int:
    _require(args, "n")
    template = _make_well_template(args)
    values = exceptional_potentials(template, args.n)
    if args.format == "csv":
        _write(args, _render_csv(["n", "V0"], [[i, v] for i, v in enumerate(values)]))
    else:
        _write(args, _render_json(_meta(args), values))
    return 0


def _make_well_template(args) -> WellSpec:
    # the depth is the output here; a placeholder depth carries the geometry scale
    ns = argparse.Namespace(**vars(args))
    ns.v0 = 1.0
    return _make_well(ns, "radial3d")


def cmd_scatter(args) -> int:
    _require(args, "emin", "emax")
    well = _make_well(args, "radial3d")
    if not args.emin > well.depth:
        raise ValidationError(f"--emin must exceed V0 = {well.depth}")
    if not args.emax > args.emin:
        raise ValidationError("--emax must exceed --emin")
    if args.n < 2:
        raise ValidationError("--n must be >= 2")
    energies = np.linspace(args.emin, args.emax, args.n)
    points = phase_shift_sweep(well, energies)
    deltas = np.array([p.delta for p in points])
    fs = np.exp(1j * deltas) * np.sin(deltas)
    delays = well.hbar * np.gradient(deltas, energies)
    rows = [[E, d, f.real, f.imag, dt]
            for E, d, f, dt in zip(energies, deltas, fs, delays)]
    cols = ["E", "delta", "re_f", "im_f", "time_delay"]
    if args.format == "csv":
        _write(args, _render_csv(cols, rows))
    else:
        data = [dict(zip(cols, r)) for r in rows]
        _write(args, _render_json(_meta(args), data))
    if args.plot:
        from .plotting import plot_phase_shift
        plot_phase_shift(energies, deltas, delays, _plot_path(args))
    return 0


def cmd_well1d(args) -> int:
    well = _make_well(args, LINE1D)
    if args.poles:
        pairs, skipped = pole_pairs_1d(well, args.poles, return_skipped=True)
        cols = ["branch", "mu", "nu", "E0", "Gamma", "residual"]
        rows = [[p.branch_index, p.mu, p.nu, p.E0, p.Gamma, p.residual]
                for p in pairs]
        if args.format == "csv":
            _write(args, _render_csv(cols, rows))
        else:
            meta = _meta(args, skipped=[{"branch": n, "reason": r} for n, r in skipped])
            _write(args, _render_json(meta, [dict(zip(cols, r)) for r in rows]))
        return 0
    if args.trans_resonances:
        values = transmission_resonances_1d(well, args.trans_resonances)
        if args.format == "csv":
            _write(args, _render_csv(["index", "E"],
                                     [[i + 1, v] for i, v in enumerate(values)]))
        else:
            _write(args, _render_json(_meta(args), values))
        return 0
    if args.emin is None or args.emax is None:
        raise ValidationError("sweep mode requires --emin and --emax")
    if not args.emin > well.depth:
        raise ValidationError(f"--emin must exceed V0 = {well.depth}")
    if not args.emax > args.emin:
        raise ValidationError("--emax must exceed --emin")
    energies = np.linspace(args.emin, args.emax, args.n)
    results = sweep_transmission(well, energies)
    cols = ["E", "T", "R", "X2"]
    rows = [[r.E, r.T, r.R, r.X2] for r in results]
    if args.format == "csv":
        _write(args, _render_csv(cols, rows))
    else:
        _write(args, _render_json(_meta(args), [dict(zip(cols, r)) for r in rows]))
    if args.plot:
        from .plotting import plot_transmission
        plot_transmission(energies, [r.T for r in results],
                          [r.R for r in results], _plot_path(args))
    return 0


def cmd_ptmatrix(args) -> int:
    _require(args, "s")
    op = m_of_s(args.s)
    V = solve_intertwiner(op)
    data = {
        "s": args.s,
        "matrix": [[op.matrix[i, j] for j in range(2)] for i in range(2)],
        "eigenvalues": list(op.eigenvalues),
        "classification": op.classification,
        "pt_commutation_residual": pt_commutation_residual(op),
        "intertwiner": [[V.matrix[i, j] for j in range(2)] for i in range(2)],
        "intertwiner_residual": intertwiner_residual(op, V),
    }
    if args.format == "csv":
        rows = [[f"eig{i}", v.real, v.imag] for i, v in enumerate(op.eigenvalues)]
        rows += [[f"V{i}{j}", V.matrix[i, j].real, V.matrix[i, j].imag]
                 for i in range(2) for j in range(2)]
        _write(args, _render_csv(["name", "re", "im"], rows))
    else:
        _write(args, _render_json(_meta(args), data))
    return 0


def cmd_pu(args) -> int:
    _require(args, "omega1", "omega2")
    spec = PUSpec(omega1=_parse_complex(args.omega1),
                  omega2=_parse_complex(args.omega2))
    e_est, residual = pu_rayleigh_and_residual(spec, extent=args.extent,
                                               points=args.points)
    coeffs = pu_hamiltonian_coefficients(spec)
    freq_sum = spec.freq_sum
    data = {
        "realization": spec.realization,
        "E_est": e_est,
        "residual": residual,
        "coefficients": {"pz2": coeffs[0], "pz_x": coeffs[1],
                         "x2": coeffs[2], "z2": coeffs[3]},
        "freq_sum": freq_sum,
        "E_est_over_freq_sum": e_est.real / freq_sum,
        "note": ("grid eigenvalue E_est converges to (omega1+omega2)/2, "
                 "HALF the omega1+omega2 value quoted with the eigenfunction; "
                 "reported, not forced"),
    }
    if args.format == "csv":
        rows = [["E_est_re", e_est.real], ["E_est_im", e_est.imag],
                ["residual", residual], ["freq_sum", freq_sum],
                ["coeff_pz2", coeffs[0]], ["coeff_pz_x", coeffs[1]],
                ["coeff_x2", coeffs[2]], ["coeff_z2", coeffs[3]]]
        _write(args, _render_csv(["name", "value"], rows))
    else:
        _write(args, _render_json(_meta(args), data))
    return 0


def cmd_propagator(args) -> int:
    _require(args, "e0", "gamma", "lo", "hi")
    spec = PropagatorSpec(E0=args.e0, Gamma=args.gamma, kind=args.kind,
                          contour=args.contour)
    if not args.hi > args.lo:
        raise ValidationError("--hi must exceed --lo")
    grid = np.linspace(args.lo, args.hi, args.n)
    if args.domain == "energy":
        values = [propagator_energy(spec, x) for x in grid]
        cols = ["E", "re_d", "im_d"]
    else:
        values = [propagator_time(spec, x) for x in grid]
        cols = ["t", "re_d", "im_d"]
    rows = [[x, v.real, v.imag] for x, v in zip(grid, values)]
    if args.format == "csv":
        _write(args, _render_csv(cols, rows))
    else:
        _write(args, _render_json(_meta(args), [dict(zip(cols, r)) for r in rows]))
    if args.plot:
        from .plotting import plot_propagator
        plot_propagator(grid, values, args.domain, _plot_path(args))
    return 0


def cmd_verify_all(args) -> int:
    from .verify import run_all
    results = run_all()
    width = max(len(name) for name, _ in results)
    lines = []
    for name, ok in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}")
    n_fail = sum(1 for _, ok in results if not ok)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    _write(args, "\n".join(lines) + "\n")
    return 0 if n_fail == 0 else 1


# ------------------------------------------------------------------- parser

def _add_common(p, plot: bool = False):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--config", default=None,
                   help="JSON file of option defaults (flags override)")
    if plot:
        p.add_argument("--plot", action="store_true",
                       help="render a PNG figure next to the output")


def _add_well(p):
    p.add_argument("--v0", type=float, default=None, help="well depth V0 > 0")
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--mass", type=float, default=None)
    p.add_argument("--hbar", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reswell",
        description="Spectral structure of the finite square well")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="bound-state energies and coefficients")
    _add_well(p)
    _add_common(p, plot=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("resonances", help="complex-conjugate resonance pairs")
    _add_well(p)
    p.add_argument("--nmax", type=int, default=3)
    _add_common(p, plot=True)
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("exceptional", help="exceptional well depths (closed form)")
    p.add_argument("--n", type=int, default=None, help="number of values")
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--mass", type=float, default=None)
    p.add_argument("--hbar", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("scatter", help="phase shift / amplitude / delay sweep")
    _add_well(p)
    p.add_argument("--emin", type=float, default=None)
    p.add_argument("--emax", type=float, default=None)
    p.add_argument("--n", type=int, default=1000)
    _add_common(p, plot=True)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("well1d", help="1D transmission, resonances, pole pairs")
    _add_well(p)
    p.add_argument("--emin", type=float, default=None)
    p.add_argument("--emax", type=float, default=None)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--poles", type=int, default=0,
                   help="emit the first N pole pairs instead of a sweep")
    p.add_argument("--trans-resonances", type=int, default=0,
                   help="emit the first N transmission resonances instead")
    _add_common(p, plot=True)
    p.set_defaults(func=cmd_well1d)

    p = sub.add_parser("ptmatrix", help="M(s) spectrum and intertwiner")
    p.add_argument("--s", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_ptmatrix)

    p = sub.add_parser("pu", help="two-frequency oscillator grid verification")
    p.add_argument("--omega1", default=None, help="complex, e.g. 1 or 1+0.5j")
    p.add_argument("--omega2", default=None)
    p.add_argument("--extent", type=float, default=8.0)
    p.add_argument("--points", type=int, default=512)
    _add_common(p)
    p.set_defaults(func=cmd_pu)

    p = sub.add_parser("propagator", help="resonance propagators in E or t")
    p.add_argument("--kind", choices=("breit_wigner", "pt_pair"),
                   default="breit_wigner")
    p.add_argument("--contour", choices=("real_axis", "deformed_lower"),
                   default="real_axis")
    p.add_argument("--e0", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--domain", choices=("energy", "time"), default="energy")
    p.add_argument("--lo", type=float, default=None)
    p.add_argument("--hi", type=float, default=None)
    p.add_argument("--n", type=int, default=1000)
    _add_common(p, plot=True)
    p.set_defaults(func=cmd_propagator)

    p = sub.add_parser("verify-all", help="run the invariant suite")
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def _apply_config(parser, argv):
    """Load --config JSON as option defaults; explicit flags override.

    The config is merged after parsing (subparsers reset namespace values in
    argparse, so parse-time seeding is unreliable): a config key fills its
    option only when the corresponding flag is absent from the command line.
    """
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    try:
        cfg = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ValidationError("config must be a JSON object")
    for key, value in cfg.items():
        dest = key.replace("-", "_")
        flag = "--" + key.replace("_", "-")
        if flag in argv or not hasattr(args, dest):
            continue
        setattr(args, dest, value)
    return args


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except (ValidationError, DomainError, NotExceptional, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoConvergence, SingularJacobian) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    except ReswellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
