"""Command-line surface: spectrum tables, wavefunction sampling, NU branch
inspection, verification reports, and parameter sweeps.

Output is deterministic: floats go through :func:`fmt` (12 significant
digits), CSV carries a ``# schema=1`` header, JSON keeps full precision.
Exit codes: 0 success, 1 failed verification, 2 parameter/usage error,
3 requested level is not bound.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys

import numpy as np

from . import coulomb_mixed, nu, oracle, scalar_linear, verify, wavefunctions
from .errors import KGBoundError, NoAdmissibleBranch, NotBound
from .levels import ANTIPARTICLE, BOUND, PARTICLE
from .units import NATURAL, PhysicalConstants

SCHEMA = 1

_MIXED_SWEEP_KEYS = ("q", "b", "beta", "V0")
_SCALAR_SWEEP_KEYS = ("s", "length_scale")


def fmt(x: float) -> str:
    """Deterministic float formatting: 12 significant digits, scientific
    notation below 1e-3 in magnitude."""
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    if x == 0:
        return "0"
    if abs(x) < 1e-3:
        return f"{x:.11e}"
    return f"{x:.12g}"


# ---------------------------------------------------------------------------
# configuration plumbing


def _read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise KGBoundError(f"config line not key=value: {line!r}")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
    return values


def _apply_config(parser: argparse.ArgumentParser, path: str) -> None:
    """Install config-file values as parser defaults (flags still win)."""
    actions = {a.dest: a for a in parser._actions}
    defaults = {}
    for key, raw in _read_config(path).items():
        action = actions.get(key)
        if action is None or key in ("help", "config"):
            raise KGBoundError(f"unknown config key {key!r}")
        defaults[key] = action.type(raw) if action.type else raw
    parser.set_defaults(**defaults)


def _constants(args) -> PhysicalConstants:
    if args.hbar_c == 1.0 and args.rest_energy == 1.0:
        return NATURAL
    return PhysicalConstants(hbar_c=args.hbar_c, rest_energy=args.rest_energy)


def _mixed_params(args) -> coulomb_mixed.MixedCoulombParams:
    if args.q is None:
        raise KGBoundError("--q is required for the mixed model")
    return coulomb_mixed.MixedCoulombParams(
        q=args.q, b=args.b, beta=args.beta, V0=args.V0, constants=_constants(args)
    )


def _scalar_params(args) -> scalar_linear.LinearMassParams:
    if args.s is None:
        raise KGBoundError("--s is required for the scalar-linear model")
    return scalar_linear.LinearMassParams(
        s=args.s, length_scale=args.length_scale, constants=_constants(args)
    )


def _energy_unit(args) -> float:
    return _constants(args).rest_energy if args.units == "mc2" else 1.0


# ---------------------------------------------------------------------------
# table emission


def _emit(args, meta: dict, columns: list[str], rows: list[dict]) -> None:
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, **meta, "rows": rows}, indent=2))
        return
    print(f"# schema={SCHEMA}")
    for key, val in meta.items():
        if isinstance(val, dict):
            pairs = " ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in val.items())
            print(f"# {key}: {pairs}")
        else:
            print(f"# {key}={val}")
    print(",".join(columns))
    for row in rows:
        print(",".join(fmt(row[c]) if isinstance(row[c], float) else str(row[c]) for c in columns))


def _param_meta(params) -> dict:
    d = dataclasses.asdict(params)
    d.pop("constants", None)
    return d


def _spectrum_rows(args, model: str, params, unit: float) -> tuple[list[str], list[dict]]:
    if model == "mixed":
        columns = ["n", "l", "branch", "energy", "status", "residual"]
        rows = [
            {
                "n": lv.n,
                "l": lv.l,
                "branch": lv.branch,
                "energy": lv.energy / unit,
                "status": lv.status,
                "residual": lv.residual / unit,
            }
            for lv in coulomb_mixed.spectrum(params, args.n_max, args.l_max)
        ]
        return columns, rows
    columns = ["n", "l", "branch", "energy", "energy_squared", "status"]
    rows = []
    for lv in scalar_linear.spectrum(params, args.n_max, args.l_max, args.mode):
        e2 = scalar_linear.energy_squared(params, lv.n, lv.l, args.mode)
        rows.append(
            {
                "n": lv.n,
                "l": lv.l,
                "branch": lv.branch,
                "energy": lv.energy / unit,
                "energy_squared": e2 / unit**2,
                "status": lv.status,
            }
        )
    return columns, rows


# ---------------------------------------------------------------------------
# subcommands


def cmd_spectrum(args) -> int:
    params = _mixed_params(args) if args.model == "mixed" else _scalar_params(args)
    unit = _energy_unit(args)
    columns, rows = _spectrum_rows(args, args.model, params, unit)
    meta = {"command": "spectrum", "model": args.model, "units": args.units,
            "params": _param_meta(params)}
    if args.model == "scalar-linear":
        meta["mode"] = args.mode
    _emit(args, meta, columns, rows)
    return 0


def cmd_wavefunction(args) -> int:
    unit = _energy_unit(args)
    if args.model == "mixed":
        params = _mixed_params(args)
        e_plus, e_minus = coulomb_mixed.candidate_energies(params, args.n, args.l)
        energy = e_plus if args.branch == PARTICLE else e_minus
        level = coulomb_mixed.validate(params, args.n, args.l, energy, args.branch)
        if level.status != BOUND:
            print(
                f"level n={args.n} l={args.l} branch={args.branch} is "
                f"{level.status}, not bound",
                file=sys.stderr,
            )
            return 3
        wf = wavefunctions.build_mixed(params, level)
    else:
        params = _scalar_params(args)
        e2 = scalar_linear.energy_squared(params, args.n, args.l, args.mode)
        if e2 < 0:
            print(f"level n={args.n} l={args.l} has negative squared energy",
                  file=sys.stderr)
            return 3
        energy = math.sqrt(e2) if args.branch == PARTICLE else -math.sqrt(e2)
        wf = wavefunctions.build_scalar(params, args.n, args.l, energy)
    # quadrature is the authoritative normalization for emitted samples
    wf = dataclasses.replace(wf, norm=1.0)
    wf = dataclasses.replace(wf, norm=wavefunctions.norm_quadrature(wf))
    meta = {
        "command": "wavefunction", "model": args.model, "units": args.units,
        "params": _param_meta(params),
        "level": {"n": args.n, "l": args.l, "branch": args.branch,
                  "energy": energy / unit},
    }
    rows = []
    if args.samples > 0:
        grid = np.geomspace(args.r_min, args.r_max, args.samples)
        u = wf.evaluate(grid)
        rows = [{"r": float(r), "u": float(v)} for r, v in zip(grid, u)]
    _emit(args, meta, ["r", "u"], rows)
    return 0


def cmd_verify(args) -> int:
    checks = verify.run_verify(args.model, args.mode)
    if args.output == "json":
        payload = {
            "schema": SCHEMA,
            "command": "verify",
            "model": args.model,
            "mode": args.mode,
            "checks": [
                {
                    "name": c.name,
                    "comparison": c.comparison,
                    "tolerance": c.tolerance,
                    "observed": c.observed,
                    "status": "pass" if c.passed else "FAIL",
                }
                for c in checks
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"# schema={SCHEMA}")
        print(f"# command=verify model={args.model} mode={args.mode}")
        print("check,comparison,tolerance,observed,status")
        for c in checks:
            status = "pass" if c.passed else "FAIL"
            print(f"{c.name},{c.comparison},{fmt(c.tolerance)},{fmt(c.observed)},{status}")
    return 0 if all(c.passed for c in checks) else 1


def _branch_dict(branch: nu.NUBranch) -> dict:
    return {
        "k": branch.k,
        "pi": [branch.pi.c0, branch.pi.c1],
        "tau": [branch.tau.c0, branch.tau.c1],
        "tau_prime": branch.tau_prime,
        "sign_choice": branch.sign_choice,
    }


def cmd_nu_solve(args) -> int:
    if args.model == "mixed":
        params = _mixed_params(args)
        if args.energy is None:
            raise KGBoundError("--energy is required for the mixed model")
        energy = args.energy
        problem = coulomb_mixed.nu_problem(params, args.l, energy)
    else:
        params = _scalar_params(args)
        energy = args.energy
        if energy is None:
            energy = math.sqrt(scalar_linear.energy_squared(params, 0, args.l))
        problem = scalar_linear.nu_problem(params, args.l, energy)
    report = {
        "schema": SCHEMA,
        "command": "nu-solve",
        "model": args.model,
        "energy": energy,
        "problem": {
            "tau_tilde": [problem.tau_tilde.c0, problem.tau_tilde.c1],
            "sigma": [problem.sigma.c0, problem.sigma.c1, problem.sigma.c2],
            "sigma_tilde": [
                problem.sigma_tilde.c0,
                problem.sigma_tilde.c1,
                problem.sigma_tilde.c2,
            ],
        },
        "k_roots": nu.solve_k(problem),
        "branches": [_branch_dict(b) for b in nu.branches(problem)],
    }
    try:
        selected = nu.select(nu.branches(problem), problem)
    except NoAdmissibleBranch as exc:
        report["selected"] = None
        report["error"] = str(exc)
    else:
        report["selected"] = _branch_dict(selected)
        lam, lam_n = nu.quantize(selected, problem, args.n)
        report["quantization"] = {"n": args.n, "lambda": lam, "lambda_n": lam_n}
        if selected.tau_prime == 0:
            report["note"] = "no bound state: branch is marginal (tau' = 0)"
    print(json.dumps(report, indent=2))
    return 0


def cmd_sweep(args) -> int:
    keys = _MIXED_SWEEP_KEYS if args.model == "mixed" else _SCALAR_SWEEP_KEYS
    if args.key not in keys:
        raise KGBoundError(
            f"unknown sweep key {args.key!r} for model {args.model}"
            f" (choose from {', '.join(keys)})"
        )
    values = [float(v) for v in args.values.split(",") if v.strip()]
    unit = _energy_unit(args)
    if args.model == "mixed" and args.q is None and args.key == "q":
        args.q = 0.0  # placeholder, replaced per sweep value
    if args.model == "scalar-linear" and args.s is None and args.key == "s":
        args.s = 0.0
    base = _mixed_params(args) if args.model == "mixed" else _scalar_params(args)
    all_rows: list[dict] = []
    columns = None
    for value in values:
        params = dataclasses.replace(base, **{args.key: value})
        cols, rows = _spectrum_rows(args, args.model, params, unit)
        columns = [args.key] + cols
        for row in rows:
            all_rows.append({args.key: value, **row})
    if columns is None:
        columns = [args.key] + (
            ["n", "l", "branch", "energy", "status", "residual"]
            if args.model == "mixed"
            else ["n", "l", "branch", "energy", "energy_squared", "status"]
        )
    meta = {"command": "sweep", "model": args.model, "units": args.units,
            "sweep_key": args.key, "params": _param_meta(base)}
    if args.model == "scalar-linear":
        meta["mode"] = args.mode
    _emit(args, meta, columns, all_rows)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sub, model_required=True):
    sub.add_argument("--model", choices=("mixed", "scalar-linear"),
                     required=model_required)
    sub.add_argument("--config", type=str, default=None,
                     help="flat key=value file; flags override")
    sub.add_argument("--hbar-c", dest="hbar_c", type=float, default=1.0)
    sub.add_argument("--rest-energy", dest="rest_energy", type=float, default=1.0)
    sub.add_argument("--units", choices=("mc2", "absolute"), default="mc2")
    sub.add_argument("--output", choices=("csv", "json"), default="csv")
    # mixed-model couplings
    sub.add_argument("--q", type=float, default=None)
    sub.add_argument("--b", type=float, default=0.0)
    sub.add_argument("--beta", type=float, default=1.0)
    sub.add_argument("--V0", dest="V0", type=float, default=0.0)
    # scalar-model couplings
    sub.add_argument("--s", type=float, default=None)
    sub.add_argument("--length-scale", dest="length_scale", type=float, default=1.0)
    sub.add_argument("--mode", choices=scalar_linear.MODES, default="corrected")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgbound",
        description="Bound-state spectra of the radial Klein-Gordon equation "
        "with mixed Coulomb couplings or a linearly rising scalar mass term.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="tabulate the closed-form spectrum")
    _add_common(sp)
    sp.add_argument("--n-max", dest="n_max", type=int, default=3)
    sp.add_argument("--l-max", dest="l_max", type=int, default=3)
    sp.set_defaults(func=cmd_spectrum)

    wf = subs.add_parser("wavefunction", help="sample a normalized radial eigenfunction")
    _add_common(wf)
    wf.add_argument("--n", type=int, default=0)
    wf.add_argument("--l", type=int, default=0)
    wf.add_argument("--branch", choices=(PARTICLE, ANTIPARTICLE), default=PARTICLE)
    wf.add_argument("--samples", type=int, default=100)
    wf.add_argument("--r-min", dest="r_min", type=float, default=1e-2)
    wf.add_argument("--r-max", dest="r_max", type=float, default=20.0)
    wf.set_defaults(func=cmd_wavefunction)

    vf = subs.add_parser("verify", help="run closed-form vs oracle check suites")
    _add_common(vf)
    vf.set_defaults(func=cmd_verify)

    ns = subs.add_parser("nu-solve", help="inspect the hypergeometric reduction")
    _add_common(ns)
    ns.add_argument("--n", type=int, default=0)
    ns.add_argument("--l", type=int, default=0)
    ns.add_argument("--energy", type=float, default=None)
    ns.set_defaults(func=cmd_nu_solve)

    sw = subs.add_parser("sweep", help="spectrum table over a parameter range")
    _add_common(sw)
    sw.add_argument("--key", required=True, help="parameter to sweep")
    sw.add_argument("--values", required=True,
                    help="comma-separated parameter values")
    sw.add_argument("--n-max", dest="n_max", type=int, default=3)
    sw.add_argument("--l-max", dest="l_max", type=int, default=3)
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    # pre-scan for --config so file values become defaults before parsing
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--config" in argv:
        try:
            path = argv[argv.index("--config") + 1]
        except IndexError:
            parser.error("--config requires a path")
        if argv and argv[0] in {"spectrum", "wavefunction", "verify", "nu-solve", "sweep"}:
            sub = next(
                a for a in parser._actions
                if isinstance(a, argparse._SubParsersAction)
            ).choices[argv[0]]
            try:
                _apply_config(sub, path)
            except (OSError, KGBoundError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotBound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except KGBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
