"""Cross-check suites driven by the `verify` CLI command.

Each check compares a closed-form quantity against an independent route
(the finite-difference oracle, quadrature, or an algebraic identity) and
reports one pass/fail row.  The printed-formula discrepancies of the scalar
model are *reproduced* here on purpose: those checks pass when the expected
mismatch is observed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coulomb_mixed, nu, oracle, scalar_linear, wavefunctions
from .levels import BOUND, THRESHOLD


@dataclass(frozen=True)
class Check:
    name: str
    comparison: str  # "<=" or ">="
    tolerance: float
    observed: float

    @property
    def passed(self) -> bool:
        if self.comparison == "<=":
            return self.observed <= self.tolerance
        return self.observed >= self.tolerance


def _upper(name, tol, observed):
    return Check(name, "<=", tol, float(observed))


def _lower(name, tol, observed):
    return Check(name, ">=", tol, float(observed))


# ---------------------------------------------------------------------------
# engine regression


def nu_engine_checks() -> list[Check]:
    checks = []

    # Coulomb-form reduction at a known bound energy
    params = coulomb_mixed.MixedCoulombParams(q=0.5)
    E = 0.6
    d = coulomb_mixed.derive(params, 0, 0, E)
    problem = coulomb_mixed.nu_problem(params, 0, E)
    branch = nu.select(nu.branches(problem), problem)
    root = math.sqrt(1.0 + 4.0 * d.gamma2)
    dev = max(
        abs(branch.pi.c1 + d.epsilon),
        abs(branch.pi.c0 - 0.5 * (1.0 + root)),
        abs(branch.k + d.gamma1 + d.epsilon * root),
        abs(branch.tau_prime + 2.0 * d.epsilon),
    )
    checks.append(_upper("nu-branch-regression-coulomb", 1e-12, dev))

    # oscillator-form reduction
    sparams = scalar_linear.LinearMassParams(s=1.0)
    e0 = math.sqrt(scalar_linear.energy_squared(sparams, 0, 0))
    sd = scalar_linear.derive(sparams, 0, e0)
    sproblem = scalar_linear.nu_problem(sparams, 0, e0)
    sbranch = nu.select(nu.branches(sproblem), sproblem)
    sroot = math.sqrt(4.0 * sd.alpha2 + 1.0)
    dev = max(
        abs(sbranch.tau.c1 + 2.0 * sd.alpha1),
        abs(sbranch.tau.c0 - (2.0 + sroot)),
    )
    checks.append(_upper("nu-branch-regression-oscillator", 1e-12, dev))

    # perfect-square property of every solved k
    worst = 0.0
    for prob in (problem, sproblem):
        for k in nu.solve_k(prob):
            rad = nu.radicand(prob, k)
            disc = rad.c1**2 - 4.0 * rad.c0 * rad.c2
            worst = max(worst, abs(disc) / max(rad.scale() ** 2, 1.0))
    checks.append(_upper("nu-discriminant-zero", 1e-12, worst))

    # ground-state quantization vanishes identically
    lam0 = max(
        abs(nu.quantize(branch, problem, 0)[1]),
        abs(nu.quantize(sbranch, sproblem, 0)[1]),
    )
    checks.append(_upper("nu-quantize-ground", 0.0, lam0))
    return checks


# ---------------------------------------------------------------------------
# mixed model


def mixed_checks() -> list[Check]:
    checks = []

    # constant-mass equal-mix closed form and antiparticle threshold
    worst = 0.0
    mislabeled = 0
    for q in (0.3, 0.5):
        params = coulomb_mixed.MixedCoulombParams.equal_mix(q)
        for n in range(3):
            for l in range(3):
                e_plus, e_minus = coulomb_mixed.candidate_energies(params, n, l)
                N = n + l + 1
                expected = (N * N - q * q) / (N * N + q * q)
                worst = max(worst, abs(e_plus - expected))
                row = coulomb_mixed.validate(params, n, l, e_minus, "antiparticle")
                if row.status != THRESHOLD or abs(row.energy + 1.0) > 1e-12:
                    mislabeled += 1
    checks.append(_upper("mixed-constant-mass-spectrum", 1e-12, worst))
    checks.append(_upper("mixed-antiparticle-threshold", 0.0, mislabeled))

    # back-substitution residuals on a small parameter sample
    worst = 0.0
    for params in (
        coulomb_mixed.MixedCoulombParams(q=0.5),
        coulomb_mixed.MixedCoulombParams(q=0.3, b=0.5, beta=-1.0),
        coulomb_mixed.MixedCoulombParams(q=0.5, b=1.0, beta=1.0, V0=0.1),
    ):
        for row in coulomb_mixed.bound_levels(coulomb_mixed.spectrum(params, 2, 2)):
            worst = max(worst, row.residual)
    checks.append(_upper("mixed-bound-residuals", 1e-10, worst))

    # q = b/2 duality of the candidate tables
    worst = 0.0
    for q in (0.25, 0.5):
        for beta in (1.0, -1.0):
            varying = coulomb_mixed.MixedCoulombParams(q=q, b=2.0 * q, beta=beta)
            partner = varying.dual()
            for a, b_ in zip(
                coulomb_mixed.spectrum(varying, 3, 3),
                coulomb_mixed.spectrum(partner, 3, 3),
            ):
                worst = max(worst, abs(a.energy - b_.energy))
    checks.append(_upper("mixed-mass-duality", 1e-12, worst))

    # closed form vs finite-difference oracle
    worst = 0.0
    fixtures = [
        (coulomb_mixed.MixedCoulombParams(q=0.5), 0, 0, "particle"),
        (coulomb_mixed.MixedCoulombParams(q=0.5), 1, 0, "particle"),
        (coulomb_mixed.MixedCoulombParams(q=0.3, b=0.5, beta=-1.0), 0, 0, "antiparticle"),
        (coulomb_mixed.MixedCoulombParams(q=0.5, b=0.5, beta=1.0, V0=0.1), 0, 1, "particle"),
    ]
    for params, n, l, branch in fixtures:
        e_plus, e_minus = coulomb_mixed.candidate_energies(params, n, l)
        e_cf = e_plus if branch == "particle" else e_minus
        row = coulomb_mixed.validate(params, n, l, e_cf, branch)
        if row.status != BOUND:
            worst = math.inf
            continue
        half = 0.02 * params.constants.rest_energy
        e_num = oracle.solve_modelA(params, n, l, window=(e_cf - half, e_cf + half))
        worst = max(worst, abs(e_num - e_cf) / abs(e_cf))
    checks.append(_upper("mixed-oracle-agreement", 1e-6, worst))

    # closed-form normalization against quadrature
    worst = 0.0
    params = coulomb_mixed.MixedCoulombParams(q=0.5)
    for row in coulomb_mixed.bound_levels(coulomb_mixed.spectrum(params, 3, 1)):
        wf = wavefunctions.build_mixed(params, row)
        n_quad = wavefunctions.norm_quadrature(wf)
        worst = max(worst, abs(wf.norm / n_quad - 1.0))
    checks.append(_upper("mixed-normalization-closed-vs-quadrature", 1e-8, worst))
    return checks


# ---------------------------------------------------------------------------
# scalar model


def scalar_checks(mode: str = "corrected") -> list[Check]:
    if mode not in scalar_linear.MODES:
        raise ValueError(f"mode must be one of {scalar_linear.MODES}")
    checks = []

    # spectrum vs oracle, in the requested mode
    worst = 0.0
    for s in (0.0, 1.0):
        params = scalar_linear.LinearMassParams(s=s)
        for n in range(2):
            for l in range(2):
                e2 = scalar_linear.energy_squared(params, n, l, mode)
                e2_num = oracle.solve_modelB(params, n, l)
                worst = max(worst, abs(e2 - e2_num) / abs(e2_num))
    checks.append(_upper(f"scalar-oracle-agreement[{mode}]", 1e-6, worst))

    # the two modes differ by exactly (m0c^2 hbar c / L)(2n+1)
    worst = 0.0
    params = scalar_linear.LinearMassParams(s=0.5, length_scale=2.0)
    c = params.constants
    unit = c.rest_energy * c.hbar_c / params.length_scale
    for n in range(4):
        for l in range(4):
            gap = scalar_linear.energy_squared(params, n, l, "as_printed") - \
                scalar_linear.energy_squared(params, n, l, "corrected")
            worst = max(worst, abs(gap + unit * (2 * n + 1)))
    checks.append(_upper("scalar-printed-offset-identity", 1e-12, worst))

    # corrected exponent solves the radial equation; printed one does not
    params = scalar_linear.LinearMassParams(s=1.0)
    E = math.sqrt(scalar_linear.energy_squared(params, 0, 0))
    grid = np.geomspace(0.1, 10.0, 50)
    good = wavefunctions.build_scalar(params, 0, 0, E)
    bad = wavefunctions.build_scalar(params, 0, 0, E, as_printed=True)
    checks.append(
        _upper(
            "scalar-corrected-exponent-residual",
            1e-6,
            wavefunctions.ode_residual(good, params, E, grid),
        )
    )
    checks.append(
        _lower(
            "scalar-printed-exponent-residual",
            1e-2,
            wavefunctions.ode_residual(bad, params, E, grid),
        )
    )

    # printed normalization: usable at n = 0 only
    wf0 = wavefunctions.build_scalar(params, 0, 0, E)
    printed0 = wavefunctions.norm_closed_scalar_printed(params, 0, 0)
    checks.append(
        _upper(
            "scalar-printed-normalization-n0",
            1e-8,
            abs(printed0 / wf0.norm - 1.0),
        )
    )
    usable = 0
    for n in (1, 2):
        printed = wavefunctions.norm_closed_scalar_printed(params, n, 0)
        En = math.sqrt(scalar_linear.energy_squared(params, n, 0))
        wf = wavefunctions.build_scalar(params, n, 0, En)
        if math.isfinite(printed) and abs(printed / wf.norm - 1.0) <= 1e-3:
            usable += 1
    checks.append(_upper("scalar-printed-normalization-unusable-n>=1", 0.0, usable))
    return checks


def run_verify(model: str, mode: str = "corrected") -> list[Check]:
    """All checks for one model; exit status is pass iff every row passes."""
    checks = nu_engine_checks()
    if model == "mixed":
        checks += mixed_checks()
    elif model == "scalar-linear":
        checks += scalar_checks(mode)
    else:
        raise ValueError(f"unknown model {model!r}")
    return checks
