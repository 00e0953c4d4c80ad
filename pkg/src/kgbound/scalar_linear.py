"""Pure scalar Coulomb-like potential S = s/r with linear mass m(r) = m0*r/L.

In z = r^2 the radial problem becomes a pseudoharmonic oscillator

    -u'' + (alpha1^2 r^2 + alpha2/r^2) u = kappa u,

so E^2 is linear in the oscillator eigenvalue kappa.  Two spectrum modes are
shipped: `corrected` (kappa = alpha1*(4n + 2 + sqrt(4*alpha2 + 1)), which the
finite-difference oracle confirms) and `as_printed` (the same with 2n + 1 in
place of 4n + 2), retained so the discrepancy can be reported rather than
silently fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import nu
from .levels import ANTIPARTICLE, BOUND, NEGATIVE_E2, PARTICLE, EnergyLevel
from .units import NATURAL, PhysicalConstants

MODES = ("corrected", "as_printed")


@dataclass(frozen=True)
class LinearMassParams:
    """Scalar coupling s (energy*length) and the mass slope length L."""

    s: float
    length_scale: float = 1.0
    constants: PhysicalConstants = NATURAL

    def __post_init__(self):
        if self.length_scale <= 0:
            raise ValueError("length_scale must be positive")

    @property
    def alpha1(self) -> float:
        """Oscillator stiffness m0*c^2/(hbar*c*L), units 1/length^2."""
        c = self.constants
        return c.rest_energy / (c.hbar_c * self.length_scale)

    def alpha2(self, l: int) -> float:
        Q = self.constants.hbar_c
        return (self.s**2 + l * (l + 1) * Q * Q) / (Q * Q)

    def Lambda(self, l: int) -> float:
        """Effective angular momentum absorbing the coupling."""
        Q = self.constants.hbar_c
        return 0.5 * (math.sqrt((2 * l + 1) ** 2 + (2.0 * self.s / Q) ** 2) - 1.0)


@dataclass(frozen=True)
class DerivedLinear:
    alpha1: float
    alpha2: float
    Lambda: float
    epsilon_sq: float  # signed: (2 m0c^2 s/L - E^2)/(hbar c)^2, never rooted


def derive(params: LinearMassParams, l: int, E: float | None = None) -> DerivedLinear:
    """Reduced-equation constants; epsilon_sq is NaN without a trial energy."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    c = params.constants
    if E is None:
        eps_sq = math.nan
    else:
        eps_sq = (
            2.0 * c.rest_energy * params.s / params.length_scale - E * E
        ) / c.hbar_c**2
    return DerivedLinear(
        alpha1=params.alpha1,
        alpha2=params.alpha2(l),
        Lambda=params.Lambda(l),
        epsilon_sq=eps_sq,
    )


def nu_problem(params: LinearMassParams, l: int, E: float) -> nu.NUProblem:
    """The hypergeometric-type reduction in the variable z = r^2."""
    d = derive(params, l, E)
    return nu.NUProblem(
        tau_tilde=nu.QuadPoly(1.0, 0.0, 0.0),
        sigma=nu.QuadPoly(0.0, 2.0, 0.0),
        sigma_tilde=nu.QuadPoly(-d.alpha2, -d.epsilon_sq, -d.alpha1**2),
    )


def energy_squared(params: LinearMassParams, n: int, l: int, mode: str = "corrected") -> float:
    """E^2 for level (n, l) in the requested mode.

    The two modes differ by exactly (m0c^2 * hbar*c / L) * (2n + 1).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    c = params.constants
    Q, mc2, L = c.hbar_c, c.rest_energy, params.length_scale
    root = math.sqrt((2 * l + 1) ** 2 + 4.0 * params.s**2 / (Q * Q))
    coef = 4 * n + 2 if mode == "corrected" else 2 * n + 1
    return mc2 * (2.0 * params.s / L + (Q / L) * (coef + root))


def spectrum(
    params: LinearMassParams, n_max: int, l_max: int, mode: str = "corrected"
) -> list[EnergyLevel]:
    """Level table; energies come in exact +/- pairs, symmetric about zero."""
    if n_max < 0 or l_max < 0:
        raise ValueError("n_max and l_max must be nonnegative")
    rows = []
    for l in range(l_max + 1):
        for n in range(n_max + 1):
            e2 = energy_squared(params, n, l, mode)
            if e2 < 0.0:
                rows.append(EnergyLevel(n, l, ANTIPARTICLE, math.nan, NEGATIVE_E2, math.nan))
                rows.append(EnergyLevel(n, l, PARTICLE, math.nan, NEGATIVE_E2, math.nan))
                continue
            e = math.sqrt(e2)
            rows.append(EnergyLevel(n, l, ANTIPARTICLE, -e, BOUND, 0.0))
            rows.append(EnergyLevel(n, l, PARTICLE, e, BOUND, 0.0))
    rows.sort(key=lambda r: (r.l, r.n, r.branch))
    return rows


def anharmonic_check(params: LinearMassParams, n: int, l: int) -> tuple[float, float]:
    """(ladder energy alpha1*(2n + 2*Lambda + 3), quantized -epsilon_sq).

    The difference rhs - lhs = 2n*alpha1 quantifies the internal
    n-coefficient inconsistency between the two published forms.
    """
    d = derive(params, l)
    lhs = d.alpha1 * (2 * n + 2.0 * d.Lambda + 3.0)
    rhs = d.alpha1 * (4 * n + 2.0 * d.Lambda + 3.0)
    return lhs, rhs
