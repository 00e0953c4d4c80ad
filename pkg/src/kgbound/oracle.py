"""Independent finite-difference verifier for the two radial models.

Two discretizations live here.  `discretize` is the plain three-point scheme
on -u'' + V_eff(r) u with Dirichlet walls; it backs the self-test fixtures
(box, hydrogen-like, oscillator).  The model solvers instead factor out the
known origin behavior u = r^p w (p from the inverse-square coefficient) and
difference the equivalent Sturm-Liouville problem for the smooth factor w:

    -(r^2p w')' + (c_inv r^{2p-1} + c_r2 r^{2p+2}) w = mu r^2p w.

That keeps second-order accuracy for non-integer and even critical (p = 1/2)
exponents, where the plain scheme stalls; one Richardson step then removes
the leading h^2 error.  Eigenvalues come from a Sturm-sequence bisection
solver (LAPACK stebz via scipy).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .coulomb_mixed import MixedCoulombParams
from .errors import ConvergenceFailure, NoBracket, UnsupportedRegime
from .scalar_linear import LinearMassParams

BISECTION_TOL = 1e-10  # on E, in units of the rest energy


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid of interior points on (r_min, r_max), Dirichlet walls."""

    r_min: float
    r_max: float
    points: int = 6000
    spacing: str = "uniform"

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError("require 0 < r_min < r_max")
        if self.points < 200:
            raise ValueError("require at least 200 grid points")
        if self.spacing != "uniform":
            raise ValueError("only uniform spacing is supported")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.points + 1)

    def nodes(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.points + 1)

    def refined(self) -> "RadialGrid":
        """Same interval with exactly halved spacing."""
        return RadialGrid(self.r_min, self.r_max, 2 * self.points + 1, self.spacing)


@dataclass(frozen=True)
class EffectivePotentialSpec:
    """V_eff(r) = c_r2*r^2 + c_inv/r + c_inv2/r^2 + offset."""

    c_r2: float
    c_inv: float
    c_inv2: float
    offset: float = 0.0

    def evaluate(self, r):
        r = np.asarray(r, dtype=float)
        return self.c_r2 * r * r + self.c_inv / r + self.c_inv2 / (r * r) + self.offset


@dataclass(frozen=True)
class TridiagonalSystem:
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    grid: RadialGrid


def discretize(spec: EffectivePotentialSpec, grid: RadialGrid) -> TridiagonalSystem:
    """Three-point central difference of -u'' + V_eff(r) u."""
    h = grid.h
    r = grid.nodes()
    diagonal = 2.0 / (h * h) + spec.evaluate(r)
    off = np.full(grid.points - 1, -1.0 / (h * h))
    return TridiagonalSystem(diagonal, off, grid)


def _count_nodes(vec: np.ndarray) -> int:
    tol = 1e-9 * float(np.max(np.abs(vec)))
    signs = np.sign(vec[np.abs(vec) > tol])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def eigen_lowest(system: TridiagonalSystem, count: int, check_nodes: bool = True):
    """The `count` algebraically smallest eigenvalues, index = node count."""
    if count < 1:
        raise ValueError("count must be positive")
    if count > system.grid.points // 10:
        raise ValueError("count must not exceed points/10")
    try:
        if check_nodes:
            vals, vecs = eigh_tridiagonal(
                system.diagonal,
                system.off_diagonal,
                select="i",
                select_range=(0, count - 1),
            )
            for i in range(count):
                nodes = _count_nodes(vecs[:, i])
                if nodes != i:
                    raise ConvergenceFailure(
                        f"eigenvector {i} has {nodes} interior nodes", index=i
                    )
        else:
            vals = eigh_tridiagonal(
                system.diagonal,
                system.off_diagonal,
                select="i",
                select_range=(0, count - 1),
                eigvals_only=True,
            )
    except LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return [float(v) for v in vals]


# ---------------------------------------------------------------------------
# transformed scheme used by the model solvers


def _transformed_system(
    p: float, c_inv: float, c_r2: float, grid: RadialGrid
) -> TridiagonalSystem:
    """Symmetrized discretization of the r^p-factored radial equation."""
    h = grid.h
    r = grid.nodes()
    tp = 2.0 * p
    face_right = (r + 0.5 * h) ** tp
    face_left = np.empty_like(face_right)
    face_left[0] = (grid.r_min + 0.5 * h) ** tp
    face_left[1:] = face_right[:-1]
    weight = r**tp
    diagonal = (face_left + face_right) / (h * h) + c_inv * r ** (tp - 1.0) + c_r2 * r ** (tp + 2.0)
    # fold the left wall value in through the two-term regular series of w
    c1 = c_inv / (2.0 * p)
    ratio = (1.0 + c1 * grid.r_min) / (1.0 + c1 * r[0])
    diagonal[0] -= face_left[0] * ratio / (h * h)
    off = -face_right[:-1] / (h * h)
    sw = np.sqrt(weight)
    return TridiagonalSystem(diagonal / weight, off / (sw[:-1] * sw[1:]), grid)


def _transformed_eigenvalue(
    p: float, c_inv: float, c_r2: float, grid: RadialGrid, index: int
) -> float:
    """Richardson-extrapolated index-th eigenvalue of the transformed scheme."""
    coarse = eigen_lowest(
        _transformed_system(p, c_inv, c_r2, grid), index + 1, check_nodes=False
    )[index]
    fine = eigen_lowest(
        _transformed_system(p, c_inv, c_r2, grid.refined()), index + 1, check_nodes=False
    )[index]
    return (4.0 * fine - coarse) / 3.0


def _check_transformed_nodes(p, c_inv, c_r2, grid, index):
    eigen_lowest(_transformed_system(p, c_inv, c_r2, grid), index + 1, check_nodes=True)


# ---------------------------------------------------------------------------
# model solvers


def default_grid_scalar(params: LinearMassParams, n: int = 0, l: int = 0) -> RadialGrid:
    """Domain sized from the oscillator turning point of level (n, l)."""
    lam0 = params.constants.compton_length
    a1 = params.alpha1
    p = params.Lambda(l) + 1.0
    turning = math.sqrt((4.0 * n + 2.0 * p + 1.0) / a1)
    r_max = max(8.0 * lam0, turning + 7.0 / math.sqrt(a1))
    return RadialGrid(1e-4 * lam0, r_max, 6000)


def default_grid_mixed(eps_estimate: float, constants) -> RadialGrid:
    lam0 = constants.compton_length
    eps_estimate = max(eps_estimate, 0.01 / lam0)
    r_max = max(40.0 * lam0, 25.0 / eps_estimate)
    return RadialGrid(1e-4 * lam0, r_max, 6000)


def solve_modelB(
    params: LinearMassParams, n: int, l: int, grid: RadialGrid | None = None
) -> float:
    """E^2 for the scalar linear-mass model from the oscillator eigenvalue."""
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    c = params.constants
    if grid is None:
        grid = default_grid_scalar(params, n, l)
    p = params.Lambda(l) + 1.0
    kappa = _transformed_eigenvalue(p, 0.0, params.alpha1**2, grid, n)
    _check_transformed_nodes(p, 0.0, params.alpha1**2, grid, n)
    return kappa * c.hbar_c**2 + 2.0 * c.rest_energy * params.s / params.length_scale


def solve_modelA(
    params: MixedCoulombParams,
    n: int,
    l: int,
    grid: RadialGrid | None = None,
    window: tuple[float, float] | None = None,
    scan_points: int = 33,
) -> float:
    """Bound energy of the mixed model by an outer bracketing bisection.

    The matching function f(E) = mu_n(E) + eps(E)^2 is evaluated on a scan
    of the (open) energy window; the first sign change is bisected down to
    1e-10 * m0c^2.  `window` restricts the search, e.g. to isolate one of
    the particle/antiparticle roots.
    """
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    c = params.constants
    mc2, Q = c.rest_energy, c.hbar_c
    gamma2 = params.gamma2(l)
    if 1.0 + 4.0 * gamma2 < 0.0:
        raise UnsupportedRegime(f"1 + 4*gamma2 = {1.0 + 4.0 * gamma2} < 0 (fall to center)")
    p = params.effective_L(l) + 1.0

    pad = 1e-9 * mc2
    lo_phys, hi_phys = -mc2 - params.V0 + pad, mc2 - params.V0 - pad
    if window is None:
        lo, hi = lo_phys, hi_phys
    else:
        lo, hi = max(window[0], lo_phys), min(window[1], hi_phys)
    if not lo < hi:
        raise ValueError("empty energy window")

    if grid is None:
        grid = default_grid_mixed(params.epsilon(0.5 * (lo + hi)), c)

    def f(E: float) -> float:
        g1 = params.gamma1(E)
        mu = _transformed_eigenvalue(p, g1, 0.0, grid, n)
        return mu + params.epsilon(E) ** 2

    scan = np.linspace(lo, hi, scan_points)
    values = [f(E) for E in scan]
    bracket = None
    for i in range(scan_points - 1):
        if values[i] == 0.0:
            return float(scan[i])
        if values[i] * values[i + 1] < 0.0:
            bracket = (float(scan[i]), float(scan[i + 1]), values[i])
            break
    if values[-1] == 0.0:
        return float(scan[-1])
    if bracket is None:
        table = ", ".join(f"f({E:.6g})={v:.6g}" for E, v in zip(scan, values))
        raise NoBracket(
            f"no sign change of the matching function on the scanned window: {table}",
            scan=list(zip(scan.tolist(), values)),
        )

    a, b, fa = bracket
    while b - a > BISECTION_TOL * mc2:
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            a = b = mid
            break
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm
    root = 0.5 * (a + b)
    _check_transformed_nodes(p, params.gamma1(root), 0.0, grid, n)
    return float(root)
