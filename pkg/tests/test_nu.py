"""Unit tests for the hypergeometric-reduction engine."""

import math

import pytest

from kgbound import nu
from kgbound.errors import (
    DegenerateProblem,
    MultipleBranches,
    NoAdmissibleBranch,
    UnsupportedSigma,
)


def coulomb_problem(eps, gamma1, gamma2):
    """tau_tilde = 0, sigma = z, sigma_tilde = -(eps^2 z^2 + gamma1 z + gamma2)."""
    return nu.NUProblem(
        tau_tilde=nu.QuadPoly(),
        sigma=nu.QuadPoly(0.0, 1.0, 0.0),
        sigma_tilde=nu.QuadPoly(-gamma2, -gamma1, -eps * eps),
    )


class TestQuadPoly:
    def test_degree(self):
        assert nu.QuadPoly().degree() == 0
        assert nu.QuadPoly(1.0, 2.0).degree() == 1
        assert nu.QuadPoly(0.0, 0.0, 3.0).degree() == 2

    def test_evaluate_and_derivative(self):
        p = nu.QuadPoly(1.0, -2.0, 3.0)
        assert p.evaluate(2.0) == 1.0 - 4.0 + 12.0
        d = p.derivative()
        assert (d.c0, d.c1, d.c2) == (-2.0, 6.0, 0.0)

    def test_scale(self):
        assert nu.QuadPoly(-5.0, 1.0, 2.0).scale() == 5.0


class TestProblemValidation:
    def test_sigma_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            nu.NUProblem(nu.QuadPoly(), nu.QuadPoly(1.0), nu.QuadPoly())

    def test_quadratic_tau_tilde_rejected(self):
        with pytest.raises(ValueError):
            nu.NUProblem(
                nu.QuadPoly(0, 0, 1.0), nu.QuadPoly(0, 1.0), nu.QuadPoly()
            )


class TestSolveK:
    def test_known_pair_descending(self):
        # eps = 0.8, gamma1 = -1.6, gamma2 = 0: k = 1.6 +/- 0.8
        problem = coulomb_problem(0.8, -1.6, 0.0)
        ks = nu.solve_k(problem)
        assert ks == pytest.approx([2.4, 0.8], abs=1e-14)
        assert ks[0] > ks[1]

    def test_perfect_square_property(self):
        problem = coulomb_problem(0.7, -1.1, 0.3)
        for k in nu.solve_k(problem):
            rad = nu.radicand(problem, k)
            disc = rad.c1**2 - 4.0 * rad.c0 * rad.c2
            assert abs(disc) < 1e-12 * max(rad.scale() ** 2, 1.0)

    def test_complex_pair_empty(self):
        # 1 + 4*gamma2 < 0 makes the k-discriminant negative
        assert nu.solve_k(coulomb_problem(0.8, -1.6, -1.0)) == []

    def test_double_root_single_entry(self):
        # eps > 0, gamma2 = -1/4 collapses the pair to one k
        ks = nu.solve_k(coulomb_problem(0.8, -1.6, -0.25))
        assert len(ks) == 1
        assert ks[0] == pytest.approx(1.6, abs=1e-12)

    def test_degenerate_raises(self):
        problem = nu.NUProblem(
            tau_tilde=nu.QuadPoly(),
            sigma=nu.QuadPoly(1.0, 2.0, 1.0),  # (z+1)^2
            sigma_tilde=nu.QuadPoly(),
        )
        with pytest.raises(DegenerateProblem):
            nu.solve_k(problem)


class TestBranches:
    def test_four_candidates(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        assert len(nu.branches(problem)) == 4

    def test_sqrt_sign_convention(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        for br in nu.branches(problem):
            assert br.sqrt_radicand.c1 >= 0.0

    def test_lambda_is_k_plus_pi_prime(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        for br in nu.branches(problem):
            assert br.lam == pytest.approx(br.k + br.pi.c1, abs=1e-14)


class TestSelect:
    def test_coulomb_selection(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        br = nu.select(nu.branches(problem), problem)
        # pi = -0.8 z + 1, tau = -1.6 z + 2, k = 0.8
        assert br.pi.c1 == pytest.approx(-0.8, abs=1e-14)
        assert br.pi.c0 == pytest.approx(1.0, abs=1e-14)
        assert br.tau_prime == pytest.approx(-1.6, abs=1e-14)
        assert br.k == pytest.approx(0.8, abs=1e-14)

    def test_no_admissible_at_threshold(self):
        # eps = 0, gamma1 = gamma2 = 0: both branches have tau' = 0
        problem = coulomb_problem(0.0, 0.0, 0.0)
        with pytest.raises(NoAdmissibleBranch):
            nu.select(nu.branches(problem), problem)

    def test_empty_candidates_raise(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        with pytest.raises(NoAdmissibleBranch):
            nu.select([], problem)

    def test_multiple_branches_warns_smallest_lambda(self):
        # gamma2 in (-1/4, 0): both signs of the constant term are allowed
        problem = coulomb_problem(0.8, -1.6, -3.0 / 16.0)
        with pytest.warns(MultipleBranches):
            br = nu.select(nu.branches(problem), problem)
        others = [
            b
            for b in nu.branches(problem)
            if b.tau_prime < 0 and nu.derive_factors(b, problem).phi_power > 0
        ]
        assert br.lam == min(b.lam for b in others)


class TestQuantize:
    def test_ground_state_exact_zero(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        br = nu.select(nu.branches(problem), problem)
        lam, lam_n = nu.quantize(br, problem, 0)
        assert lam_n == 0.0
        assert lam == pytest.approx(0.0, abs=1e-14)

    def test_linear_ladder(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        br = nu.select(nu.branches(problem), problem)
        for n in range(4):
            _, lam_n = nu.quantize(br, problem, n)
            assert lam_n == pytest.approx(1.6 * n, abs=1e-14)

    def test_negative_n_rejected(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        br = nu.select(nu.branches(problem), problem)
        with pytest.raises(ValueError):
            nu.quantize(br, problem, -1)


class TestFactorForms:
    def test_coulomb_factors(self):
        problem = coulomb_problem(0.8, -1.6, 0.0)
        br = nu.select(nu.branches(problem), problem)
        forms = nu.derive_factors(br, problem)
        assert forms.phi_power == pytest.approx(1.0, abs=1e-14)
        assert forms.phi_exp_rate == pytest.approx(-0.8, abs=1e-14)
        assert forms.rho_power == pytest.approx(1.0, abs=1e-14)
        assert forms.rho_exp_rate == pytest.approx(-1.6, abs=1e-14)

    def test_unsupported_sigma(self):
        problem = nu.NUProblem(
            tau_tilde=nu.QuadPoly(),
            sigma=nu.QuadPoly(0.0, 1.0, 1.0),
            sigma_tilde=nu.QuadPoly(-1.0),
        )
        branch = nu.branches(problem)[0]
        with pytest.raises(UnsupportedSigma):
            nu.derive_factors(branch, problem)


def test_oscillator_form_branch():
    """tau_tilde = 1, sigma = 2z reduction of the pseudoharmonic system."""
    a1, eps_sq, a2 = 1.0, -4.0 - math.sqrt(5.0), 1.0
    problem = nu.NUProblem(
        tau_tilde=nu.QuadPoly(1.0),
        sigma=nu.QuadPoly(0.0, 2.0, 0.0),
        sigma_tilde=nu.QuadPoly(-a2, -eps_sq, -a1 * a1),
    )
    br = nu.select(nu.branches(problem), problem)
    root = math.sqrt(4.0 * a2 + 1.0)
    assert br.tau.c1 == pytest.approx(-2.0 * a1, abs=1e-12)
    assert br.tau.c0 == pytest.approx(2.0 + root, abs=1e-12)
