import math
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from listradius.bounds import (
    best_upper_bound,
    blinovsky_bound,
    crossover_rate,
    list3_closed_form,
    list3_parameters,
    list_radius_bound,
    sample_curve,
    slope_relaxation_bound,
    solve_xi1,
    split_avg_radius,
    zero_rate_radius,
)
from listradius.core import (
    admissible_j,
    avg_radius_poly,
    binary_entropy,
    inverse_entropy,
    krawtchouk_exponent_value,
)
from listradius.errors import DomainError, NoSolutionError


class TestBlinovsky:
    def test_zero_rate_values(self):
        assert blinovsky_bound(3, 0.0) == pytest.approx(5 / 16)
        assert blinovsky_bound(5, 0.0) == pytest.approx(11 / 32)

    def test_full_rate(self):
        assert blinovsky_bound(3, 1.0) == 0.0

    def test_zero_rate_matches_exact_radius(self):
        # Catalan partial sums at lam = 1/2 telescope to the closed form
        for L in (1, 3, 5, 7, 9, 11):
            exact = sum(
                Fraction(comb(2 * i - 2, i - 1), i) * Fraction(1, 4) ** i
                for i in range(1, (L + 1) // 2 + 1)
            )
            assert exact == zero_rate_radius(L)
            assert blinovsky_bound(L, 0.0) == pytest.approx(float(exact), abs=1e-12)

    def test_nonincreasing(self):
        for L in (2, 3, 6):
            vals = [blinovsky_bound(L, float(r)) for r in np.arange(0.0, 1.0001, 0.05)]
            assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


class TestZeroRateRadius:
    def test_values(self):
        assert zero_rate_radius(3) == Fraction(5, 16)
        assert zero_rate_radius(1) == Fraction(1, 4)
        assert zero_rate_radius(5) == Fraction(11, 32)
        assert zero_rate_radius(11) == Fraction(793, 2048)

    def test_parity_error(self):
        with pytest.raises(DomainError):
            zero_rate_radius(4)


class TestSolveXi1:
    def test_full_rate_endpoint(self):
        for xi0 in (0.1, 0.3, 0.45):
            assert solve_xi1(xi0, binary_entropy(xi0)) == pytest.approx(0.0, abs=1e-11)

    def test_zero_rate_endpoint(self):
        # the defining equation has a quadratic fold at the upper endpoint,
        # so the root there is only sqrt-accurate in the argument
        for xi0 in (0.1, 0.3, 0.45):
            assert solve_xi1(xi0, 0.0) == pytest.approx(
                2 * xi0 * (1 - xi0), abs=1e-8
            )

    def test_solves_the_equation(self):
        xi0, rp = 0.3, 0.4
        x = solve_xi1(xi0, rp)
        rhs = (
            binary_entropy(xi0)
            - xi0 * binary_entropy(x / (2 * xi0))
            - (1 - xi0) * binary_entropy(x / (2 * (1 - xi0)))
        )
        assert rhs == pytest.approx(rp, abs=1e-9)

    def test_matches_list3_parameters(self):
        # at the xi0 endpoint the defining equations coincide
        delta, xi1 = list3_parameters(0.5)
        assert delta == pytest.approx(0.18708, abs=1e-4)
        r_prime = 0.5 - 1.0 + binary_entropy(delta)
        assert solve_xi1(delta, r_prime) == pytest.approx(xi1, abs=1e-9)

    def test_no_solution(self):
        with pytest.raises(NoSolutionError):
            solve_xi1(0.3, binary_entropy(0.3) + 0.1)
        with pytest.raises(NoSolutionError):
            solve_xi1(0.3, -0.1)


class TestSplitAvgRadius:
    def test_xi1_zero_collapse(self):
        for L in (2, 3, 5, 9):
            for j in admissible_j(L):
                for xi0 in (0.1, 0.3, 0.45):
                    assert split_avg_radius(L, j, xi0, 0.0) == pytest.approx(
                        xi0 * j / (L + j), abs=1e-13
                    )

    def test_xi1_top_collapse(self):
        for L in (2, 3, 5, 9):
            for j in admissible_j(L):
                for xi0 in (0.1, 0.3, 0.45):
                    top = 2 * xi0 * (1 - xi0)
                    assert split_avg_radius(L, j, xi0, top) == pytest.approx(
                        avg_radius_poly(L, j, xi0), abs=1e-13
                    )


class TestListRadiusBound:
    def test_below_catalan_at_published_edge(self):
        tau, _ = list_radius_bound(3, 0.361)
        assert tau == pytest.approx(blinovsky_bound(3, 0.361), abs=2e-3)

    def test_matches_closed_form(self):
        for R in np.arange(0.05, 0.501, 0.05):
            R = float(R)
            assert list_radius_bound(3, R)[0] == pytest.approx(
                list3_closed_form(R), abs=1e-6
            )

    def test_zero_rate_approach(self):
        assert list_radius_bound(3, 1e-3)[0] == pytest.approx(5 / 16, abs=5e-3)
        assert list_radius_bound(3, 1e-3)[0] < 5 / 16

    def test_nonincreasing_in_rate(self):
        for L in (3, 4):
            vals = [
                list_radius_bound(L, float(r))[0] for r in np.arange(0.05, 0.951, 0.05)
            ]
            assert all(b <= a + 1e-10 for a, b in zip(vals, vals[1:]))

    def test_dominated_by_relaxation(self):
        for L in (3, 4, 5):
            for R in (0.1, 0.4, 0.7):
                assert (
                    list_radius_bound(L, R)[0]
                    <= slope_relaxation_bound(L, R).tau + 1e-10
                )

    def test_witness_invariants(self):
        for L in (3, 4, 9):
            for R in (0.1, 0.3, 0.6):
                tau, w = list_radius_bound(L, R)
                ximax = 0.5 - math.sqrt(w.beta * (1 - w.beta))
                assert -1e-8 <= w.xi0 <= ximax + 1e-8
                assert -1e-8 <= w.xi1 <= 2 * w.xi0 * (1 - w.xi0) + 1e-8
                assert w.j in admissible_j(L)
                assert w.theta == pytest.approx(tau, abs=1e-12)
                assert split_avg_radius(L, w.j, w.xi0, w.xi1) == pytest.approx(
                    w.theta, abs=1e-8
                )
                rp = (
                    R
                    + binary_entropy(w.beta)
                    - 2 * krawtchouk_exponent_value(w.beta, w.xi0)
                )
                assert rp == pytest.approx(w.r_prime, abs=1e-8)

    def test_endpoint_maximizer_small_list(self):
        # for L=3 the maximizer is j=1 at the xi0 endpoint (that is what
        # makes the explicit closed form exact)
        _, w = list_radius_bound(3, 0.2)
        ximax = 0.5 - math.sqrt(w.beta * (1 - w.beta))
        assert w.j == 1
        assert w.xi0 == pytest.approx(ximax, abs=1e-8)

    def test_explicit_beta(self):
        R = 0.4
        beta = inverse_entropy(0.3)  # h(beta) < R is allowed
        tau, w = list_radius_bound(3, R, beta=beta)
        assert w.beta == beta
        assert 0.0 < tau < 0.5
        with pytest.raises(DomainError):
            list_radius_bound(3, 0.2, beta=inverse_entropy(0.3))

    def test_exponent_modes_agree_at_endpoint_regime(self):
        # for L=3 the maximizer sits at the endpoint where the binomial
        # estimate is exact, so the two treatments coincide
        for R in (0.1, 0.3, 0.5):
            a = list_radius_bound(3, R, exponent="parametric")[0]
            b = list_radius_bound(3, R, exponent="binomial")[0]
            assert a == pytest.approx(b, abs=1e-9)

    def test_binomial_mode_never_stronger(self):
        for L in (3, 9):
            for R in (0.1, 0.2, 0.3):
                a = list_radius_bound(L, R, exponent="parametric")[0]
                b = list_radius_bound(L, R, exponent="binomial")[0]
                assert b >= a - 1e-12

    def test_even_list_size(self):
        tau, w = list_radius_bound(2, 0.3)
        assert 0.0 < tau < 0.5
        assert w.j in (0, 2)

    def test_domain(self):
        with pytest.raises(DomainError):
            list_radius_bound(1, 0.3)
        with pytest.raises(DomainError):
            list_radius_bound(3, 0.0)
        with pytest.raises(DomainError):
            list_radius_bound(3, 0.3, exponent="bogus")


class TestList3ClosedForm:
    def test_zero_rate_limit(self):
        assert list3_closed_form(1e-4) == pytest.approx(5 / 16, abs=1e-3)

    def test_distance_at_half_rate(self):
        delta, _ = list3_parameters(0.5)
        assert delta == pytest.approx(0.18708, abs=1e-4)

    def test_xi1_interval(self):
        for R in (0.1, 0.5, 0.9):
            delta, xi1 = list3_parameters(R)
            assert 0.0 <= xi1 <= 2 * delta * (1 - delta) + 1e-12


class TestSlopeRelaxation:
    def test_zero_rate(self):
        sb = slope_relaxation_bound(3, 0.0)
        assert sb.tau == pytest.approx(5 / 16, abs=1e-12)
        assert sb.max_at_j1

    def test_reference_point(self):
        # delta_lp1(0.1) = 0.386782...; frozen from the involution chain
        sb = slope_relaxation_bound(3, 0.1)
        d = 0.386782
        assert sb.tau_j1 == pytest.approx(0.75 * d - 0.5 * d**3, abs=1e-5)
        assert sb.max_at_j1

    def test_even_list_size_max_at_zero(self):
        sb = slope_relaxation_bound(4, 0.01)
        assert sb.j_star == 0
        assert sb.tau_j1 is None


class TestCrossover:
    def test_list3(self):
        res = crossover_rate(3)
        assert res.r_cross == pytest.approx(0.361, abs=0.002)
        # at the crossover the two bounds agree to solver tolerance
        assert res.tau_at_cross == pytest.approx(
            blinovsky_bound(3, res.r_cross), abs=1e-4
        )

    def test_parity_error(self):
        with pytest.raises(DomainError):
            crossover_rate(4)


class TestBestUpperBound:
    def test_list3_winner_flips(self):
        tau_low, label_low = best_upper_bound(3, 0.2)
        assert label_low == "theorem1"
        assert tau_low == pytest.approx(list_radius_bound(3, 0.2)[0], abs=1e-12)
        tau_high, label_high = best_upper_bound(3, 0.45)
        assert label_high == "blinovsky"
        assert tau_high == pytest.approx(blinovsky_bound(3, 0.45), abs=1e-12)

    def test_list1_labels(self):
        tau, label = best_upper_bound(1, 0.2)
        assert label == "lp1"  # agreement regime: tie goes to the simpler bound
        tau2, label2 = best_upper_bound(1, 0.5)
        assert label2 == "lp2"
        assert tau2 < tau

    def test_list2_includes_abl(self):
        tau, label = best_upper_bound(2, 0.3)
        assert label in ("theorem1", "blinovsky", "abl2")


class TestSampleCurve:
    def test_blinovsky_grid(self):
        rates = [0.01 * k for k in range(1, 100)]
        curve = sample_curve("blinovsky", 3, rates)
        assert len(curve.points) == 99
        assert curve.points[0].tau == pytest.approx(5 / 16, abs=6e-3)

    def test_witness_attached_only_for_central(self):
        curve = sample_curve("theorem1", 3, [0.2, 0.4])
        assert all(p.witness is not None for p in curve.points)
        curve2 = sample_curve("blinovsky", 3, [0.2])
        assert curve2.points[0].witness is None

    def test_bound_compat_errors(self):
        with pytest.raises(DomainError):
            sample_curve("abl2", 3, [0.2])
        with pytest.raises(DomainError):
            sample_curve("lp1", 2, [0.2])

    def test_infeasible_row_noted(self):
        # explicit beta with h(beta) > rate fails per-row, not globally
        beta = inverse_entropy(0.5)
        curve = sample_curve("theorem1", 3, [0.3, 0.7], beta=beta)
        assert curve.points[0].tau is None
        assert curve.points[0].note
        assert curve.points[1].tau is not None
