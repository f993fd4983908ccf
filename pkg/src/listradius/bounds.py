"""Upper bounds on the list-decoding radius as functions of the rate.

The central evaluator maximizes the split average-radius expression over
the shift count j, the sphere radius xi0 and the induced intersection
parameter xi1; the other entries are the Catalan-sum bound, the explicit
list-3 closed form, the concavity relaxation and the curve/crossover
plumbing built on top.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .core import (
    admissible_j,
    avg_radius_poly,
    binary_entropy,
    delta_lp1,
    inverse_entropy,
    krawtchouk_exponent_value,
)
from .errors import DomainError, NoSolutionError
from .lp import abl2_tau, golden_max, lp1_tau, lp2_tau

__all__ = [
    "BoundCurve",
    "CrossoverResult",
    "CurvePoint",
    "RadiusWitness",
    "SlopeBound",
    "best_upper_bound",
    "blinovsky_bound",
    "crossover_rate",
    "list3_closed_form",
    "list3_parameters",
    "list_radius_bound",
    "sample_curve",
    "slope_relaxation_bound",
    "solve_xi1",
    "split_avg_radius",
    "zero_rate_radius",
]

BOUND_NAMES = ("theorem1", "blinovsky", "abl2", "lp1", "lp2", "slope", "best")


@dataclass(frozen=True)
class RadiusWitness:
    """Maximizing parameters of the central bound at one rate."""

    xi0: float
    xi1: float
    j: int
    theta: float
    beta: float
    r_prime: float


@dataclass(frozen=True)
class CrossoverResult:
    """Largest rate at which the central bound still matches or beats the
    Catalan-sum bound."""

    L: int
    r_cross: float
    tau_at_cross: float


@dataclass(frozen=True)
class SlopeBound:
    """Concavity relaxation: max over j of the average-radius polynomial
    evaluated at the first LP distance."""

    tau: float
    tau_j1: float | None
    j_star: int
    max_at_j1: bool


@dataclass(frozen=True)
class CurvePoint:
    rate: float
    tau: float | None
    witness: RadiusWitness | None = None
    label: str | None = None
    note: str | None = None


@dataclass(frozen=True)
class BoundCurve:
    bound: str
    L: int
    points: tuple[CurvePoint, ...]


def blinovsky_bound(L: int, R: float) -> float:
    """Catalan-weighted sum bound on the list-L radius at rate R, with the
    sphere parameter lam solving R = 1 - h(lam)."""
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    R = float(R)
    if not 0.0 <= R <= 1.0:
        raise DomainError(f"rate must lie in [0, 1], got {R}")
    lam = inverse_entropy(1.0 - R)
    x = lam * (1.0 - lam)
    total = 0.0
    for i in range(1, (L + 1) // 2 + 1):
        total += (comb(2 * i - 2, i - 1) // i) * x**i
    return total


def zero_rate_radius(L: int) -> Fraction:
    """Exact zero-rate list-L radius for odd L:
    1/2 - 2^-(L+1) * C(L, (L-1)/2)."""
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    if L % 2 == 0:
        raise DomainError(f"zero-rate radius formula requires odd L, got {L}")
    return Fraction(1, 2) - Fraction(comb(L, (L - 1) // 2), 2 ** (L + 1))


def solve_xi1(xi0: float, r_prime: float, tol: float = 1e-12) -> float:
    """Unique xi1 in [0, 2 xi0 (1 - xi0)] with
    r_prime = h(xi0) - xi0 h(xi1/(2 xi0)) - (1-xi0) h(xi1/(2(1-xi0))).

    The right-hand side decreases from h(xi0) at xi1 = 0 to 0 at the upper
    endpoint, so bisection applies.
    """
    xi0 = float(xi0)
    if not 0.0 < xi0 < 1.0:
        raise DomainError(f"xi0 must lie in (0, 1), got {xi0}")
    h0 = binary_entropy(xi0)
    if r_prime < -1e-9 or r_prime > h0 + 1e-9:
        raise NoSolutionError(
            f"no xi1 solution: r_prime={r_prime} outside [0, h(xi0)={h0}]"
        )
    rp = min(max(float(r_prime), 0.0), h0)
    lo, hi = 0.0, 2.0 * xi0 * (1.0 - xi0)

    def rhs(x):
        return (
            h0
            - xi0 * binary_entropy(x / (2.0 * xi0))
            - (1.0 - xi0) * binary_entropy(x / (2.0 * (1.0 - xi0)))
        )

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if rhs(mid) >= rp:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _solve_xi1_vec(xi0: np.ndarray, r_prime: np.ndarray, iters: int = 52) -> np.ndarray:
    """Vectorized bisection companion of solve_xi1; r_prime is assumed
    already clipped to [0, h(xi0)]."""
    h0 = binary_entropy(xi0)
    lo = np.zeros_like(xi0)
    hi = 2.0 * xi0 * (1.0 - xi0)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        rhs = (
            h0
            - xi0 * binary_entropy(mid / (2.0 * xi0))
            - (1.0 - xi0) * binary_entropy(mid / (2.0 * (1.0 - xi0)))
        )
        take_lo = rhs >= r_prime
        lo = np.where(take_lo, mid, lo)
        hi = np.where(take_lo, hi, mid)
    return 0.5 * (lo + hi)


def split_avg_radius(L: int, j: int, xi0, xi1):
    """Two-piece average-radius value
    xi0 * poly(1 - xi1/(2 xi0)) + (1-xi0) * poly(xi1/(2(1-xi0)));
    works on floats and numpy arrays."""
    a1 = 1.0 - xi1 / (2.0 * xi0)
    a2 = xi1 / (2.0 * (1.0 - xi0))
    if isinstance(a1, np.ndarray):
        a1 = np.clip(a1, 0.0, 1.0)
        a2 = np.clip(a2, 0.0, 1.0)
    else:
        a1 = min(max(a1, 0.0), 1.0)
        a2 = min(max(a2, 0.0), 1.0)
    return xi0 * avg_radius_poly(L, j, a1) + (1.0 - xi0) * avg_radius_poly(L, j, a2)


EXPONENT_MODES = ("parametric", "binomial")


def _subcode_rate(R, beta, hbeta, xi0, exponent):
    """Subcode rate R + h(beta) - 2E(xi0) under the chosen exponent
    treatment.

    "parametric" evaluates the Krawtchouk exponent exactly; "binomial"
    substitutes its upper estimate (1 + h(beta) - h(xi0))/2, which weakens
    the bound monotonically and is the evaluation behind the published
    crossover table.  Works on floats and numpy arrays.
    """
    if exponent == "parametric":
        return R + hbeta - 2.0 * krawtchouk_exponent_value(beta, xi0)
    if exponent == "binomial":
        return R + binary_entropy(xi0) - 1.0
    raise DomainError(f"unknown exponent mode {exponent!r}")


def _theta_at(L, j, R, beta, hbeta, xi0, tol, exponent="parametric"):
    """Objective for one (j, xi0); -inf when xi0 is excluded (negative
    subcode rate).  Returns (theta, xi1, r_prime)."""
    if xi0 <= 0.0:
        return 0.0, 0.0, _subcode_rate(R, beta, hbeta, 0.0, exponent)
    rp = _subcode_rate(R, beta, hbeta, xi0, exponent)
    if rp < -1e-12:
        return -math.inf, 0.0, rp
    rp_c = max(rp, 0.0)
    h0 = binary_entropy(xi0)
    xi1 = 0.0 if rp_c >= h0 else solve_xi1(xi0, rp_c, tol)
    return split_avg_radius(L, j, xi0, xi1), xi1, rp


def list_radius_bound(
    L: int,
    R: float,
    beta: float | None = None,
    grid: int = 2000,
    refine_tol: float = 1e-10,
    bisect_tol: float = 1e-12,
    exponent: str = "parametric",
) -> tuple[float, RadiusWitness]:
    """Central upper bound on the list-L decoding radius at rate R.

    For every admissible shift count j and every sphere radius xi0 up to
    1/2 - sqrt(beta(1-beta)), the subcode rate R + h(beta) - 2E_beta(xi0)
    determines the intersection parameter xi1, and the split average-radius
    value is maximized.  Search is a dense xi0 grid followed by
    golden-section refinement around the best cell, per j independently;
    domain endpoints are always evaluated explicitly.

    beta defaults to h(beta) = R.  xi0 with negative subcode rate are
    excluded; subcode rates above h(xi0) clamp xi1 to 0.  ``exponent``
    selects the treatment of the Krawtchouk exponent (see
    :func:`_subcode_rate`); the witness r_prime is reported under the
    selected treatment.
    """
    if not isinstance(L, int) or L < 2:
        raise DomainError(f"list size must be an integer >= 2, got {L}")
    if exponent not in EXPONENT_MODES:
        raise DomainError(f"unknown exponent mode {exponent!r}")
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {R}")
    if beta is None:
        beta = inverse_entropy(R)
    beta = float(beta)
    if not 0.0 < beta < 0.5:
        raise DomainError(f"beta must lie in (0, 1/2), got {beta}")
    hbeta = binary_entropy(beta)
    if hbeta > R + 1e-9:
        raise DomainError(f"h(beta)={hbeta} exceeds rate {R}")
    xi_max = 0.5 - math.sqrt(beta * (1.0 - beta))

    xs = np.linspace(xi_max / grid, xi_max, grid)
    rp = _subcode_rate(R, beta, hbeta, xs, exponent)
    feasible = rp >= -1e-12
    if not np.any(feasible):
        raise NoSolutionError("no admissible xi0: subcode rate negative everywhere")
    rp_c = np.clip(rp, 0.0, None)
    h0 = binary_entropy(xs)
    clamp = rp_c >= h0
    xi1 = np.where(clamp, 0.0, _solve_xi1_vec(xs, np.minimum(rp_c, h0)))

    best: tuple[float, float, float, int, float] | None = None
    for j in admissible_j(L):
        theta = split_avg_radius(L, j, xs, xi1)
        theta = np.where(feasible, theta, -np.inf)
        k = int(np.argmax(theta))

        def scalar_theta(x, j=j):
            return _theta_at(L, j, R, beta, hbeta, x, bisect_tol, exponent)[0]

        lo = xs[max(k - 1, 0)]
        hi = xs[min(k + 1, grid - 1)]
        x_ref, t_ref = golden_max(scalar_theta, float(lo), float(hi), refine_tol)
        candidates = [(t_ref, x_ref), (float(theta[k]), float(xs[k]))]
        t_end = scalar_theta(xi_max)
        candidates.append((t_end, xi_max))
        t_bestj, x_bestj = max(candidates)
        if best is None or t_bestj > best[0]:
            th, x1, rprime = _theta_at(
                L, j, R, beta, hbeta, x_bestj, bisect_tol, exponent
            )
            best = (th, x_bestj, x1, j, rprime)

    theta_star, xi0_star, xi1_star, j_star, rp_star = best
    witness = RadiusWitness(
        xi0=xi0_star,
        xi1=xi1_star,
        j=j_star,
        theta=theta_star,
        beta=beta,
        r_prime=rp_star,
    )
    return theta_star, witness


def list3_parameters(R: float, tol: float = 1e-12) -> tuple[float, float]:
    """(delta, xi1) of the explicit list-3 bound: delta from the rate
    relation R = h(1/2 - sqrt(delta(1-delta))), xi1 from bisection on
    R = 1 - delta h(xi1/(2 delta)) - (1-delta) h(xi1/(2(1-delta)))."""
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {R}")
    delta = delta_lp1(R)

    def rate_of(x):
        return (
            1.0
            - delta * binary_entropy(x / (2.0 * delta))
            - (1.0 - delta) * binary_entropy(x / (2.0 * (1.0 - delta)))
        )

    lo, hi = 0.0, 2.0 * delta * (1.0 - delta)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if rate_of(mid) >= R:
            lo = mid
        else:
            hi = mid
    return delta, 0.5 * (lo + hi)


def list3_closed_form(R: float) -> float:
    """Explicit cubic form of the list-3 bound:
    (3/4) delta - ((2 delta - xi1)^3 / delta^2 + xi1^3 / (1-delta)^2) / 16."""
    delta, xi1 = list3_parameters(R)
    return 0.75 * delta - (
        (2.0 * delta - xi1) ** 3 / delta**2 + xi1**3 / (1.0 - delta) ** 2
    ) / 16.0


def slope_relaxation_bound(L: int, R: float) -> SlopeBound:
    """Concavity relaxation of the central bound: max over admissible j of
    the average-radius polynomial at the first LP distance.

    Valid for every L; for odd L the j = 1 value is also reported since the
    maximum sits there for all small rates.
    """
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    R = float(R)
    if not 0.0 <= R <= 1.0:
        raise DomainError(f"rate must lie in [0, 1], got {R}")
    x = delta_lp1(R)
    values = {j: avg_radius_poly(L, j, x) for j in admissible_j(L)}
    j_star = max(values, key=values.get)
    tau_j1 = values.get(1)
    return SlopeBound(
        tau=values[j_star],
        tau_j1=tau_j1,
        j_star=j_star,
        max_at_j1=j_star == 1,
    )


_REFERENCE_CROSSOVERS = {3: 0.361, 5: 0.248, 7: 0.184, 9: 0.136, 11: 0.100}


def reference_crossovers() -> dict[int, float]:
    """Published crossover rates used as acceptance anchors."""
    return dict(_REFERENCE_CROSSOVERS)


def crossover_rate(
    L: int,
    r_tol: float = 1e-5,
    scan_step: float = 0.02,
    grid: int = 2000,
    exponent: str = "binomial",
) -> CrossoverResult:
    """Largest rate at which the central bound is at most the Catalan-sum
    bound, found by scan plus bisection on their difference.

    Defaults to the binomial exponent estimate: the published crossover
    table was computed that way, and for small L the two treatments agree
    at the crossover because the maximizer sits at the xi0 endpoint where
    the estimate is exact.
    """
    if not isinstance(L, int) or L < 3 or L % 2 == 0:
        raise DomainError(f"crossover rates are computed for odd L >= 3, got {L}")

    def diff(R):
        return (
            list_radius_bound(L, R, grid=grid, exponent=exponent)[0]
            - blinovsky_bound(L, R)
        )

    rs = np.arange(scan_step, 0.99, scan_step)
    lo = None
    hi = None
    for i in range(len(rs) - 1, -1, -1):
        d = diff(float(rs[i]))
        if d <= 0.0:
            lo = float(rs[i])
            hi = float(rs[i + 1]) if i + 1 < len(rs) else 0.99
            break
    if lo is None:
        raise NoSolutionError(f"central bound never beats the Catalan sum for L={L}")
    if diff(hi) <= 0.0:
        r_cross = hi
    else:
        while hi - lo > r_tol:
            mid = 0.5 * (lo + hi)
            if diff(mid) <= 0.0:
                lo = mid
            else:
                hi = mid
        r_cross = lo
    tau = list_radius_bound(L, r_cross, grid=grid, exponent=exponent)[0]
    return CrossoverResult(L=L, r_cross=r_cross, tau_at_cross=tau)


def best_upper_bound(
    L: int, R: float, grid: int = 2000, lp2_grid: int = 400
) -> tuple[float, str]:
    """Minimum over the bounds applicable at list size L, with the winner
    labeled: LP bounds for L = 1, the list-2 bound for L = 2, the central
    and Catalan-sum bounds for every L >= 2."""
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {R}")
    if L == 1:
        tau1 = lp1_tau(R)
        tau2 = lp2_tau(R, grid=lp2_grid)
        if tau2 < tau1 - 1e-9:
            return tau2, "lp2"
        return tau1, "lp1"
    candidates = [
        (list_radius_bound(L, R, grid=grid)[0], "theorem1"),
        (blinovsky_bound(L, R), "blinovsky"),
    ]
    if L == 2:
        candidates.append((abl2_tau(R, grid=lp2_grid), "abl2"))
    return min(candidates, key=lambda t: t[0])


def sample_curve(
    bound: str,
    L: int,
    rates,
    beta: float | None = None,
    grid: int = 2000,
    lp2_grid: int = 400,
    bisect_tol: float = 1e-12,
) -> BoundCurve:
    """Evaluate one bound over a rate grid; rows that fail their domain
    checks are recorded with a note instead of aborting the sweep."""
    if bound not in BOUND_NAMES:
        raise DomainError(f"unknown bound {bound!r}")
    if bound == "abl2" and L != 2:
        raise DomainError("bound abl2 requires L = 2")
    if bound in ("lp1", "lp2") and L != 1:
        raise DomainError(f"bound {bound} requires L = 1")
    if bound in ("theorem1", "blinovsky") and L < 2:
        raise DomainError(f"bound {bound} requires L >= 2")
    points = []
    for R in rates:
        R = float(R)
        witness = None
        label = None
        note = None
        try:
            if bound == "theorem1":
                tau, witness = list_radius_bound(
                    L, R, beta=beta, grid=grid, bisect_tol=bisect_tol
                )
            elif bound == "blinovsky":
                tau = blinovsky_bound(L, R)
            elif bound == "abl2":
                tau = abl2_tau(R, grid=lp2_grid)
            elif bound == "lp1":
                tau = lp1_tau(R)
            elif bound == "lp2":
                tau = lp2_tau(R, grid=lp2_grid)
            elif bound == "slope":
                tau = slope_relaxation_bound(L, R).tau
            else:
                tau, label = best_upper_bound(L, R, grid=grid, lp2_grid=lp2_grid)
        except (DomainError, NoSolutionError) as exc:
            tau = None
            note = str(exc)
        points.append(CurvePoint(rate=R, tau=tau, witness=witness, label=label, note=note))
    return BoundCurve(bound=bound, L=L, points=tuple(points))
