"""Linear-programming rate bounds used as comparison baselines.

The second LP bound on the rate of binary codes with a given relative
distance, and the list-size-2 bound obtained from it by an
Elias-Bassalygo style reduction with a sphere-constrained distance bound.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .core import binary_entropy, delta_lp1
from .errors import DomainError, NoSolutionError

__all__ = [
    "Lp2Witness",
    "abl_branch_point",
    "abl_list2",
    "abl_sphere_param",
    "abl2_tau",
    "lp1_tau",
    "lp2_constraint",
    "lp2_tau",
    "r_lp2",
]

_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section minimization of f on [lo, hi]; returns (x, f(x)).

    Also compares against both interval endpoints, so boundary minima are
    returned exactly.
    """
    a, b = lo, hi
    x1 = b - _PHI * (b - a)
    x2 = a + _PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _PHI * (b - a)
            f2 = f(x2)
    candidates = [(f(lo), lo), (f(hi), hi), (f1, x1), (f2, x2)]
    fbest, xbest = min(candidates, key=lambda t: t[0])
    return xbest, fbest


def golden_max(f, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section maximization of f on [lo, hi]; returns (x, f(x))."""
    x, v = golden_min(lambda t: -f(t), lo, hi, tol)
    return x, -v


@dataclass(frozen=True)
class Lp2Witness:
    """Minimizing point of the second LP bound objective."""

    alpha: float
    beta: float
    rate_bits: float


def lp2_constraint(alpha: float, beta: float) -> float:
    """Left-hand side of the feasibility constraint of the second LP bound:
    2(alpha(1-alpha) - beta(1-beta)) / (1 + 2 sqrt(beta(1-beta)))."""
    return (
        2.0
        * (alpha * (1.0 - alpha) - beta * (1.0 - beta))
        / (1.0 + 2.0 * math.sqrt(beta * (1.0 - beta)))
    )


def _alpha_on_constraint(beta: float, delta: float, tol: float = 1e-13) -> float:
    """Largest alpha in [beta, 1/2] keeping the constraint at most delta.

    Bisection on the constraint equality; returns 1/2 when the whole range
    is feasible.  The feasible (lower) endpoint of the final bracket is
    returned so the witness never violates the constraint.
    """
    if lp2_constraint(0.5, beta) <= delta:
        return 0.5
    lo, hi = beta, 0.5
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if lp2_constraint(mid, beta) <= delta:
            lo = mid
        else:
            hi = mid
    return lo


def _min_beta_on_constraint(alpha: float, delta: float, tol: float = 1e-13) -> float:
    """Smallest beta in [0, alpha] keeping the constraint at most delta."""
    if lp2_constraint(alpha, 0.0) <= delta:
        return 0.0
    lo, hi = 0.0, alpha
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if lp2_constraint(alpha, mid) <= delta:
            hi = mid
        else:
            lo = mid
    return hi


@functools.lru_cache(maxsize=4096)
def _r_lp2_cached(delta: float, grid: int, refine_tol: float):
    # Boundary search: for each beta take the largest feasible alpha
    # (the objective 1 - h(alpha) + h(beta) decreases in alpha).
    def boundary_obj(beta):
        alpha = _alpha_on_constraint(beta, delta)
        return 1.0 - binary_entropy(alpha) + binary_entropy(beta)

    betas = np.linspace(0.0, 0.5, grid + 1)
    vals = [boundary_obj(b) for b in betas]
    k = int(np.argmin(vals))
    blo = betas[max(k - 1, 0)]
    bhi = betas[min(k + 1, grid)]
    beta_b, val_b = golden_min(boundary_obj, blo, bhi, tol=1e-12)
    best = (val_b, _alpha_on_constraint(beta_b, delta), beta_b)

    # Coarse 2-D grid over the region, then coordinate descent.
    a = np.linspace(0.0, 0.5, grid + 1)
    A, B = np.meshgrid(a, a, indexing="ij")
    mask = B <= A
    with np.errstate(divide="ignore", invalid="ignore"):
        lhs = 2.0 * (A * (1.0 - A) - B * (1.0 - B)) / (1.0 + 2.0 * np.sqrt(B * (1.0 - B)))
    mask &= lhs <= delta
    obj = 1.0 - binary_entropy(A) + binary_entropy(B)
    obj = np.where(mask, obj, np.inf)
    flat = int(np.argmin(obj))
    alpha_c, beta_c = float(A.flat[flat]), float(B.flat[flat])
    for _ in range(200):
        alpha_n = _alpha_on_constraint(beta_c, delta)
        beta_n = _min_beta_on_constraint(alpha_n, delta)
        move = abs(alpha_n - alpha_c) + abs(beta_n - beta_c)
        alpha_c, beta_c = alpha_n, beta_n
        if move < refine_tol:
            break
    val_c = 1.0 - binary_entropy(alpha_c) + binary_entropy(beta_c)
    if val_c < best[0]:
        best = (val_c, alpha_c, beta_c)

    rate = max(float(best[0]), 0.0)
    return rate, Lp2Witness(alpha=float(best[1]), beta=float(best[2]), rate_bits=rate)


def r_lp2(delta: float, grid: int = 400, refine_tol: float = 1e-8):
    """Second LP bound on rate at relative distance delta, minimized over the
    feasible (alpha, beta) region; returns (rate_bits, witness)."""
    delta = float(delta)
    if not 0.0 < delta <= 0.5:
        raise DomainError(f"relative distance must lie in (0, 1/2], got {delta}")
    return _r_lp2_cached(delta, int(grid), float(refine_tol))


DEFAULT_LP2_GRID = 400


def abl_sphere_param(tau: float) -> float:
    """Sphere radius parameter of the list-2 bound second branch:
    1/2 - sqrt(1/4 - (sqrt(tau - 3 tau^2) - tau)^2)."""
    tau = float(tau)
    if not 0.0 < tau < 0.25:
        raise DomainError(f"tau must lie in (0, 1/4), got {tau}")
    inner = math.sqrt(tau - 3.0 * tau * tau) - tau
    rad = 0.25 - inner * inner
    if rad < 0.0:
        raise DomainError(f"sphere parameter undefined at tau={tau}")
    return 0.5 - math.sqrt(rad)


def _abl_second_branch(tau: float) -> float:
    return 1.0 - binary_entropy(2.0 * tau) + binary_entropy(abl_sphere_param(tau))


@functools.lru_cache(maxsize=8)
def abl_branch_point(tol: float = 1e-9, grid: int = DEFAULT_LP2_GRID) -> float:
    """Switch point of the two branches of the list-2 bound.

    The branches meet where their difference vanishes.  With the LP branch
    evaluated accurately the two expressions osculate instead of crossing
    transversally (the difference peaks at about -1e-7), so when the scan
    finds no sign change the contact point is located as the extremum of
    the difference.  Either way the branch values agree there to well under
    1e-6.
    """

    def gap(tau):
        return r_lp2(2.0 * tau, grid=grid)[0] - _abl_second_branch(tau)

    taus = np.linspace(0.02, 0.24, 45)
    gaps = [gap(t) for t in taus]
    for i in range(len(taus) - 1):
        if gaps[i] == 0.0:
            return float(taus[i])
        if gaps[i] * gaps[i + 1] < 0.0:
            lo, hi = taus[i], taus[i + 1]
            glo = gaps[i]
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                gm = gap(mid)
                if gm == 0.0:
                    return mid
                if (gm > 0.0) == (glo > 0.0):
                    lo, glo = mid, gm
                else:
                    hi = mid
            return 0.5 * (lo + hi)
    k = int(np.argmax(gaps))
    lo = taus[max(k - 1, 0)]
    hi = taus[min(k + 1, len(taus) - 1)]
    tau0, peak = golden_max(gap, float(lo), float(hi), tol=tol)
    if peak < -1e-6:
        raise NoSolutionError(
            "list-2 bound branches neither cross nor touch within 1e-6"
        )
    return tau0


def abl_list2(tau: float, grid: int = DEFAULT_LP2_GRID) -> float:
    """List-size-2 rate bound: the second LP bound below the branch point,
    the sphere-constrained branch above it."""
    tau = float(tau)
    if not 0.0 < tau < 0.25:
        raise DomainError(f"tau must lie in (0, 1/4), got {tau}")
    if tau <= abl_branch_point(grid=grid):
        return r_lp2(2.0 * tau, grid=grid)[0]
    return _abl_second_branch(tau)


def _invert_decreasing(f, target: float, lo: float, hi: float, tol: float = 1e-12):
    """Largest x in [lo, hi] with f(x) >= target, f nonincreasing."""
    if f(hi) >= target:
        return hi
    if f(lo) < target:
        raise NoSolutionError("target rate out of range")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) >= target:
            lo = mid
        else:
            hi = mid
    return lo


def lp1_tau(R: float) -> float:
    """List-1 radius bound from the first LP bound: delta_lp1(R) / 2."""
    return 0.5 * delta_lp1(R)


def lp2_tau(R: float, grid: int = DEFAULT_LP2_GRID) -> float:
    """List-1 radius bound from the second LP bound: largest tau with
    r_lp2(2 tau) >= R."""
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {R}")
    return _invert_decreasing(lambda t: r_lp2(2.0 * t, grid=grid)[0], R, 1e-9, 0.25)


def abl2_tau(R: float, grid: int = DEFAULT_LP2_GRID) -> float:
    """List-2 radius bound: largest tau with abl_list2(tau) >= R."""
    R = float(R)
    if not 0.0 < R < 1.0:
        raise DomainError(f"rate must lie in (0, 1), got {R}")
    return _invert_decreasing(lambda t: abl_list2(t, grid=grid), R, 1e-9, 0.25 - 1e-12)
