"""Exact small-scale combinatorial oracles.

Everything here is computed in integer or rational arithmetic: Chebyshev
and average radii of explicit word sets, joint types and their weight
marginals, the average-radius functional on types, and the integer/region
identities behind the explicit corollaries.  Codewords are stored as
integers whose most significant bit is the first coordinate, so integer
order coincides with lexicographic order of the 0/1 strings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import DomainError, SizeLimitError

__all__ = [
    "BinaryCode",
    "JointType",
    "avg_joint_type",
    "avg_radius_of_type",
    "average_radius",
    "bernoulli_mixture_type",
    "chebyshev_radius",
    "check_g1_max",
    "check_sum_identity",
    "check_tail_inequality",
    "joint_type",
    "load_code",
    "majority_center",
    "tau_list",
    "verify_monotonicity_region",
    "weight_marginal_exact",
]

MAX_EXHAUSTIVE_N = 24
MAX_AVG_TYPE_SIZE = 14
MAX_AVG_TYPE_L = 5


def _validate_words(words, n):
    if not 1 <= n:
        raise DomainError(f"blocklength must be positive, got {n}")
    for w in words:
        if not 0 <= w < (1 << n):
            raise DomainError(f"word {w} does not fit in {n} coordinates")


@dataclass(frozen=True)
class BinaryCode:
    """Explicit code: distinct length-n words in strictly increasing
    lexicographic order."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_EXHAUSTIVE_N:
            raise SizeLimitError(
                f"blocklength must lie in [1, {MAX_EXHAUSTIVE_N}], got {self.n}"
            )
        if not self.words:
            raise DomainError("code must contain at least one word")
        _validate_words(self.words, self.n)
        for a, b in zip(self.words, self.words[1:]):
            if a >= b:
                raise DomainError("code words must be distinct and sorted")

    @classmethod
    def from_strings(cls, lines) -> "BinaryCode":
        """Build from 0/1 strings of constant length; sorts on load."""
        cleaned = [ln.strip() for ln in lines if ln.strip()]
        if not cleaned:
            raise DomainError("no code words given")
        n = len(cleaned[0])
        words = []
        for ln in cleaned:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise DomainError(f"bad code word {ln!r}")
            words.append(int(ln, 2))
        words.sort()
        return cls(n=n, words=tuple(words))

    def to_strings(self) -> list[str]:
        return [format(w, f"0{self.n}b") for w in self.words]

    def shifted(self, x: int) -> "BinaryCode":
        """Translate by XOR with x (a Hamming-space isometry)."""
        return BinaryCode(n=self.n, words=tuple(sorted(w ^ x for w in self.words)))

    @classmethod
    def random(cls, rng, n: int, size: int) -> "BinaryCode":
        if size > 1 << n:
            raise DomainError(f"cannot pick {size} distinct words of length {n}")
        words = rng.sample(range(1 << n), size)
        return cls(n=n, words=tuple(sorted(words)))


def load_code(path) -> BinaryCode:
    """Read a code file: one 0/1 word per line, constant length."""
    with open(path, encoding="ascii") as fh:
        return BinaryCode.from_strings(fh.readlines())


def _popcount_table(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        pc[1 << i : 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


def chebyshev_radius(words, n: int) -> int:
    """Radius of the smallest Hamming ball containing all words: exhaustive
    over 2^n centers for n <= 24, branch and bound over column classes for
    at most 8 words otherwise."""
    words = list(words)
    if not words:
        raise DomainError("need at least one word")
    _validate_words(words, n)
    if len(set(words)) == 1:
        return 0
    if n <= MAX_EXHAUSTIVE_N:
        pc = _popcount_table(n)
        centers = np.arange(1 << n, dtype=np.uint32)
        worst = np.zeros(1 << n, dtype=np.uint8)
        for w in words:
            np.maximum(worst, pc[centers ^ np.uint32(w)], out=worst)
        return int(worst.min())
    if len(set(words)) <= 8:
        return _chebyshev_bnb(sorted(set(words)), n)
    raise SizeLimitError(
        f"exhaustive center search capped at n = {MAX_EXHAUSTIVE_N}; "
        "branch and bound needs at most 8 distinct words"
    )


def _chebyshev_bnb(words: list[int], n: int) -> int:
    """Exact branch and bound: group coordinates into identical-column
    classes and choose how many ones the center places in each class."""
    m = len(words)
    classes: dict[int, int] = {}
    for pos in range(n):
        mask = 0
        for i, w in enumerate(words):
            if (w >> pos) & 1:
                mask |= 1 << i
        classes[mask] = classes.get(mask, 0) + 1
    items = sorted(classes.items(), key=lambda kv: -kv[1])
    ncls = len(items)
    # remaining pairwise-difference suffix: any center adds at least this
    # much to d_i + d_k over the remaining classes
    pair_idx = list(itertools.combinations(range(m), 2))
    suffix = [[0] * len(pair_idx) for _ in range(ncls + 1)]
    for c in range(ncls - 1, -1, -1):
        mask, cnt = items[c]
        for p, (i, k) in enumerate(pair_idx):
            differ = ((mask >> i) & 1) != ((mask >> k) & 1)
            suffix[c][p] = suffix[c + 1][p] + (cnt if differ else 0)

    # majority-vote incumbent
    best = 0
    dists = [0] * m
    for mask, cnt in items:
        ones = bin(mask).count("1")
        k = cnt if 2 * ones > m else 0
        for i in range(m):
            dists[i] += (cnt - k) if (mask >> i) & 1 else k
    best = max(dists)

    def lower_bound(c, d):
        lb = max(d)
        for p, (i, k) in enumerate(pair_idx):
            lb = max(lb, -(-(d[i] + d[k] + suffix[c][p]) // 2))
        return lb

    def dfs(c, d):
        nonlocal best
        if lower_bound(c, d) >= best:
            return
        if c == ncls:
            best = min(best, max(d))
            return
        mask, cnt = items[c]
        ones = [(mask >> i) & 1 for i in range(m)]
        ks = sorted(range(cnt + 1), key=lambda k: abs(2 * k - cnt))
        for k in ks:
            nd = [
                d[i] + ((cnt - k) if ones[i] else k)
                for i in range(m)
            ]
            dfs(c + 1, nd)

    dfs(0, [0] * m)
    return best


def majority_center(words, n: int) -> int:
    """Per-coordinate majority vote center, ties broken toward bit 0."""
    words = list(words)
    if not words:
        raise DomainError("need at least one word")
    _validate_words(words, n)
    m = len(words)
    center = 0
    for pos in range(n):
        ones = sum((w >> pos) & 1 for w in words)
        if 2 * ones > m:
            center |= 1 << pos
    return center


def average_radius(words, n: int) -> Fraction:
    """Minimum over centers of the mean distance to the words (exact).

    The per-coordinate majority vote attains the minimum: each coordinate
    contributes min(#ones, #zeros) mismatches regardless of tie-breaking.
    """
    words = list(words)
    if not words:
        raise DomainError("need at least one word")
    _validate_words(words, n)
    m = len(words)
    total = 0
    for pos in range(n):
        ones = sum((w >> pos) & 1 for w in words)
        total += min(ones, m - ones)
    return Fraction(total, m)


def tau_list(code: BinaryCode, L: int) -> Fraction:
    """Exact list-L decoding radius of an explicit code:
    (min radius over all (L+1)-subsets minus 1) / n."""
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    if len(code.words) < L + 1:
        raise DomainError(f"code needs at least {L + 1} words")
    if comb(len(code.words), L + 1) > 500_000:
        raise SizeLimitError("too many subsets to enumerate")
    best = None
    for sub in itertools.combinations(code.words, L + 1):
        r = chebyshev_radius(sub, code.n)
        if best is None or r < best:
            best = r
    return Fraction(best - 1, code.n)


@dataclass(frozen=True)
class JointType:
    """Probability distribution on the 2^L column patterns of an L-word
    stack, exact.  Pattern v is indexed as an integer whose bit i is the
    i-th word's value, so popcount gives the pattern weight."""

    L: int
    t: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.t) != 1 << self.L:
            raise DomainError("type must have 2^L entries")
        if any(v < 0 for v in self.t):
            raise DomainError("type entries must be nonnegative")
        if sum(self.t) != 1:
            raise DomainError("type entries must sum to 1 exactly")

    def weight_marginal(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * (self.L + 1)
        for v, tv in enumerate(self.t):
            out[v.bit_count()] += tv
        return tuple(out)

    def sup_distance(self, other: "JointType") -> Fraction:
        if other.L != self.L:
            raise DomainError("types must share the same L")
        return max(abs(a - b) for a, b in zip(self.t, other.t))

    def permuted(self, sigma) -> "JointType":
        """Relabel words by the permutation sigma (sigma[i] = new index)."""
        out = [Fraction(0)] * (1 << self.L)
        for v, tv in enumerate(self.t):
            nv = 0
            for i in range(self.L):
                if (v >> i) & 1:
                    nv |= 1 << sigma[i]
            out[nv] += tv
        return JointType(L=self.L, t=tuple(out))

    def is_symmetric(self) -> bool:
        ref = {}
        for v, tv in enumerate(self.t):
            w = v.bit_count()
            if w in ref:
                if ref[w] != tv:
                    return False
            else:
                ref[w] = tv
        return True


def joint_type(words, n: int, L: int | None = None) -> JointType:
    """Empirical column-pattern distribution of an ordered word list.

    The list must be in nondecreasing lexicographic order (repeats allowed
    for the multiset variant)."""
    words = list(words)
    if L is None:
        L = len(words)
    if L != len(words):
        raise DomainError("L must equal the number of words")
    _validate_words(words, n)
    for a, b in zip(words, words[1:]):
        if a > b:
            raise DomainError("words must be given in lexicographic order")
    counts = [0] * (1 << L)
    for pos in range(n):
        v = 0
        for i, w in enumerate(words):
            if (w >> pos) & 1:
                v |= 1 << i
        counts[v] += 1
    return JointType(L=L, t=tuple(Fraction(c, n) for c in counts))


def _check_avg_type_limits(code: BinaryCode, L: int):
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    if len(code.words) < L:
        raise DomainError(f"code needs at least {L} words")
    if len(code.words) > MAX_AVG_TYPE_SIZE or L > MAX_AVG_TYPE_L:
        raise SizeLimitError(
            f"average joint type capped at |C| <= {MAX_AVG_TYPE_SIZE}, "
            f"L <= {MAX_AVG_TYPE_L}"
        )


def avg_joint_type(code: BinaryCode, L: int) -> JointType:
    """Average of the joint types of all L-subsets over all L! relabelings.

    The relabeling average of a type depends only on its weight marginal
    (each weight class is smeared uniformly over its orbit), so the subset
    enumeration accumulates column-weight counts; the result is symmetric
    by construction.
    """
    _check_avg_type_limits(code, L)
    n = code.n
    total_w = [0] * (L + 1)
    for sub in itertools.combinations(code.words, L):
        for pos in range(n):
            w = sum((word >> pos) & 1 for word in sub)
            total_w[w] += 1
    subsets = comb(len(code.words), L)
    t = [Fraction(0)] * (1 << L)
    for v in range(1 << L):
        w = v.bit_count()
        t[v] = Fraction(total_w[w], n * subsets * comb(L, w))
    return JointType(L=L, t=tuple(t))


def weight_marginal_exact(code: BinaryCode, L: int) -> tuple[Fraction, ...]:
    """Column-hypergeometric weight marginal of the average joint type:
    p_w = (1/n) sum_i C(M_i, w) C(M - M_i, L - w) / C(M, L) with M_i the
    number of ones in column i."""
    _check_avg_type_limits(code, L)
    n, M = code.n, len(code.words)
    out = [Fraction(0)] * (L + 1)
    for pos in range(n):
        mi = sum((w >> pos) & 1 for w in code.words)
        for w in range(L + 1):
            out[w] += Fraction(comb(mi, w) * comb(M - mi, L - w), comb(M, L))
    return tuple(v / n for v in out)


def bernoulli_mixture_type(code: BinaryCode, L: int) -> JointType:
    """Mixture over columns of product Bernoulli types at the column
    densities, exact.  Defined for any code size (unlike the average type,
    which enumerates L-subsets)."""
    if not isinstance(L, int) or L < 1:
        raise DomainError(f"list size must be a positive integer, got {L}")
    if L > MAX_AVG_TYPE_L:
        raise SizeLimitError(f"mixture type capped at L <= {MAX_AVG_TYPE_L}")
    n, M = code.n, len(code.words)
    t = [Fraction(0)] * (1 << L)
    for pos in range(n):
        lam = Fraction(sum((w >> pos) & 1 for w in code.words), M)
        for v in range(1 << L):
            w = v.bit_count()
            t[v] += lam**w * (1 - lam) ** (L - w)
    return JointType(L=L, t=tuple(v / n for v in t))


def avg_radius_of_type(T: JointType, j: int) -> Fraction:
    """Average-radius functional on a type with j pinned all-zero rows:
    (E[W] - E[max(0, 2W - L - j)]) / (L + j), W the pattern weight."""
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"shift count must be a nonnegative integer, got {j}")
    marginal = T.weight_marginal()
    ew = sum(w * p for w, p in enumerate(marginal))
    excess = sum(max(0, 2 * w - T.L - j) * p for w, p in enumerate(marginal))
    return (ew - excess) / (T.L + j)


def check_sum_identity(n: int, ell: int) -> bool:
    """Exact check of sum_{u <= ell} (n - 2u) C(n, u) = n C(n-1, ell)."""
    if not (isinstance(n, int) and isinstance(ell, int) and 0 <= ell <= n <= 64):
        raise DomainError("need integers 0 <= ell <= n <= 64")
    lhs = sum((n - 2 * u) * comb(n, u) for u in range(ell + 1))
    return lhs == n * comb(n - 1, ell)


def check_tail_inequality(a: int) -> bool:
    """Exact check that sum_{u < a} (2a+1-2u) C(2a+1, u) equals
    (2a+1) C(2a, a-1) and is strictly below (2a+1) C(2a+1, a)."""
    if not isinstance(a, int) or a < 1:
        raise DomainError(f"need a positive integer, got {a}")
    n = 2 * a + 1
    lhs = sum((n - 2 * u) * comb(n, u) for u in range(a))
    return lhs == n * comb(n - 1, a - 1) and lhs < n * comb(n, a)


def verify_monotonicity_region(grid_step: float = 1e-3, margin: float = 1e-6):
    """Scan the region {0 <= a1 <= 1, 0 <= a2 <= a1(1-a1)} for violations of
    the two-variable log inequality that makes the list-3 maximizer
    monotone:

        -2 log((1-a2)/a1) (a1^2 - a2^2)
            >= (2 a1^2 - 4/3 (a1^3 - a2^3) - 1) log((1-a2)/a2 * a1/(1-a1))

    Interior points are scanned on the grid with a small margin excluding
    the singular boundaries; the a2 = 0 slice reduces to
    2 a1^2 - 4/3 a1^3 - 1 <= 0 and is checked in that form.  Returns the
    list of violating (a1, a2) pairs (expected empty).
    """
    if not 0.0 < grid_step <= 1e-2:
        raise DomainError("grid step must lie in (0, 1e-2]")
    violations: list[tuple[float, float]] = []

    a1s = np.arange(grid_step, 1.0 - margin, grid_step)
    a1s = a1s[a1s >= margin]
    for a1 in a1s:
        top = a1 * (1.0 - a1)
        a2s = np.arange(grid_step, top, grid_step)
        a2s = np.append(a2s, top)  # include the upper boundary slice
        a2s = a2s[a2s >= margin]
        if a2s.size == 0:
            continue
        with np.errstate(divide="ignore"):
            lhs = -2.0 * np.log2((1.0 - a2s) / a1) * (a1 * a1 - a2s * a2s)
            bracket = 2.0 * a1 * a1 - (4.0 / 3.0) * (a1**3 - a2s**3) - 1.0
            rhs = bracket * np.log2((1.0 - a2s) / a2s * a1 / (1.0 - a1))
        bad = lhs < rhs - 1e-12
        for a2 in a2s[bad]:
            violations.append((float(a1), float(a2)))

    # a2 = 0 slice, reduced form
    for a1 in a1s:
        if 2.0 * a1 * a1 - (4.0 / 3.0) * a1**3 - 1.0 > 1e-12:
            violations.append((float(a1), 0.0))
    return violations


def check_g1_max(L: int, x_grid) -> bool:
    """For odd L: the j = 1 average-radius polynomial dominates every
    admissible j on the given grid, and the exact strict sandwich
    P[W > a+1] < value at 1/2 < P[W >= a+1] holds in rational arithmetic
    (W ~ Bino(L, 1/2), L = 2a + 1)."""
    from .core import admissible_j, avg_radius_poly

    if not isinstance(L, int) or L % 2 == 0 or not 3 <= L <= 15:
        raise DomainError(f"need odd L in [3, 15], got {L}")
    for x in x_grid:
        g1 = avg_radius_poly(L, 1, float(x))
        for j in admissible_j(L):
            if avg_radius_poly(L, j, float(x)) > g1 + 1e-12:
                return False
    a = (L - 1) // 2
    half = Fraction(1, 2)
    g1_half = avg_radius_poly(L, 1, half)
    tail_ge = Fraction(sum(comb(L, w) for w in range(a + 1, L + 1)), 2**L)
    tail_gt = Fraction(sum(comb(L, w) for w in range(a + 2, L + 1)), 2**L)
    return tail_gt < g1_half < tail_ge
