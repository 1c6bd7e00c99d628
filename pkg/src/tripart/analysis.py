"""Numerics behind the state-space growth rate.

The number of DP states with 3k covered vertices is C(n-k, 2k): k anchor
vertices are forced, the other 2k are free choices among the n-k
remaining.  Summing over k gives the state-space size, and the usual
entropy bound C(m, r) <= exp(m f(r/m)) turns each term into
exp(2n g(gamma)) after the substitutions alpha = k/n,
beta = 2 alpha/(1 - alpha), gamma = (1 - 3 alpha)/(1 - alpha); note
beta = 1 - gamma and (n-k) f(beta) = 2n g(gamma).  Maximizing
g(gamma) = f(gamma)/(3 - gamma) over [0,1] yields the growth base
exp(2 g*) ~= 1.7549 at gamma* ~= 0.5698.

Everything here is either exact integer arithmetic or plain floats;
binomial logarithms go through exact big integers up to
LOG_BINOM_EXACT_LIMIT and log-gamma beyond, and the two paths are
cross-checked in tests on the overlap.
"""
from __future__ import annotations

import math
from typing import NamedTuple

LOG_BINOM_EXACT_LIMIT = 2000

# the three beta regions, with the nominal per-region root bounds the
# audit prints for comparison (not asserted: measured maxima land near
# exp(2 g(2/3)) ~= 1.726 and exp(2 g(1/3)) ~= 1.612 in the tails)
REGION_LABELS = ("beta<=1/3", "1/3<beta<2/3", "beta>=2/3")
REGION_NOMINAL = (1.22, 1.7549, 1.2)

CHAIN_CSV_HEADER = "n,k,alpha,beta,epsilon,gamma,f,g,log_binom_over_n"
GROWTH_CSV_HEADER = "n,sum,root,argmax_k,max_root"
AUDIT_CSV_HEADER = "region,k_lo,k_hi,argmax_k,max_root,nominal_root"


def binom(n: int, k: int) -> int:
    """Exact C(n, k); zero when k > n, error when either argument is negative."""
    return math.comb(n, k)


def state_space_sum(n: int) -> int:
    """Exact sum of C(n-k, 2k) for k = 1 .. n/3."""
    if n < 3 or n % 3:
        raise ValueError("n must be a positive multiple of 3")
    return sum(math.comb(n - k, 2 * k) for k in range(1, n // 3 + 1))


def entropy(gamma: float) -> float:
    """Natural-log entropy -g ln g - (1-g) ln(1-g), 0 at the endpoints."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("entropy argument must lie in [0, 1]")
    if gamma == 0.0 or gamma == 1.0:
        return 0.0
    return -gamma * math.log(gamma) - (1.0 - gamma) * math.log(1.0 - gamma)


def g_func(gamma: float) -> float:
    """entropy(gamma) / (3 - gamma), the per-vertex growth exponent half."""
    return entropy(gamma) / (3.0 - gamma)


class EntropyMax(NamedTuple):
    gamma_star: float
    g_star: float
    base: float


def maximize_g(tol: float = 1e-10) -> EntropyMax:
    """Maximum of g over [0,1] by golden-section search, to bracket width tol.

    g is unimodal on [0,1] with a singular derivative at the endpoints,
    so bracketing beats root-finding here.  The reported base exp(2 g*)
    is the growth rate of the dominant state-count term.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    lo, hi = 0.0, 1.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = g_func(x1), g_func(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = g_func(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = g_func(x1)
    gamma_star = (lo + hi) / 2.0
    g_star = g_func(gamma_star)
    return EntropyMax(gamma_star, g_star, math.exp(2.0 * g_star))


def log_binom(m: int, r: int) -> float:
    """ln C(m, r), exact big-integer path for m <= LOG_BINOM_EXACT_LIMIT."""
    if r < 0 or r > m:
        raise ValueError("need 0 <= r <= m")
    if m <= LOG_BINOM_EXACT_LIMIT:
        return math.log(math.comb(m, r))
    return (math.lgamma(m + 1.0) - math.lgamma(r + 1.0)
            - math.lgamma(m - r + 1.0))


class AnalysisPoint(NamedTuple):
    n: int
    k: int
    alpha: float
    beta: float
    epsilon: float
    gamma: float
    f_val: float
    g_val: float
    log_binom: float


def substitution_chain(k: int, n: int) -> AnalysisPoint:
    """All derived quantities for one (k, n) pair.

    alpha = k/n, beta = 2 alpha/(1-alpha), epsilon = 2 beta - 1,
    gamma = (1-3 alpha)/(1-alpha); beta and 1-gamma coincide, which is
    what lets the binomial exponent (n-k) f(beta) be rewritten as
    2n g(gamma).
    """
    if not 1 <= k <= n // 3:
        raise ValueError("need 1 <= k <= n/3")
    alpha = k / n
    beta = 2.0 * alpha / (1.0 - alpha)
    epsilon = 2.0 * beta - 1.0
    gamma = (1.0 - 3.0 * alpha) / (1.0 - alpha)
    return AnalysisPoint(
        n=n, k=k, alpha=alpha, beta=beta, epsilon=epsilon, gamma=gamma,
        f_val=entropy(gamma), g_val=g_func(gamma),
        log_binom=log_binom(n - k, 2 * k))


class GrowthRow(NamedTuple):
    n: int
    sum_value: int
    root: float
    argmax_k: int
    max_root: float


def growth_row(n: int) -> GrowthRow:
    """Exact state-count sum for one n, with its n-th root and peak term."""
    total = state_space_sum(n)
    ks = range(1, n // 3 + 1)
    argmax_k = max(ks, key=lambda k: log_binom(n - k, 2 * k))
    max_log = log_binom(n - argmax_k, 2 * argmax_k)
    return GrowthRow(
        n=n, sum_value=total, root=math.exp(math.log(total) / n),
        argmax_k=argmax_k, max_root=math.exp(max_log / n))


class RegionMax(NamedTuple):
    label: str
    k_lo: int
    k_hi: int
    argmax_k: int
    max_root: float
    nominal_root: float


def region_audit(n: int) -> tuple[RegionMax | None, ...]:
    """Per-region maxima of C(n-k,2k)^(1/n) over the three beta regions.

    beta = 2k/(n-k), so beta <= 1/3 is exactly 7k <= n and beta >= 2/3 is
    exactly 4k >= n; the integer comparisons avoid any float boundary
    fuzz.  A region containing no k (tiny n) comes back as None.  The
    nominal roots ride along for comparison only.
    """
    if n < 3 or n % 3:
        raise ValueError("n must be a positive multiple of 3")
    kmax = n // 3
    low = [k for k in range(1, kmax + 1) if 7 * k <= n]
    high = [k for k in range(1, kmax + 1) if 4 * k >= n]
    mid = [k for k in range(1, kmax + 1) if 7 * k > n and 4 * k < n]
    out: list[RegionMax | None] = []
    for label, ks, nominal in zip(REGION_LABELS, (low, mid, high), REGION_NOMINAL):
        if not ks:
            out.append(None)
            continue
        best = max(ks, key=lambda k: log_binom(n - k, 2 * k))
        root = math.exp(log_binom(n - best, 2 * best) / n)
        out.append(RegionMax(label, ks[0], ks[-1], best, root, nominal))
    return tuple(out)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def chain_csv(n: int) -> str:
    """The substitution table for k = 1 .. n/3, 12-significant-digit reals."""
    lines = [CHAIN_CSV_HEADER]
    for k in range(1, n // 3 + 1):
        p = substitution_chain(k, n)
        lines.append(",".join((
            str(p.n), str(p.k), _fmt(p.alpha), _fmt(p.beta), _fmt(p.epsilon),
            _fmt(p.gamma), _fmt(p.f_val), _fmt(p.g_val),
            _fmt(p.log_binom / n))))
    return "\n".join(lines) + "\n"


def growth_csv(n_max: int) -> str:
    """Growth table over n = 3, 6, ... up to n_max."""
    lines = [GROWTH_CSV_HEADER]
    for n in range(3, n_max + 1, 3):
        r = growth_row(n)
        lines.append(",".join((
            str(r.n), str(r.sum_value), _fmt(r.root), str(r.argmax_k),
            _fmt(r.max_root))))
    return "\n".join(lines) + "\n"


def audit_csv(n: int) -> str:
    """Region-audit table; absent regions keep their row with empty cells."""
    lines = [AUDIT_CSV_HEADER]
    for label, nominal, region in zip(REGION_LABELS, REGION_NOMINAL, region_audit(n)):
        if region is None:
            lines.append(f"{label},,,,,{_fmt(nominal)}")
        else:
            lines.append(",".join((
                region.label, str(region.k_lo), str(region.k_hi),
                str(region.argmax_k), _fmt(region.max_root),
                _fmt(region.nominal_root))))
    return "\n".join(lines) + "\n"
