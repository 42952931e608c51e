"""Content statistics and conditional moments of the alpha-content of the next box.

``s_{r,alpha}(lam)`` is the r-th moment of the alpha-content of the box that
the growth process adds to ``lam``. It is available three ways: directly from
the transition probabilities, from the closed forms for ``r <= 4``, and from
the Laurent expansion of the transition measure's Cauchy transform
``prod_i (z - y_i) / prod_k (z - x_k)`` in the corner coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

import numpy as np

from kerov.errors import DomainError, ResourceBoundError
from kerov.growth import up_distribution
from kerov.measures import as_alpha, jack_weight, plancherel_weight
from kerov.partitions import (
    Partition,
    addable_corners,
    alpha_content,
    boxes,
    conjugate,
    multiplicity,
    partitions_of,
    removable_corners,
)
from kerov.report import CheckReport, FAIL

EXACT_SUM_BOUND = 30


def d_k(lam: Partition, k: int, alpha=1) -> Fraction:
    """``sum_x c_alpha(x)^k`` over the boxes of ``lam``."""
    alpha = as_alpha(alpha)
    return sum((alpha_content(x, alpha) ** k for x in boxes(lam)), Fraction(0))


def d_rho(lam: Partition, rho: Partition, alpha=1) -> Fraction:
    return prod((d_k(lam, i, alpha) ** multiplicity(rho, i) for i in set(rho)), start=Fraction(1))


@dataclass(frozen=True)
class ContentStats:
    lam: Partition
    alpha: Fraction
    d: dict[int, Fraction]
    d_rho: dict[Partition, Fraction] = field(default_factory=dict)


def content_stats(lam: Partition, alpha=1, kmax: int = 4, rhos: tuple[Partition, ...] = ()) -> ContentStats:
    alpha = as_alpha(alpha)
    d = {k: d_k(lam, k, alpha) for k in range(1, kmax + 1)}
    return ContentStats(tuple(lam), alpha, d, {tuple(r): d_rho(lam, r, alpha) for r in rhos})


def s_moment_bruteforce(lam: Partition, r: int, alpha=1) -> Fraction:
    alpha = as_alpha(alpha)
    dist = up_distribution(lam, alpha).targets
    return sum((p * alpha_content(x, alpha) ** r for x, (_, p) in zip(addable_corners(lam), dist)), Fraction(0))


def s_moment_closed(lam: Partition, r: int, alpha=1) -> Fraction:
    """Closed forms for ``r = 1..4``; higher moments are not available in closed form here."""
    alpha = as_alpha(alpha)
    n = sum(lam)
    if r == 1:
        return Fraction(0)
    if r == 2:
        return alpha * n
    d1 = d_k(lam, 1, alpha)
    if r == 3:
        return 2 * alpha * d1 + alpha * (alpha - 1) * n
    if r == 4:
        d2 = d_k(lam, 2, alpha)
        return 3 * alpha * d2 + 3 * alpha * (alpha - 1) * d1 + alpha**2 * comb(n + 1, 2) + alpha * (alpha - 1) ** 2 * n
    raise DomainError(f"no closed form for r={r}; use s_moment_bruteforce")


def corner_coordinates(lam: Partition, alpha=1) -> tuple[list[Fraction], list[Fraction]]:
    """Minima ``x_k`` (alpha-contents of addable boxes) and maxima ``y_i = alpha*col - row`` (removable boxes)."""
    alpha = as_alpha(alpha)
    xs = [alpha_content(b, alpha) for b in addable_corners(lam)]
    ys = [alpha * c - r for r, c in removable_corners(lam)]
    return xs, ys


def s_moment_laurent(lam: Partition, r: int, alpha=1) -> Fraction:
    """``[w^r] prod_i (1 - y_i w) / prod_k (1 - x_k w)``."""
    xs, ys = corner_coordinates(lam, alpha)
    series = [Fraction(1)] + [Fraction(0)] * r
    for y in ys:
        for t in range(r, 0, -1):
            series[t] -= y * series[t - 1]
    for x in xs:
        for t in range(1, r + 1):
            series[t] += x * series[t - 1]
    return series[r]


def _weight(lam: Partition, alpha: Fraction) -> Fraction:
    return plancherel_weight(lam) if alpha == 1 else jack_weight(lam, alpha)


def _check_sum_bound(n: int, bound: int) -> None:
    if n > bound:
        raise ResourceBoundError(f"exact summation over partitions of {n} exceeds the bound {bound}")


def jack_expect_s(n: int, r: int, alpha=1, bound: int = EXACT_SUM_BOUND) -> Fraction:
    """Exact ``E s_{r,alpha}(lam)`` for ``lam`` from Jack_alpha measure on partitions of ``n``."""
    alpha = as_alpha(alpha)
    _check_sum_bound(n, bound)
    return sum((_weight(lam, alpha) * s_moment_bruteforce(lam, r, alpha) for lam in partitions_of(n)), Fraction(0))


def plancherel_expect_s(n: int, r: int, bound: int = EXACT_SUM_BOUND) -> Fraction:
    return jack_expect_s(n, r, 1, bound)


def jack_expect_d(n: int, rho: Partition, alpha=1, bound: int = EXACT_SUM_BOUND) -> Fraction:
    alpha = as_alpha(alpha)
    _check_sum_bound(n, bound)
    return sum((_weight(lam, alpha) * d_rho(lam, rho, alpha) for lam in partitions_of(n)), Fraction(0))


def catalan(r: int) -> int:
    return comb(2 * r, r) // (r + 1)


def _loglog_slope(xs, ys) -> float | None:
    pts = [(math.log(x), math.log(abs(y))) for x, y in zip(xs, ys) if y != 0]
    if len(pts) < 2:
        return None
    return float(np.polyfit([p[0] for p in pts], [p[1] for p in pts], 1)[0])


def moment_bound_check(
    j_list, r: int, alpha=1, samples: int = 20000, seed: int = 0, exact_up_to: int = 12, slope_tolerance: float = 0.1
) -> CheckReport:
    """Empirical ``E(Y_{j+1} - Y_j)^{2r} / j^r`` over a grid of ``j``.

    Small ``j`` are summed exactly over Jack_alpha measure; larger ``j`` are
    estimated from sampled growth paths. The report passes when the fitted
    log-log growth exponent of the moment does not exceed ``r`` by more than
    ``slope_tolerance``.
    """
    from kerov.sampler import grow

    alpha = as_alpha(alpha)
    j_list = sorted(set(int(j) for j in j_list))
    report = CheckReport("increment-moment-growth", alpha=alpha, mu=None)
    rows = {}
    mc = [j for j in j_list if j > exact_up_to]
    if mc:
        added_rows, added_cols = grow(max(mc) + 1, float(alpha), samples, seed)
        contents = float(alpha) * (added_cols - 1) - (added_rows - 1)
    for j in j_list:
        if j <= exact_up_to:
            value = float(jack_expect_s(j, 2 * r, alpha))
            method = "exact"
        else:
            value = float(np.mean(contents[:, j] ** (2 * r)))
            method = "monte-carlo"
        rows[j] = {"value": value, "ratio": value / j**r, "method": method}
        report.checked += 1
    slope = _loglog_slope(j_list, [rows[j]["value"] for j in j_list])
    report.details = {"by_j": rows, "loglog_slope": slope, "r": r}
    if slope is not None and slope > r + slope_tolerance:
        report.status = FAIL
        report.counterexample = {"loglog_slope": slope, "allowed": r + slope_tolerance}
    return report


def tail_diagnostic(n: int, alpha=1, samples: int = 100000, seed: int = 0, max_frequency: float = 1e-3) -> CheckReport:
    """Frequency of ``lam_1 >= 2e sqrt(n/alpha)`` or ``lam'_1 >= 2e sqrt(alpha n)`` among sampled partitions."""
    from kerov.sampler import grow

    alpha = as_alpha(alpha)
    a = float(alpha)
    row_cut = 2 * math.e * math.sqrt(n / a)
    col_cut = 2 * math.e * math.sqrt(a * n)
    added_rows, added_cols = grow(n, a, samples, seed)
    first_row = added_cols.max(axis=1)
    first_col = added_rows.max(axis=1)
    hits = int(np.count_nonzero((first_row >= row_cut) | (first_col >= col_cut)))
    freq = hits / samples
    report = CheckReport("tail-diagnostic", n=n, alpha=alpha, checked=samples)
    report.details = {
        "row_threshold": row_cut,
        "column_threshold": col_cut,
        "hits": hits,
        "frequency": freq,
        "max_first_row": int(first_row.max()),
        "max_first_column": int(first_col.max()),
    }
    if freq > max_frequency:
        report.status = FAIL
        report.counterexample = {"frequency": freq, "allowed": max_frequency}
    return report


def d_growth_diagnostic(rho: Partition, ns=(10, 20, 30), alpha=1, tolerance: float = 0.1) -> CheckReport:
    """Exact ``E d_rho`` at a few sizes; passes when its growth exponent is at most ``l(rho) + |rho|/2``."""
    alpha = as_alpha(alpha)
    rho = tuple(rho)
    k, h = len(rho), sum(rho)
    values = {n: jack_expect_d(n, rho, alpha) for n in ns}
    ratios = {n: float(v) / n ** (k + h / 2) for n, v in values.items()}
    slope = _loglog_slope(list(ns), [float(values[n]) for n in ns])
    report = CheckReport("d-rho-growth", alpha=alpha, mu=rho, checked=len(ns))
    report.details = {"expectations": values, "ratios": ratios, "loglog_slope": slope, "exponent": k + h / 2}
    if slope is not None and slope > k + h / 2 + tolerance:
        report.status = FAIL
        report.counterexample = {"loglog_slope": slope}
    return report


def closed_form_check(n: int, alpha) -> CheckReport:
    """Closed forms and the Laurent route against brute force for every ``lam`` of size ``n``, ``r <= 4``."""
    from kerov.report import compare

    alpha = as_alpha(alpha)

    def cases():
        for lam in partitions_of(n):
            for r in range(1, 5):
                brute = s_moment_bruteforce(lam, r, alpha)
                yield {"lam": lam, "r": r, "route": "closed"}, s_moment_closed(lam, r, alpha), brute
                yield {"lam": lam, "r": r, "route": "laurent"}, s_moment_laurent(lam, r, alpha), brute

    name = "closed-form-moments"
    return compare(name, cases(), n=n, alpha=alpha)


def transpose_symmetry(lam: Partition, r: int) -> Fraction:
    """``s_r(lam) - (-1)^r s_r(lam')`` at alpha=1; zero because transposing negates every content."""
    return s_moment_bruteforce(lam, r, 1) - (-1) ** r * s_moment_bruteforce(conjugate(lam), r, 1)
