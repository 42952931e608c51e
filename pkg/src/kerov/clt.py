"""Monte Carlo experiments for the normalised transposition character ratio.

``W_alpha(lam) = (alpha n(lam') - n(lam)) / sqrt(alpha C(n,2))``, where the numerator
is the alpha-content sum of ``lam``. Along a growth path the numerator is a
martingale whose increments are the alpha-contents of the added boxes, which is
what the sampler records.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np
from scipy import special, stats

from kerov.errors import DomainError
from kerov.measures import as_alpha, jack_distribution
from kerov.partitions import Partition, conjugate, n_stat
from kerov.report import FAIL, CheckReport
from kerov.sampler import content_checkpoints, variance_sums

MIN_SAMPLES = 1000
# Two-sided Kolmogorov critical coefficient at the 1% level.
KS_CRITICAL_1PCT = 1.628

BINOMIAL = "binomial"
SHIFTED_BINOMIAL = "shifted-binomial"
LINEAR = "linear"
NORMALIZATIONS = (BINOMIAL, SHIFTED_BINOMIAL, LINEAR)


def normal_cdf(x):
    """Standard normal CDF, ``erfc(-x/sqrt 2)/2``; accepts scalars or arrays."""
    out = 0.5 * special.erfc(-np.asarray(x, dtype=float) / math.sqrt(2.0))
    return float(out) if np.ndim(out) == 0 else out


def ks_distance(samples) -> float:
    """``sup_x |F_hat(x) - Phi(x)|`` for the empirical CDF of ``samples``."""
    x = np.sort(np.asarray(samples, dtype=float))
    m = len(x)
    if m == 0:
        raise DomainError("need at least one sample")
    phi = normal_cdf(x)
    i = np.arange(1, m + 1)
    return float(max(np.max(i / m - phi), np.max(phi - (i - 1) / m)))


def ks_exact(law: dict[float, Fraction]) -> float:
    """Kolmogorov distance from ``Phi`` of a finitely supported law ``{value: probability}``."""
    acc = 0.0
    worst = 0.0
    for v in sorted(law):
        phi = normal_cdf(v)
        worst = max(worst, abs(phi - acc))
        acc += float(law[v])
        worst = max(worst, abs(acc - phi))
    return worst


def _scale_squared(n: int, normalization: str) -> Fraction:
    """Square of the denominator ``D`` in ``W = content_sum / (sqrt(alpha) D)``."""
    if n < 2:
        raise DomainError("W needs n >= 2")
    if normalization == BINOMIAL:
        return Fraction(comb(n, 2))
    if normalization == SHIFTED_BINOMIAL:
        if n < 3:
            raise DomainError("the shifted normalisation needs n >= 3")
        return Fraction(comb(n, 2) ** 2, comb(n - 1, 2))
    if normalization == LINEAR:
        return Fraction(n * n, 2)
    raise DomainError(f"unknown normalisation {normalization!r}")


def w_exact(lam: Partition, alpha=1, normalization: str = BINOMIAL) -> tuple[Fraction, Fraction]:
    """``(T, S)`` with ``W = T / sqrt(S)`` exactly: ``T`` is the alpha-content sum, ``S = alpha D^2``."""
    alpha = as_alpha(alpha)
    lam = tuple(lam)
    t = alpha * n_stat(conjugate(lam)) - n_stat(lam)
    return t, alpha * _scale_squared(sum(lam), normalization)


def w_statistic(lam: Partition, alpha=1, normalization: str = BINOMIAL) -> float:
    """``W_alpha(lam)``.

    The default divides by ``sqrt(alpha C(n,2))``. ``shifted-binomial`` rescales so
    that at alpha=1 it equals ``sqrt(C(n-1,2)) chi(12)/dim``; ``linear`` gives
    ``(n-1)/sqrt 2 * chi(12)/dim``. All three agree to first order in ``1/n``.
    """
    t, s = w_exact(lam, alpha, normalization)
    return float(t) / math.sqrt(s)


def w_law(n: int, alpha=1) -> dict[float, Fraction]:
    """Exact law of ``W_alpha`` under Jack_alpha measure (small ``n`` only)."""
    law: dict[float, Fraction] = {}
    for lam, p in jack_distribution(n, alpha).items():
        w = w_statistic(lam, alpha)
        law[w] = law.get(w, Fraction(0)) + p
    return law


@dataclass
class CltResult:
    n: int
    ks: float
    mean: float
    var: float
    l_delta: float


@dataclass
class CltExperiment:
    n_grid: list[int]
    alpha: Fraction
    samples: int
    seed: int
    delta: float
    results: dict[int, CltResult] = field(default_factory=dict)

    def rows(self) -> list[dict]:
        return [
            {"n": r.n, "alpha": self.alpha, "samples": self.samples, "ks": r.ks, "mean": r.mean, "var": r.var, "l_delta": r.l_delta}
            for r in (self.results[n] for n in self.n_grid)
        ]


def run_clt(n_grid, alpha=1, samples: int = 200_000, seed: int = 0, delta: float = 1.0, threads: int | None = None) -> CltExperiment:
    """Kolmogorov distance of sampled ``W_alpha`` from the normal law at each ``n``.

    Each sample is a single growth path read off at every ``n`` in the grid, so
    values at different ``n`` share randomness. ``l_delta`` is the Monte Carlo
    estimate of ``sum_j E|X_j|^(2+2 delta)`` with ``X_j`` the normalised increments.
    """
    alpha = as_alpha(alpha)
    grid = sorted(set(int(n) for n in n_grid))
    if samples < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples")
    if grid and grid[0] < 2:
        raise DomainError("W needs n >= 2")
    exp = CltExperiment(grid, alpha, samples, seed, float(delta))
    if not grid:
        return exp
    sums, psums = content_checkpoints(grid, float(alpha), samples, seed, power=2 + 2 * float(delta), threads=threads)
    for c, n in enumerate(grid):
        scale = float(alpha) * comb(n, 2)
        w = sums[:, c] / math.sqrt(scale)
        l_delta = float(np.mean(psums[:, c])) / scale ** (1 + float(delta))
        exp.results[n] = CltResult(n, ks_distance(w), float(np.mean(w)), float(np.var(w)), l_delta)
    return exp


def rate_fit(experiment) -> tuple[float, float]:
    """Least-squares fit ``KS(n) ~ A n^(-s)``; returns ``(s_hat, A)``.

    Accepts a ``CltExperiment`` or a mapping ``n -> KS``.
    """
    data = {n: r.ks for n, r in experiment.results.items()} if isinstance(experiment, CltExperiment) else dict(experiment)
    if len(data) < 2:
        raise DomainError("need at least two sizes to fit a rate")
    ns = sorted(data)
    slope, intercept = np.polyfit(np.log(ns), np.log([data[n] for n in ns]), 1)
    return float(-slope), float(math.exp(intercept))


def summary(experiment: CltExperiment) -> dict:
    s_hat, a = rate_fit(experiment) if len(experiment.results) >= 2 else (None, None)
    return {
        "alpha": experiment.alpha,
        "samples": experiment.samples,
        "seed": experiment.seed,
        "delta": experiment.delta,
        "n_grid": experiment.n_grid,
        "s_hat": s_hat,
        "rate_constant": a,
    }


@dataclass
class HaeuslerQuantities:
    n: int
    alpha: Fraction
    delta: float
    l_value: float
    n_term: Fraction | float
    certified_paths: int
    paths: int

    @property
    def certified(self) -> bool:
        return self.certified_paths == self.paths


def haeusler_grid(
    n_grid, alpha=1, delta: float = 1.0, paths: int = 1000, samples: int = 20000, seed: int = 0, threads: int | None = None
) -> dict[int, HaeuslerQuantities]:
    """``L_{n,2 delta}`` by Monte Carlo and the conditional-variance term ``N_{n,2 delta}`` along sampled paths.

    For ``N`` the sum ``sum_j s_2(lam(j-1)) / (alpha C(n,2))`` is accumulated in
    exact integer arithmetic along each of ``paths`` sampled paths. ``n_term`` is
    the exact ``Fraction(0)`` only if every path gives exactly 1; otherwise it is
    the empirical mean of ``|sum - 1|^(1+delta)``.
    """
    alpha = as_alpha(alpha)
    grid = sorted(set(int(n) for n in n_grid))
    if not grid:
        return {}
    if grid[0] < 2:
        raise DomainError("n must be at least 2")
    _, psums = content_checkpoints(grid, float(alpha), samples, seed, power=2 + 2 * float(delta), threads=threads)
    p, q = alpha.numerator, alpha.denominator
    scaled = variance_sums(grid, p, q, paths, seed + 1, threads=threads)
    out = {}
    for c, n in enumerate(grid):
        scale = float(alpha) * comb(n, 2)
        target = p * q * comb(n, 2)
        col = scaled[:, c]
        ok = int(np.count_nonzero(col == target))
        if ok == paths:
            n_term: Fraction | float = Fraction(0)
        else:
            devs = [abs(Fraction(int(v), target) - 1) for v in col]
            n_term = float(np.mean([float(d) ** (1 + float(delta)) for d in devs]))
        out[n] = HaeuslerQuantities(n, alpha, float(delta), float(np.mean(psums[:, c])) / scale ** (1 + float(delta)), n_term, ok, paths)
    return out


def haeusler_quantities(n: int, alpha=1, delta: float = 1.0, paths: int = 1000, samples: int = 20000, seed: int = 0):
    """``(L, N_term)`` at a single ``n``."""
    h = haeusler_grid([n], alpha, delta, paths, samples, seed)[n]
    return h.l_value, h.n_term


def l_exact(n: int, alpha=1, delta: int = 1) -> Fraction:
    """Exact ``L_{n,2 delta}`` for integer ``delta`` by summing over Jack_alpha measure at each level."""
    from kerov.moments import jack_expect_s

    alpha = as_alpha(alpha)
    if n < 2 or int(delta) != delta or delta < 0:
        raise DomainError("need n >= 2 and a nonnegative integer delta")
    r = 2 + 2 * int(delta)
    total = sum((jack_expect_s(j - 1, r, alpha) for j in range(1, n + 1)), Fraction(0))
    return total / (alpha * comb(n, 2)) ** (1 + int(delta))


def duality_check(n: int, alpha, samples: int = 20000, seed: int = 0, threads: int | None = None) -> CheckReport:
    """Two-sample comparison of ``W_alpha`` with ``-W_{1/alpha}`` at the 1% Kolmogorov critical value."""
    alpha = as_alpha(alpha)
    a, _ = content_checkpoints([n], float(alpha), samples, seed, threads=threads)
    b, _ = content_checkpoints([n], float(1 / alpha), samples, seed + 1, threads=threads)
    w_a = a[:, 0] / math.sqrt(float(alpha) * comb(n, 2))
    w_b = -b[:, 0] / math.sqrt(float(1 / alpha) * comb(n, 2))
    stat = float(stats.ks_2samp(w_a, w_b).statistic)
    critical = KS_CRITICAL_1PCT * math.sqrt(2.0 / samples)
    report = CheckReport("alpha-inverse-duality", n=n, alpha=alpha, checked=2 * samples)
    report.details = {"ks_two_sample": stat, "critical_1pct": critical}
    if stat >= critical:
        report.status = FAIL
        report.counterexample = {"ks_two_sample": stat, "critical_1pct": critical}
    return report
