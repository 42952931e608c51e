"""Kerov's growth process on Young's lattice and the martingales it carries.

Everything here is exact: conditional laws are obtained by summing over
covers or over complete growth paths with rational weights. ``mu`` always
denotes a partition of the final size ``n``; at level ``j`` the relevant
statistic is ``theta^{lam(j)}_{mu - 1^{n-j}}``, taken to be 0 when ``mu`` has
fewer than ``n - j`` parts equal to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from kerov.characters import character_table
from kerov.errors import DomainError
from kerov.measures import as_alpha, class_size, factorial, jack_weight, plancherel_weight, z_stat
from kerov.partitions import (
    EMPTY,
    GrowthPath,
    Partition,
    add_box,
    addable_corners,
    alpha_content,
    boxes,
    content,
    down_covers,
    multiplicity,
    partitions_of,
    remove_ones,
    syt_count,
    syt_enumerate,
)
from kerov.report import CheckReport, compare
from kerov.symfunc import c_prime_poly, psi_prime, theta, theta_transposition

JACK = "jack"
CHARACTER = "character"


@dataclass(frozen=True)
class TransitionDistribution:
    source: Partition
    targets: tuple[tuple[Partition, Fraction], ...]

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.targets)

    def total(self) -> Fraction:
        return sum((p for _, p in self.targets), Fraction(0))


@lru_cache(maxsize=None)
def _up(lam: Partition, alpha: Fraction) -> TransitionDistribution:
    # c_lam/c_Lam * psi' only involves the row and the column of the new box:
    # boxes left of it contribute (a a + l + 1)/(a a + l + a + 1),
    # boxes above it contribute (a a + l + a)/(a a + l + a + 1).
    conj = tuple(sum(1 for p in lam if p > c) for c in range(lam[0])) if lam else ()
    targets = []
    for r, c in addable_corners(lam):
        p = Fraction(1)
        for j in range(1, c):
            a = c - 1 - j
            l = (conj[j - 1] if j <= len(conj) else 0) - r
            p *= (alpha * a + l + 1) / (alpha * a + l + alpha + 1)
        for i in range(1, r):
            a = lam[i - 1] - c
            l = r - 1 - i
            p *= (alpha * a + l + alpha) / (alpha * a + l + alpha + 1)
        targets.append((add_box(lam, (r, c)), p))
    return TransitionDistribution(lam, tuple(targets))


def up_distribution(lam: Partition, alpha) -> TransitionDistribution:
    """One step of the growth process from ``lam``: ``P(lam -> Lam) = c_lam/c_Lam * psi'_{Lam/lam}``."""
    return _up(tuple(lam), as_alpha(alpha))


@lru_cache(maxsize=None)
def _down(lam: Partition, alpha: Fraction) -> TransitionDistribution:
    n = sum(lam)
    cp = c_prime_poly(lam, alpha)
    targets = tuple((tau, psi_prime(lam, tau, alpha) * cp / (alpha * n * c_prime_poly(tau, alpha))) for _, tau in down_covers(lam))
    return TransitionDistribution(lam, targets)


def down_distribution(lam: Partition, alpha) -> TransitionDistribution:
    """``P(lam -> tau) = psi'_{lam/tau} c'_lam / (alpha n c'_tau)``."""
    lam = tuple(lam)
    if not lam:
        raise DomainError("the empty partition has no down-transitions")
    return _down(lam, as_alpha(alpha))


def sample_path(n: int, alpha, seed: int) -> GrowthPath:
    """Draw one growth path of length ``n`` with exact transition weights.

    Uniforms come from ``numpy.random.default_rng(seed)`` and are converted
    to exact rationals before comparison with the cumulative weights.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    alpha = as_alpha(alpha)
    rng = np.random.default_rng(seed)
    shapes = [EMPTY]
    for _ in range(n):
        u = Fraction(float(rng.random()))
        acc = Fraction(0)
        targets = _up(shapes[-1], alpha).targets
        choice = targets[-1][0]
        for big, p in targets:
            acc += p
            if u < acc:
                choice = big
                break
        shapes.append(choice)
    return GrowthPath(tuple(shapes))


def path_probability(path: GrowthPath, alpha) -> Fraction:
    alpha = as_alpha(alpha)
    prob = Fraction(1)
    for j in range(path.n):
        prob *= _up(path[j], alpha).as_dict()[path[j + 1]]
    return prob


def stationarity_check(n: int, alpha) -> list[CheckReport]:
    """Jack_n pushed through Up is Jack_{n+1}; pushed through Down it is Jack_{n-1}."""
    alpha = as_alpha(alpha)
    reports = []
    pushed: dict[Partition, Fraction] = {}
    for lam in partitions_of(n):
        w = jack_weight(lam, alpha)
        for big, p in _up(lam, alpha).targets:
            pushed[big] = pushed.get(big, Fraction(0)) + w * p
    cases = (({"Lam": big}, pushed.get(big, Fraction(0)), jack_weight(big, alpha)) for big in partitions_of(n + 1))
    reports.append(compare("stationarity-up", cases, n=n, alpha=alpha))
    if n >= 1:
        pushed = {}
        for lam in partitions_of(n):
            w = jack_weight(lam, alpha)
            for tau, p in down_distribution(lam, alpha).targets:
                pushed[tau] = pushed.get(tau, Fraction(0)) + w * p
        cases = (({"tau": tau}, pushed.get(tau, Fraction(0)), jack_weight(tau, alpha)) for tau in partitions_of(n - 1))
        reports.append(compare("stationarity-down", cases, n=n, alpha=alpha))
    return reports


# -- the martingale Y_j ------------------------------------------------------


def _is_transposition_type(nu: Partition) -> bool:
    return len(nu) >= 1 and nu[0] == 2 and all(p == 1 for p in nu[1:])


def y_value(lam: Partition, mu: Partition, alpha=1, form: str = JACK) -> Fraction:
    """``Y_j`` at ``lam(j) = lam`` for the class/partition ``mu`` of size ``n >= j``.

    ``form="jack"`` uses ``theta^lam_{mu-1^{n-j}}(alpha)``; ``form="character"``
    (alpha = 1 only) uses ``|C_j| chi^lam(C_j) / dim(lam)`` from the
    Murnaghan-Nakayama table. Both vanish when ``mu - 1^{n-j}`` is undefined.
    """
    lam, mu = tuple(lam), tuple(mu)
    j, n = sum(lam), sum(mu)
    if j > n:
        raise DomainError("lam is larger than mu")
    if j == 0:
        return Fraction(0)
    nu = remove_ones(mu, n - j)
    if nu is None:
        return Fraction(0)
    if form == CHARACTER:
        if as_alpha(alpha) != 1:
            raise DomainError("the character form is only defined at alpha = 1")
        tab = character_table(j)
        return Fraction(class_size(nu) * tab.chi(lam, nu), tab.dim(lam))
    if form != JACK:
        raise DomainError(f"unknown form {form!r}")
    if _is_transposition_type(nu):
        return theta_transposition(lam, alpha)
    return theta(lam, nu, alpha)


@dataclass(frozen=True)
class MartingaleTrace:
    path: GrowthPath
    mu: Partition
    alpha: Fraction
    values: tuple[Fraction, ...]  # Y_1 .. Y_n


def y_trace(path: GrowthPath, mu: Partition, alpha=1, form: str = JACK) -> MartingaleTrace:
    mu = tuple(mu)
    if path.n != sum(mu):
        raise DomainError("path length must equal |mu|")
    alpha = as_alpha(alpha)
    vals = tuple(y_value(path[j], mu, alpha, form) for j in range(1, path.n + 1))
    return MartingaleTrace(path, mu, alpha, vals)


def martingale_check(j: int, mu: Partition, alpha=1, form: str = JACK) -> CheckReport:
    """For every ``lam`` of size ``j``: ``sum_Lam P(lam->Lam) Y_{j+1}(Lam) = Y_j(lam)``.

    Over the chain S_1 < ... < S_n with ``mu`` a cycle type, ``C cap S_j`` is
    the class of type ``mu - 1^{n-j}`` or empty, so the single-class
    hypothesis always holds here.
    """
    alpha = as_alpha(alpha)
    mu = tuple(mu)
    if not 1 <= j < sum(mu):
        raise DomainError("need 1 <= j < |mu|")

    def cases():
        for lam in partitions_of(j):
            lhs = sum((p * y_value(big, mu, alpha, form) for big, p in _up(lam, alpha).targets), Fraction(0))
            yield {"lam": lam, "j": j}, lhs, y_value(lam, mu, alpha, form)

    name = "character-martingale" if form == CHARACTER else "jack-martingale"
    return compare(name, cases(), n=sum(mu), alpha=alpha, mu=mu)


def conditional_increment_moment(lam: Partition, mu: Partition, alpha=1, power: int = 2, form: str = JACK) -> Fraction:
    """``E((Y_{j+1} - Y_j)^power | lam(j) = lam)`` with ``j = |lam| < |mu|``."""
    alpha = as_alpha(alpha)
    lam = tuple(lam)
    y = y_value(lam, mu, alpha, form)
    return sum((p * (y_value(big, mu, alpha, form) - y) ** power for big, p in _up(lam, alpha).targets), Fraction(0))


def conditional_second_moment(mu: Partition, lam: Partition, alpha=1, form: str | None = None) -> Fraction:
    """``E((Y_{j+1}-Y_j)^2 | rho(j) = lam)`` for the class ``mu``.

    At ``alpha = 1`` the character table is used unless ``form`` says otherwise.
    """
    alpha = as_alpha(alpha)
    if form is None:
        form = CHARACTER if alpha == 1 else JACK
    return conditional_increment_moment(lam, mu, alpha, 2, form)


def _falling(x: int, i: int) -> int:
    out = 1
    for t in range(i):
        out *= x - t
    return out


def conditional_expectation_given_top(lam: Partition, j: int, mu: Partition, alpha=1, form: str = JACK) -> Fraction:
    """``E(Y_j | lam(n) = lam)`` by summing over every growth path ending at ``lam``."""
    alpha = as_alpha(alpha)
    num = den = Fraction(0)
    for path in syt_enumerate(tuple(lam)):
        w = path_probability(path, alpha)
        num += w * y_value(path[j], mu, alpha, form)
        den += w
    return num / den


def conditional_expectation_closed(lam: Partition, j: int, mu: Partition, alpha=1, form: str = JACK) -> Fraction:
    """Closed forms: ``|C_j|/|C_n| Y_n`` (character form) or ``Y_n m_1(mu)_{(n-j)} / n_{(n-j)}``."""
    alpha = as_alpha(alpha)
    mu = tuple(mu)
    n = sum(mu)
    top = y_value(lam, mu, alpha, form)
    if form == CHARACTER:
        nu = remove_ones(mu, n - j)
        cj = class_size(nu) if nu is not None and j >= 1 else 0
        return Fraction(cj, class_size(mu)) * top
    return top * Fraction(_falling(multiplicity(mu, 1), n - j), _falling(n, n - j))


def conditional_expectation_check(n: int, mu: Partition, alpha=1, form: str = JACK) -> CheckReport:
    alpha = as_alpha(alpha)

    def cases():
        for lam in partitions_of(n):
            for j in range(1, n + 1):
                yield (
                    {"lam": lam, "j": j},
                    conditional_expectation_given_top(lam, j, mu, alpha, form),
                    conditional_expectation_closed(lam, j, mu, alpha, form),
                )

    name = "character-conditional-expectation" if form == CHARACTER else "jack-conditional-expectation"
    return compare(name, cases(), n=n, alpha=alpha, mu=tuple(mu))


def _level_weight(lam: Partition, alpha: Fraction) -> Fraction:
    return plancherel_weight(lam) if alpha == 1 else jack_weight(lam, alpha)


def increment_second_moment_expect(j: int, mu: Partition, alpha=1, form: str = JACK) -> Fraction:
    """``E(Y_j - Y_{j-1})^2`` under the growth process, summed exactly over level ``j-1``."""
    alpha = as_alpha(alpha)
    if j < 1:
        raise DomainError("j must be at least 1")
    return sum(
        (_level_weight(tau, alpha) * conditional_increment_moment(tau, mu, alpha, 2, form) for tau in partitions_of(j - 1)),
        Fraction(0),
    )


def increment_second_moment_closed(j: int, mu: Partition, alpha=1, form: str = JACK) -> Fraction:
    """``|C_j| - |C_{j-1}|`` (character form) or the Jack formula with ``z_{mu-1^{n-j}}``.

    Valid for ``j >= 2``.
    """
    alpha = as_alpha(alpha)
    mu = tuple(mu)
    n = sum(mu)
    if form == CHARACTER:
        size = lambda k: class_size(remove_ones(mu, n - k)) if remove_ones(mu, n - k) is not None else 0
        return Fraction(size(j) - size(j - 1))
    m1 = multiplicity(mu, 1)
    if m1 < n - j:
        return Fraction(0)
    nu = remove_ones(mu, n - j)
    return alpha ** (n - len(mu)) * factorial(j - 1) * (n - m1) / Fraction(z_stat(nu))


def increment_moment_check(n: int, mu: Partition, alpha=1, form: str = JACK) -> CheckReport:
    alpha = as_alpha(alpha)
    cases = (
        ({"j": j}, increment_second_moment_expect(j, mu, alpha, form), increment_second_moment_closed(j, mu, alpha, form))
        for j in range(2, n + 1)
    )
    name = "character-increment-variance" if form == CHARACTER else "jack-increment-variance"
    return compare(name, cases, n=n, alpha=alpha, mu=tuple(mu))


def square_martingale_check(n: int, alpha=1) -> CheckReport:
    """``Y_j^2 - alpha*C(j,2)`` is a martingale for ``mu = (2, 1^{n-2})``, checked at every ``lam``."""
    alpha = as_alpha(alpha)
    if n < 2:
        return CheckReport("square-martingale", n=n, alpha=alpha)
    mu = (2,) + (1,) * (n - 2)

    def cases():
        for j in range(1, n):
            for lam in partitions_of(j):
                lhs = sum(
                    (p * (y_value(big, mu, alpha) ** 2 - alpha * comb(j + 1, 2)) for big, p in _up(lam, alpha).targets),
                    Fraction(0),
                )
                yield {"lam": lam}, lhs, y_value(lam, mu, alpha) ** 2 - alpha * comb(j, 2)

    name = "square-martingale"
    return compare(name, cases(), n=n, alpha=alpha, mu=mu)


def kerov_constancy_check(j: int, alpha) -> CheckReport:
    """Mean 0 and variance ``alpha*j`` of the alpha-content of the next box, for every ``lam`` of size ``j``."""
    alpha = as_alpha(alpha)

    def cases():
        for lam in partitions_of(j):
            dist = _up(lam, alpha).targets
            new = [(alpha_content(addable, alpha), p) for addable, (_, p) in zip(addable_corners(lam), dist)]
            yield {"lam": lam, "moment": 1}, sum((p * x for x, p in new), Fraction(0)), Fraction(0)
            yield {"lam": lam, "moment": 2}, sum((p * x * x for x, p in new), Fraction(0)), alpha * j

    return compare("kerov-constancy", cases(), n=j, alpha=alpha)


def uniform_syt_check(lam: Partition) -> CheckReport:
    """At alpha=1, conditioned on the endpoint every path has probability ``1/f^lam``."""
    lam = tuple(lam)
    target = Fraction(1, syt_count(lam))
    total = plancherel_weight(lam)
    cases = (({"tableau": path.tableau()}, path_probability(path, 1) / total, target) for path in syt_enumerate(lam))
    return compare("uniform-syt", cases, n=sum(lam), alpha=Fraction(1), mu=lam)


def second_moment_level_check(j: int) -> CheckReport:
    """``E(Y_j^2) = |C_j| = C(j,2)`` for transpositions under Plancherel measure."""
    mu = (2,) + (1,) * (j - 2) if j >= 2 else (1,)
    lhs = sum((plancherel_weight(lam) * y_value(lam, mu, 1, CHARACTER) ** 2 for lam in partitions_of(j)), Fraction(0))
    return compare("transposition-second-moment", [({"j": j}, lhs, Fraction(comb(j, 2)))], n=j, alpha=Fraction(1), mu=mu)


def record_statistic(lam: Partition, j: int) -> Fraction:
    """Average, over uniform SYT of shape ``lam``, of the content of the box labelled ``j``."""
    lam = tuple(lam)
    total = Fraction(0)
    count = 0
    for path in syt_enumerate(lam):
        total += content(path.added_boxes()[j - 1])
        count += 1
    return total / count


def record_statistic_closed(lam: Partition, j: int) -> Fraction:
    n = sum(lam)
    if j == 1:
        return Fraction(0)
    return Fraction(j - 1, comb(n, 2)) * sum(content(x) for x in boxes(lam))


def record_statistic_check(n: int) -> CheckReport:
    cases = (
        ({"lam": lam, "j": j}, record_statistic(lam, j), record_statistic_closed(lam, j))
        for lam in partitions_of(n)
        for j in range(1, n + 1)
    )
    return compare("record-content-average", cases, n=n, alpha=Fraction(1))


def plancherel_growth_rule(lam: Partition, big: Partition) -> Fraction:
    """``dim(Lam) / ((n+1) dim(lam))``, the alpha = 1 transition written with dimensions."""
    return Fraction(syt_count(big), (sum(lam) + 1) * syt_count(lam))

