"""End-to-end acceptance criteria, one test per criterion.

Each test prints a single ``criterion k: PASS|FAIL`` line (uncaptured) before asserting.
"""
import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import ALPHAS
from kerov import clt, growth, moments, symfunc, verify, walk
from kerov.measures import jack_weight
from kerov.partitions import conjugate, partitions_of

CLT_GRID = [50, 100, 200, 400, 800]
CLT_SAMPLES = 200_000


def announce(capsys, k: int, ok: bool, detail: str = "") -> None:
    with capsys.disabled():
        print(f"\ncriterion {k}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def all_ok(reports) -> bool:
    return all(r.ok for r in reports)


def test_criterion_01_martingales(capsys):
    reports = []
    for n in range(2, 8):
        for mu in [(2,) + (1,) * (n - 2)] + ([(3,) + (1,) * (n - 3)] if n >= 3 else []):
            reports += [growth.martingale_check(j, mu, 1, growth.CHARACTER) for j in range(1, n)]
    for alpha in ALPHAS:
        for n in range(2, 7):
            for mu in partitions_of(n):
                reports += [growth.martingale_check(j, mu, alpha) for j in range(1, n)]
    announce(capsys, 1, all_ok(reports), f"{len(reports)} exact reports")


def test_criterion_02_conditional_moments(capsys):
    mu = (3, 1)
    values = {lam: growth.conditional_second_moment(mu, lam, 1) for lam in partitions_of(3)}
    fixture = {(3,): 12, (2, 1): 3, (1, 1, 1): 12}
    depends = values == fixture and len(set(values.values())) > 1
    constant = all(
        growth.conditional_second_moment((2,) + (1,) * j, lam, alpha, growth.JACK) == alpha * j
        for alpha in ALPHAS
        for j in range(1, 11)
        for lam in partitions_of(j)
    )
    announce(capsys, 2, depends and constant, f"3-cycle values {[str(values[k]) for k in sorted(values)]}")


def test_criterion_03_propositions(capsys):
    reports = []
    for alpha in ALPHAS:
        for n in range(1, 7):
            reports.append(growth.square_martingale_check(n, alpha))
            reports.append(symfunc.verify_stanley(n, alpha))
            for mu in partitions_of(n):
                reports.append(growth.conditional_expectation_check(n, mu, alpha))
                reports.append(growth.increment_moment_check(n, mu, alpha))
                reports += symfunc.verify_theta_recursions(n, mu, alpha)
        reports += symfunc.verify_jack_expansions(6, alpha)
    for n in range(1, 8):
        reports.append(growth.record_statistic_check(n))
        if n >= 2:
            reports.append(growth.second_moment_level_check(n))
        for lam in partitions_of(n):
            reports.append(growth.uniform_syt_check(lam))
        for mu in partitions_of(n):
            reports.append(growth.conditional_expectation_check(n, mu, 1, growth.CHARACTER))
            reports.append(growth.increment_moment_check(n, mu, 1, growth.CHARACTER))
    announce(capsys, 3, all_ok(reports), f"{len(reports)} exact reports")


def test_criterion_04_closed_forms(capsys):
    ok = True
    count = 0
    for alpha in ALPHAS:
        for n in range(0, 9):
            for lam in partitions_of(n):
                for r in range(1, 5):
                    count += 1
                    ok &= moments.s_moment_closed(lam, r, alpha) == moments.s_moment_bruteforce(lam, r, alpha)
    announce(capsys, 4, ok, f"{count} comparisons")


def test_criterion_05_semicircle(capsys):
    s2 = all(moments.plancherel_expect_s(n, 2) == n for n in range(1, 31))
    s4 = [moments.plancherel_expect_s(n, 4) for n in range(1, 13)]
    formula = all(v == 2 * n * n - n for n, v in zip(range(1, 13), s4))
    ratios = [v / (n * n) for n, v in zip(range(1, 13), s4)]
    increasing = all(a < b < 2 for a, b in zip(ratios, ratios[1:]))
    gap = all(2 - r - Fraction(1, n) == 0 for n, r in zip(range(1, 13), ratios))
    announce(capsys, 5, s2 and formula and increasing and gap, "E s_4 = 2n^2 - n for n <= 12")


def test_criterion_06_measures(capsys):
    ok = True
    for alpha in ALPHAS:
        for n in range(0, 11):
            lams = partitions_of(n)
            ok &= sum((jack_weight(lam, alpha) for lam in lams), Fraction(0)) == 1
            ok &= all(jack_weight(lam, alpha) == jack_weight(conjugate(lam), 1 / alpha) for lam in lams)
    announce(capsys, 6, ok)


@pytest.mark.slow
def test_criterion_07_clt(capsys):
    noise = 3 / math.sqrt(CLT_SAMPLES)
    lines, ok = [], True
    for alpha in (1, 2):
        exp = clt.run_clt(CLT_GRID, alpha, samples=CLT_SAMPLES, seed=2024)
        ks = [exp.results[n].ks for n in CLT_GRID]
        a = all(k <= 40.1 * n**-0.25 for k, n in zip(ks, CLT_GRID))
        b = all(k2 <= k1 + noise for k1, k2 in zip(ks, ks[1:]))
        s_hat, _ = clt.rate_fit(exp)
        c = s_hat >= 0.3
        ok &= a and b and c
        lines.append(f"alpha={alpha} s_hat={s_hat:.3f} ks={[round(k, 4) for k in ks]}")
    target = clt.normal_cdf(1.0) - 0.5
    exact = clt.ks_exact(clt.w_law(2, 1))
    mc = clt.run_clt([2], 1, samples=CLT_SAMPLES, seed=2024).results[2].ks
    d = abs(exact - 0.3413) < 1e-4 and abs(mc - target) <= 2 / math.sqrt(CLT_SAMPLES)
    ok &= d
    announce(capsys, 7, ok, "; ".join(lines) + f"; n=2 ks exact={exact:.4f} mc={mc:.4f}")


@pytest.mark.slow
def test_criterion_08_haeusler(capsys):
    grid = clt.haeusler_grid(CLT_GRID, 1, delta=1.0, paths=1000, samples=20000, seed=7)
    certified = all(h.certified and h.n_term == 0 and h.paths == 1000 for h in grid.values())
    ls = np.array([grid[n].l_value for n in CLT_GRID])
    slope = np.polyfit(np.log(CLT_GRID), np.log(ls), 1)[0]
    const = float(np.exp(np.mean(np.log(ls * CLT_GRID))))
    within = all(abs(n * l / const - 1) <= 0.1 for n, l in zip(CLT_GRID, ls))
    decreasing = all(b < a for a, b in zip(ls, ls[1:]))
    ok = certified and decreasing and abs(slope + 1) <= 0.15 and within
    announce(capsys, 8, ok, f"slope={slope:.3f} n*L~{const:.3f}")


def test_criterion_09_group_walk(capsys):
    reports = []
    for n in range(2, 7):
        for eta in ("perm", "std"):
            reports += walk.walk_suite(n, eta)
    announce(capsys, 9, all_ok(reports), f"{len(reports)} reports")


def test_criterion_10_theta_characters(capsys):
    reports = [verify.theta_character_check(n) for n in range(1, 7)]
    announce(capsys, 10, all_ok(reports))
