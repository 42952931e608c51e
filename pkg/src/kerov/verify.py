"""Exact identity suites swept over sizes and an alpha grid."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from kerov import growth, moments, symfunc
from kerov.characters import character_table, frobenius_check, orthogonality_check
from kerov.errors import ResourceBoundError
from kerov.measures import as_alpha, class_size, jack_weight
from kerov.partitions import conjugate, partitions_of
from kerov.report import FAIL, CheckReport, compare

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_RESOURCE = 2
# Sizes past this take minutes per alpha because of full path enumeration.
DEFAULT_SUITE_BOUND = 8


def measure_normalization_check(n: int, alpha) -> CheckReport:
    alpha = as_alpha(alpha)
    total = sum((jack_weight(lam, alpha) for lam in partitions_of(n)), Fraction(0))
    return compare("jack-measure-normalization", [({"n": n}, total, 1)], n=n, alpha=alpha)


def measure_duality_check(n: int, alpha) -> CheckReport:
    """``jack_weight(lam, alpha) = jack_weight(lam', 1/alpha)``."""
    alpha = as_alpha(alpha)
    cases = (({"lam": lam}, jack_weight(lam, alpha), jack_weight(conjugate(lam), 1 / alpha)) for lam in partitions_of(n))
    return compare("jack-measure-transpose-duality", cases, n=n, alpha=alpha)


def theta_character_check(n: int) -> CheckReport:
    """``theta^lam_mu(1) = |C_mu| chi^lam(mu) / dim(lam)``."""
    tab = character_table(n)

    def cases():
        for lam in tab.irreps:
            for mu in tab.classes:
                yield {"lam": lam, "mu": mu}, symfunc.theta(lam, mu, 1), Fraction(class_size(mu) * tab.chi(lam, mu), tab.dim(lam))

    return compare("theta-character-consistency", cases(), n=n, alpha=Fraction(1))


def _jack_suite(n: int, alpha: Fraction) -> Iterable[CheckReport]:
    yield measure_normalization_check(n, alpha)
    yield measure_duality_check(n, alpha)
    yield from growth.stationarity_check(n, alpha)
    yield growth.kerov_constancy_check(n, alpha)
    yield moments.closed_form_check(n, alpha)
    yield symfunc.verify_orthogonality(n, alpha)
    yield symfunc.verify_jack_norms(n, alpha)
    yield symfunc.verify_p1_adjoint(n, alpha)
    yield symfunc.verify_transposition_formula(n, alpha)
    yield symfunc.verify_stanley(n, alpha)
    for mu in partitions_of(n):
        yield from symfunc.verify_theta_recursions(n, mu, alpha)
        for j in range(1, n):
            yield growth.martingale_check(j, mu, alpha)
        yield growth.conditional_expectation_check(n, mu, alpha)
        yield growth.increment_moment_check(n, mu, alpha)
    yield growth.square_martingale_check(n, alpha)


def _character_suite(n: int) -> Iterable[CheckReport]:
    yield from orthogonality_check(n)
    if n >= 2:
        yield frobenius_check(n)
    yield theta_character_check(n)
    yield growth.record_statistic_check(n)
    if n >= 2:
        yield growth.second_moment_level_check(n)
    for lam in partitions_of(n):
        yield growth.uniform_syt_check(lam)
    for mu in partitions_of(n):
        for j in range(1, n):
            yield growth.martingale_check(j, mu, 1, growth.CHARACTER)
        yield growth.conditional_expectation_check(n, mu, 1, growth.CHARACTER)
        yield growth.increment_moment_check(n, mu, 1, growth.CHARACTER)


@dataclass
class SuiteResult:
    reports: list[CheckReport] = field(default_factory=list)
    resource_error: str | None = None

    @property
    def failures(self) -> list[CheckReport]:
        return [r for r in self.reports if r.status == FAIL]

    @property
    def exit_code(self) -> int:
        if self.resource_error is not None:
            return EXIT_RESOURCE
        return EXIT_VIOLATION if self.failures else EXIT_OK

    def to_dict(self) -> dict:
        return {
            "status": {EXIT_OK: "pass", EXIT_VIOLATION: "fail", EXIT_RESOURCE: "resource-bound"}[self.exit_code],
            "resource_error": self.resource_error,
            "checked_identities": len(self.reports),
            "failures": len(self.failures),
            "reports": [r.to_dict() for r in self.reports],
        }


def run_suite(
    max_n: int, alphas=(1,), bound: int = DEFAULT_SUITE_BOUND, progress: Callable[[CheckReport], None] | None = None
) -> SuiteResult:
    """Every exact identity for sizes ``1..max_n`` at each alpha, plus the alpha=1 character statements.

    Sizes above ``bound`` stop the run with a resource error; reports gathered so
    far are kept.
    """
    result = SuiteResult()
    alphas = [as_alpha(a) for a in alphas]

    def add(reports):
        for r in reports:
            result.reports.append(r)
            if progress is not None:
                progress(r)

    try:
        for n in range(1, max_n + 1):
            if n > bound:
                raise ResourceBoundError(f"size {n} exceeds the configured bound {bound}")
            for alpha in alphas:
                log.info("n=%d alpha=%s", n, alpha)
                add(_jack_suite(n, alpha))
            if Fraction(1) in alphas:
                add(_character_suite(n))
        if max_n >= 1:
            for alpha in alphas:
                add(symfunc.verify_jack_expansions(max_n, alpha))
    except ResourceBoundError as exc:
        result.resource_error = str(exc)
    return result
