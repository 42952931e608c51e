"""Symmetric functions over Q with the alpha-deformed inner product, and Jack polynomials.

Jack polynomials ``J_lam`` are built by Gram-Schmidt on monomial symmetric
functions, processed along reverse-lexicographic order (a linear extension of
dominance), with exact rational arithmetic. They are normalised so that the
coefficient of ``m_(1^n)`` is ``n!``, equivalently the coefficient of
``p_(1^n)`` is 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from kerov.errors import DomainError, ResourceBoundError
from kerov.measures import as_alpha, c_poly, c_prime_poly, dim_alpha, z_stat
from kerov.partitions import (
    Partition,
    arm,
    conjugate,
    covers,
    down_covers,
    leg,
    multiplicity,
    n_stat,
    partitions_of,
    remove_ones,
    up_covers,
)
from kerov.report import CheckReport, compare

DEFAULT_MAX_DEGREE = 10
POWER = "power"
MONOMIAL = "monomial"


def _check_degree(n: int, bound: int) -> None:
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n > bound:
        raise ResourceBoundError(f"degree {n} exceeds the configured bound {bound}")


def _p_in_m(mu: Partition, lam: Partition) -> int:
    """Coefficient of ``m_lam`` in ``p_mu``: ways to place the parts of ``mu`` into the rows of ``lam``."""

    @lru_cache(maxsize=None)
    def count(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(mu):
            return int(not any(remaining))
        total = 0
        for j, r in enumerate(remaining):
            if r >= mu[i]:
                total += count(i + 1, remaining[:j] + (r - mu[i],) + remaining[j + 1 :])
        return total

    return count(0, lam)


@dataclass(frozen=True)
class BasisMatrix:
    """Square change-of-basis matrix; ``rows[i][j]`` is the coefficient of basis ``index[j]`` in row ``index[i]``."""

    index: tuple[Partition, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> Fraction:
        i, j = key
        return self.rows[self.index.index(i)][self.index.index(j)]

    def __matmul__(self, other: BasisMatrix) -> BasisMatrix:
        if self.index != other.index:
            raise DomainError("index mismatch")
        k = len(self.index)
        cols = list(zip(*other.rows))
        rows = tuple(tuple(sum((a * b for a, b in zip(self.rows[i], cols[j])), Fraction(0)) for j in range(k)) for i in range(k))
        return BasisMatrix(self.index, rows)

    def is_identity(self) -> bool:
        return all(v == (i == j) for i, row in enumerate(self.rows) for j, v in enumerate(row))


@lru_cache(maxsize=None)
def _power_to_monomial(n: int) -> BasisMatrix:
    index = partitions_of(n)
    rows = tuple(tuple(Fraction(_p_in_m(mu, lam)) for lam in index) for mu in index)
    return BasisMatrix(index, rows)


def power_to_monomial(n: int, bound: int = DEFAULT_MAX_DEGREE) -> BasisMatrix:
    """Row ``mu`` holds the monomial expansion of ``p_mu``."""
    _check_degree(n, bound)
    return _power_to_monomial(n)


@lru_cache(maxsize=None)
def _monomial_to_power(n: int) -> BasisMatrix:
    fwd = _power_to_monomial(n)
    k = len(fwd.index)
    # p_mu only involves m_lam with lam >= mu, so fwd is lower triangular in reverse-lex order.
    a = fwd.rows
    inv = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        inv[i][i] = 1 / a[i][i]
        for j in range(i - 1, -1, -1):
            s = sum((a[i][t] * inv[t][j] for t in range(j, i)), Fraction(0))
            inv[i][j] = -s / a[i][i]
    return BasisMatrix(fwd.index, tuple(map(tuple, inv)))


def monomial_to_power(n: int, bound: int = DEFAULT_MAX_DEGREE) -> BasisMatrix:
    """Row ``lam`` holds the power-sum expansion of ``m_lam``."""
    _check_degree(n, bound)
    return _monomial_to_power(n)


def _clean(coeffs: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    return {k: Fraction(v) for k, v in coeffs.items() if v != 0}


@dataclass(frozen=True, eq=False)
class SymFunc:
    """Homogeneous symmetric function as a sparse map partition -> coefficient."""

    degree: int
    basis: str
    coeffs: Mapping[Partition, Fraction]

    def __post_init__(self):
        if self.basis not in (POWER, MONOMIAL):
            raise DomainError(f"unknown basis {self.basis!r}")
        for lam in self.coeffs:
            if sum(lam) != self.degree:
                raise DomainError(f"{lam} has the wrong size for degree {self.degree}")
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    @classmethod
    def p(cls, mu: Partition) -> SymFunc:
        return cls(sum(mu), POWER, {tuple(mu): Fraction(1)})

    @classmethod
    def m(cls, lam: Partition) -> SymFunc:
        return cls(sum(lam), MONOMIAL, {tuple(lam): Fraction(1)})

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def in_basis(self, basis: str) -> SymFunc:
        if basis == self.basis:
            return self
        mat = _power_to_monomial(self.degree) if self.basis == POWER else _monomial_to_power(self.degree)
        out: dict[Partition, Fraction] = {}
        for lam, c in self.coeffs.items():
            row = mat.rows[mat.index.index(lam)]
            for nu, v in zip(mat.index, row):
                if v:
                    out[nu] = out.get(nu, Fraction(0)) + c * v
        return SymFunc(self.degree, basis, out)

    def power(self) -> SymFunc:
        return self.in_basis(POWER)

    def monomial(self) -> SymFunc:
        return self.in_basis(MONOMIAL)

    def _binary(self, other: SymFunc, sign: int) -> SymFunc:
        if self.degree != other.degree:
            raise DomainError("degree mismatch")
        other = other.in_basis(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + sign * c
        return SymFunc(self.degree, self.basis, out)

    def __add__(self, other: SymFunc) -> SymFunc:
        return self._binary(other, 1)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self._binary(other, -1)

    def __mul__(self, scalar) -> SymFunc:
        s = Fraction(scalar)
        return SymFunc(self.degree, self.basis, {k: s * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return not self.coeffs and not other.coeffs
        return not (self - other).coeffs

    def __repr__(self) -> str:
        sym = "p" if self.basis == POWER else "m"
        terms = " + ".join(f"{c}*{sym}{lam}" for lam, c in self.coeffs.items()) or "0"
        return f"SymFunc({terms})"

    def times_p1(self) -> SymFunc:
        f = self.power()
        return SymFunc(self.degree + 1, POWER, {mu + (1,): c for mu, c in f.coeffs.items()})

    def p1_perp(self, alpha) -> SymFunc:
        """Adjoint of multiplication by ``p_1``: ``alpha * d/dp_1`` in the power basis."""
        alpha = as_alpha(alpha)
        if self.degree == 0:
            return SymFunc(0, POWER, {})
        f = self.power()
        out = {}
        for mu, c in f.coeffs.items():
            m1 = multiplicity(mu, 1)
            if m1:
                out[mu[:-1]] = alpha * m1 * c
        return SymFunc(self.degree - 1, POWER, out)


def inner_product_alpha(f: SymFunc, g: SymFunc, alpha) -> Fraction:
    """Bilinear form with ``<p_nu, p_mu> = delta * z_mu * alpha^l(mu)``."""
    alpha = as_alpha(alpha)
    if f.degree != g.degree:
        raise DomainError("inner product of symmetric functions of different degree")
    fp, gp = f.power().coeffs, g.power().coeffs
    total = Fraction(0)
    for mu, c in fp.items():
        d = gp.get(mu)
        if d:
            total += c * d * z_stat(mu) * alpha ** len(mu)
    return total


def _dot(u: dict, v: dict, weights: dict) -> Fraction:
    if len(v) < len(u):
        u, v = v, u
    return sum((c * v[mu] * weights[mu] for mu, c in u.items() if mu in v), Fraction(0))


@lru_cache(maxsize=None)
def _jack_family(n: int, alpha: Fraction) -> dict[Partition, SymFunc]:
    order = tuple(reversed(partitions_of(n)))  # (1^n) first
    inv = _monomial_to_power(n)
    weights = {mu: z_stat(mu) * alpha ** len(mu) for mu in order}
    ones = (1,) * n
    done: list[tuple[dict, Fraction]] = []
    family = {}
    for lam in order:
        vec = {mu: c for mu, c in zip(inv.index, inv.rows[inv.index.index(lam)]) if c}
        for prev, norm in done:
            coef = _dot(vec, prev, weights) / norm
            if coef:
                for mu, c in prev.items():
                    vec[mu] = vec.get(mu, Fraction(0)) - coef * c
                vec = {mu: c for mu, c in vec.items() if c}
        norm = _dot(vec, vec, weights)
        if norm == 0:
            raise RuntimeError(f"degenerate Gram-Schmidt pivot at {lam}")
        done.append((vec, norm))
        lead = vec[ones]
        family[lam] = SymFunc(n, POWER, {mu: c / lead for mu, c in vec.items()})
    return family


def jack_family(n: int, alpha, bound: int = DEFAULT_MAX_DEGREE) -> dict[Partition, SymFunc]:
    """All ``J_lam`` with ``|lam| = n``, in the power-sum basis."""
    _check_degree(n, bound)
    return _jack_family(n, as_alpha(alpha))


def jack_J(lam: Partition, alpha, bound: int = DEFAULT_MAX_DEGREE) -> SymFunc:
    return jack_family(sum(lam), alpha, bound)[tuple(lam)]


@dataclass(frozen=True)
class ThetaTable:
    """``theta[lam, mu]`` = coefficient of ``p_mu`` in ``J_lam`` for all partitions of ``n``."""

    n: int
    alpha: Fraction
    partitions: tuple[Partition, ...]
    entries: Mapping[tuple[Partition, Partition], Fraction]

    def __getitem__(self, key: tuple[Partition, Partition]) -> Fraction:
        return self.entries[key]


@lru_cache(maxsize=None)
def _theta_table(n: int, alpha: Fraction) -> ThetaTable:
    fam = _jack_family(n, alpha)
    parts = partitions_of(n)
    entries = {(lam, mu): fam[lam].coefficient(mu) for lam in parts for mu in parts}
    return ThetaTable(n, alpha, parts, entries)


def theta_table(n: int, alpha, bound: int = DEFAULT_MAX_DEGREE) -> ThetaTable:
    _check_degree(n, bound)
    return _theta_table(n, as_alpha(alpha))


def theta(lam: Partition, mu: Partition | None, alpha, bound: int = DEFAULT_MAX_DEGREE) -> Fraction:
    """``theta^lam_mu(alpha)``; ``mu=None`` stands for an undefined ``mu - 1^b`` and gives 0."""
    if mu is None:
        return Fraction(0)
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise DomainError("theta needs partitions of the same size")
    return theta_table(sum(lam), alpha, bound)[lam, mu]


def theta_transposition(lam: Partition, alpha) -> Fraction:
    """Closed form of ``theta^lam_(2,1^{n-2})``: ``alpha*n(lam') - n(lam)``."""
    return as_alpha(alpha) * n_stat(conjugate(lam)) - n_stat(lam)


def psi_prime(lam: Partition, tau: Partition, alpha) -> Fraction:
    """Branching weight between ``lam`` and ``tau = lam - box``.

    Product over the boxes of ``lam`` in the column of the removed box but not
    in its row.
    """
    alpha = as_alpha(alpha)
    lam, tau = tuple(lam), tuple(tau)
    x = covers(lam, tau)
    if x is None:
        raise DomainError(f"{lam} does not cover {tau}")
    r, c = x
    out = Fraction(1)
    for i in range(1, r):
        s = (i, c)
        al, ll = arm(lam, s), leg(lam, s)
        at, lt = arm(tau, s), leg(tau, s)
        out *= (alpha * al + ll + 1) / (alpha * al + ll + alpha)
        out *= (alpha * at + lt + alpha) / (alpha * at + lt + 1)
    return out


def up_weight(lam: Partition, big: Partition, alpha) -> Fraction:
    """``c_lam / c_big * psi'_{big/lam}``, straight from the definitions."""
    return c_poly(lam, alpha) / c_poly(big, alpha) * psi_prime(big, lam, alpha)


def down_weight(lam: Partition, small: Partition, alpha) -> Fraction:
    """``c'_lam / c'_small * psi'_{lam/small}`` (the coefficient in ``p_1^perp J_lam``)."""
    return c_prime_poly(lam, alpha) / c_prime_poly(small, alpha) * psi_prime(lam, small, alpha)


# -- identity checks -------------------------------------------------------


def verify_orthogonality(n: int, alpha) -> CheckReport:
    """sum_rho theta^rho_mu theta^rho_eta / (c_rho c'_rho) = delta / (z_mu alpha^l(mu))."""
    alpha = as_alpha(alpha)
    tab = theta_table(n, alpha)
    parts = tab.partitions
    norm = {rho: c_poly(rho, alpha) * c_prime_poly(rho, alpha) for rho in parts}

    def cases():
        for mu in parts:
            for eta in parts:
                lhs = sum((tab[rho, mu] * tab[rho, eta] / norm[rho] for rho in parts), Fraction(0))
                rhs = Fraction(1) / (z_stat(mu) * alpha ** len(mu)) if mu == eta else Fraction(0)
                yield {"mu": mu, "eta": eta}, lhs, rhs

    return compare("theta-orthogonality", cases(), n=n, alpha=alpha)


def verify_jack_norms(n: int, alpha) -> CheckReport:
    """<J_lam, J_nu> = delta * c_lam c'_lam."""
    alpha = as_alpha(alpha)
    fam = jack_family(n, alpha)

    def cases():
        for lam, f in fam.items():
            for nu, g in fam.items():
                rhs = c_poly(lam, alpha) * c_prime_poly(lam, alpha) if lam == nu else Fraction(0)
                yield {"lam": lam, "nu": nu}, inner_product_alpha(f, g, alpha), rhs

    return compare("jack-norm", cases(), n=n, alpha=alpha)


def verify_p1_adjoint(n: int, alpha) -> CheckReport:
    """<p_1 g, h> = <g, alpha d/dp_1 h> for g = J of degree n-1 and h = J of degree n."""
    alpha = as_alpha(alpha)
    small, big = jack_family(n - 1, alpha), jack_family(n, alpha)

    def cases():
        for lam, g in small.items():
            for nu, h in big.items():
                yield {"g": lam, "h": nu}, inner_product_alpha(g.times_p1(), h, alpha), inner_product_alpha(g, h.p1_perp(alpha), alpha)

    return compare("p1-perp-adjoint", cases(), n=n, alpha=alpha)


def verify_jack_expansions(n: int, alpha) -> list[CheckReport]:
    """For every degree up to ``n``: theta orthogonality, the Pieri rule for ``p_1``, and the ``p_1^perp`` expansion."""
    alpha = as_alpha(alpha)
    reports = []
    for k in range(1, n + 1):
        reports.append(verify_orthogonality(k, alpha))
    for k in range(0, n):
        fam, up = jack_family(k, alpha), jack_family(k + 1, alpha)

        def pieri():
            for lam, f in fam.items():
                rhs = SymFunc(k + 1, POWER, {})
                for _, big in up_covers(lam):
                    rhs = rhs + up_weight(lam, big, alpha) * up[big]
                yield {"lam": lam}, f.times_p1(), rhs

        reports.append(compare("p1-pieri", pieri(), n=k, alpha=alpha))
    for k in range(1, n + 1):
        fam, down = jack_family(k, alpha), jack_family(k - 1, alpha)

        def perp():
            for lam, f in fam.items():
                rhs = SymFunc(k - 1, POWER, {})
                for _, small in down_covers(lam):
                    rhs = rhs + down_weight(lam, small, alpha) * down[small]
                yield {"lam": lam}, f.p1_perp(alpha), rhs

        reports.append(compare("p1-perp-expansion", perp(), n=k, alpha=alpha))
    return reports


def verify_theta_recursions(n: int, mu: Partition, alpha) -> list[CheckReport]:
    """Both parts of the theta recursions for a single ``mu`` of size ``n``.

    Up: theta^lam_{mu-1} = sum_Lam up(lam,Lam) theta^Lam_mu.
    Down: alpha m_1(mu) theta^lam_mu = sum_tau down(lam,tau) theta^tau_{mu-1}.
    """
    alpha = as_alpha(alpha)
    mu = tuple(mu)
    if sum(mu) != n:
        raise DomainError("mu must be a partition of n")
    reduced = remove_ones(mu, 1)
    reports = []

    def part1():
        for lam in partitions_of(n - 1):
            rhs = sum((up_weight(lam, big, alpha) * theta(big, mu, alpha) for _, big in up_covers(lam)), Fraction(0))
            yield {"lam": lam}, theta(lam, reduced, alpha), rhs

    if n >= 1:
        reports.append(compare("theta-up-recursion", part1(), n=n, alpha=alpha, mu=mu))

    def part2():
        for lam in partitions_of(n):
            lhs = alpha * multiplicity(mu, 1) * theta(lam, mu, alpha)
            rhs = sum((down_weight(lam, small, alpha) * theta(small, reduced, alpha) for _, small in down_covers(lam)), Fraction(0))
            yield {"lam": lam}, lhs, rhs

    reports.append(compare("theta-down-recursion", part2(), n=n, alpha=alpha, mu=mu))
    return reports


def verify_transposition_formula(n: int, alpha) -> CheckReport:
    alpha = as_alpha(alpha)
    if n < 2:
        return CheckReport("theta-transposition-formula", n=n, alpha=alpha)
    mu = (2,) + (1,) * (n - 2)
    cases = (({"lam": lam}, theta_transposition(lam, alpha), theta(lam, mu, alpha)) for lam in partitions_of(n))
    return compare("theta-transposition-formula", cases, n=n, alpha=alpha, mu=mu)


def verify_stanley(n: int, alpha) -> CheckReport:
    """dim_alpha(lam) = sum_tau psi'_{lam/tau} dim_alpha(tau) for every ``|lam| = n``."""
    alpha = as_alpha(alpha)

    def cases():
        for lam in partitions_of(n):
            rhs = sum((psi_prime(lam, tau, alpha) * dim_alpha(tau, alpha) for _, tau in down_covers(lam)), Fraction(0))
            yield {"lam": lam}, dim_alpha(lam, alpha), rhs

    return compare("stanley-dim-recursion", cases(), n=n, alpha=alpha)
