"""The Markov chain on irreducible characters of S_n given by tensoring with a fixed character.

From ``lam`` the chain moves to ``rho`` with probability
``dim(rho) <chi^rho, eta chi^lam> / (eta(1) dim(lam))``. Its eigenvectors are
``psi_C(rho) = |C|^(1/2) chi^rho(C) / dim(rho)`` with eigenvalues ``eta(C)/eta(1)``;
every check here is arranged so that only ``|C|`` appears, keeping arithmetic exact.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex
from pathlib import Path

from kerov.characters import CharacterTable, character_table
from kerov.errors import DisconnectedGraphError, DomainError
from kerov.measures import class_size, factorial
from kerov.partitions import Partition, multiplicity, parse_partition
from kerov.report import FAIL, HYPOTHESIS_VIOLATED, CheckReport, compare

PERMUTATION = "perm"
STANDARD = "std"
REGULAR = "regular"
BUILTIN = (PERMUTATION, STANDARD, REGULAR)


@dataclass(frozen=True)
class ClassFunction:
    """Values on the conjugacy classes of S_n, ordered like ``partitions_of(n)``."""

    n: int
    values: tuple[Fraction, ...]

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[character_table(self.n).classes.index(tuple(mu))]

    @property
    def degree(self) -> Fraction:
        return self.values[-1]


def _inner(tab: CharacterTable, f, g) -> Fraction:
    return sum((class_size(mu) * a * b for mu, a, b in zip(tab.classes, f, g)), Fraction(0)) / tab.order


def builtin_character(n: int, name: str) -> ClassFunction:
    tab = character_table(n)
    if name == PERMUTATION:
        vals = [multiplicity(mu, 1) for mu in tab.classes]
    elif name == STANDARD:
        vals = [multiplicity(mu, 1) - 1 for mu in tab.classes]
    elif name == REGULAR:
        vals = [factorial(n) if mu == (1,) * n else 0 for mu in tab.classes]
    else:
        raise DomainError(f"unknown character {name!r}; expected one of {BUILTIN}")
    return ClassFunction(n, tuple(Fraction(v) for v in vals))


def from_multiplicities(n: int, mult: dict[Partition, int]) -> ClassFunction:
    tab = character_table(n)
    for lam, k in mult.items():
        if tuple(lam) not in tab.irreps:
            raise DomainError(f"{lam} is not a partition of {n}")
        if int(k) != k or k < 0:
            raise DomainError(f"multiplicity of {lam} must be a nonnegative integer")
    vals = [sum(int(mult.get(lam, 0)) * tab.chi(lam, mu) for lam in tab.irreps) for mu in tab.classes]
    return ClassFunction(n, tuple(Fraction(v) for v in vals))


def parse_eta_file(path, n: int) -> ClassFunction:
    """Lines ``partition multiplicity`` (e.g. ``2,1 3``); blank lines and ``#`` comments are ignored."""
    mult: dict[Partition, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise DomainError(f"line {lineno}: expected 'partition multiplicity'")
        lam = parse_partition(fields[0])
        try:
            k = int(fields[1])
        except ValueError as exc:
            raise DomainError(f"line {lineno}: multiplicity must be an integer") from exc
        mult[lam] = mult.get(lam, 0) + k
    return from_multiplicities(n, mult)


def as_class_function(n: int, eta) -> ClassFunction:
    if isinstance(eta, ClassFunction):
        if eta.n != n:
            raise DomainError("class function is for a different n")
        return eta
    if isinstance(eta, str):
        return builtin_character(n, eta)
    if isinstance(eta, dict):
        return from_multiplicities(n, eta)
    values = list(eta)
    for v in values:
        if isinstance(v, Complex) and not isinstance(v, (int, Fraction)) and complex(v).imag != 0:
            raise DomainError("the chain needs a real-valued character")
    return ClassFunction(n, tuple(Fraction(v.real if isinstance(v, complex) else v) for v in values))


def decompose(eta: ClassFunction) -> dict[Partition, Fraction]:
    tab = character_table(eta.n)
    return {lam: _inner(tab, tab.row(lam), eta.values) for lam in tab.irreps}


@dataclass(frozen=True)
class IrrChain:
    n: int
    eta: ClassFunction
    states: tuple[Partition, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> Fraction:
        lam, rho = key
        return self.matrix[self.states.index(tuple(lam))][self.states.index(tuple(rho))]

    def stationary(self) -> dict[Partition, Fraction]:
        tab = character_table(self.n)
        return {lam: Fraction(tab.dim(lam) ** 2, tab.order) for lam in self.states}

    def distinct_values(self) -> int:
        return len(set(self.eta.values))

    def eigenvalues(self) -> dict[Partition, Fraction]:
        tab = character_table(self.n)
        return {mu: self.eta(mu) / self.eta.degree for mu in tab.classes}


def chain_from_character(n: int, eta) -> IrrChain:
    """Exact transition matrix; ``eta`` must decompose with nonnegative integer multiplicities."""
    eta = as_class_function(n, eta)
    tab = character_table(n)
    if len(eta.values) != len(tab.classes):
        raise DomainError(f"expected {len(tab.classes)} class values")
    for lam, k in decompose(eta).items():
        if k.denominator != 1 or k < 0:
            raise DomainError(f"not a character: multiplicity of {lam} is {k}")
    if eta.degree <= 0:
        raise DomainError("character degree must be positive")
    rows = []
    for lam in tab.irreps:
        prod = [e * c for e, c in zip(eta.values, tab.row(lam))]
        rows.append(
            tuple(tab.dim(rho) * _inner(tab, tab.row(rho), prod) / (eta.degree * tab.dim(lam)) for rho in tab.irreps)
        )
    return IrrChain(n, eta, tab.irreps, tuple(rows))


def verify_dictionary(chain: IrrChain) -> list[CheckReport]:
    """Stochasticity, reversibility, the eigenvalue equation for every class, and orthonormality of the eigenvectors."""
    tab = character_table(chain.n)
    pi = chain.stationary()
    states = chain.states
    lam_eta = chain.eta.degree
    meta = {"n": chain.n}

    stochastic = (({"lam": lam}, sum(row), 1) for lam, row in zip(states, chain.matrix))
    nonneg = (({"lam": lam, "rho": rho}, v >= 0, True) for lam, row in zip(states, chain.matrix) for rho, v in zip(states, row))
    reversible = (
        ({"lam": lam, "rho": rho}, pi[lam] * chain[lam, rho], pi[rho] * chain[rho, lam]) for lam in states for rho in states
    )

    def eigen():
        for mu in tab.classes:
            ev = chain.eta(mu) / lam_eta
            for i, lam in enumerate(states):
                lhs = sum((chain.matrix[i][k] * Fraction(tab.chi(rho, mu), tab.dim(rho)) for k, rho in enumerate(states)), Fraction(0))
                yield {"class": mu, "lam": lam}, lhs, ev * Fraction(tab.chi(lam, mu), tab.dim(lam))

    def orthonormal():
        # <psi_C, psi_C'>_pi = sqrt(|C||C'|) S with S rational; check |C||C'| S^2 = delta.
        for mu in tab.classes:
            for nu in tab.classes:
                s = sum((pi[rho] * Fraction(tab.chi(rho, mu) * tab.chi(rho, nu), tab.dim(rho) ** 2) for rho in states), Fraction(0))
                yield {"class": mu, "other": nu}, class_size(mu) * class_size(nu) * s * s, int(mu == nu)

    return [
        compare("chain-rows-sum-to-one", stochastic, **meta),
        compare("chain-nonnegative", nonneg, **meta),
        compare("chain-reversible", reversible, **meta),
        compare("chain-eigenvalue-equation", eigen(), **meta),
        compare("chain-eigenvector-orthonormality", orthonormal(), **meta),
    ]


def power_step_matrix(chain: IrrChain, rho: Partition, j: int) -> Fraction:
    """``L^j(trivial, rho)`` by repeated vector-matrix products."""
    if j < 0:
        raise DomainError("j must be nonnegative")
    k = len(chain.states)
    v = [Fraction(0)] * k
    v[chain.states.index((chain.n,))] = Fraction(1)
    for _ in range(j):
        v = [sum((v[a] * chain.matrix[a][b] for a in range(k)), Fraction(0)) for b in range(k)]
    return v[chain.states.index(tuple(rho))]


def power_step_probability(chain: IrrChain, rho: Partition, j: int) -> Fraction:
    """``dim(rho) <chi^rho, eta^j> / eta(1)^j``, the chance of reaching ``rho`` from the trivial character in ``j`` steps."""
    if j < 0:
        raise DomainError("j must be nonnegative")
    tab = character_table(chain.n)
    power = [v**j for v in chain.eta.values]
    return tab.dim(rho) * _inner(tab, tab.row(rho), power) / chain.eta.degree**j


def power_step_check(chain: IrrChain, jmax: int | None = None) -> CheckReport:
    jmax = 2 * chain.distinct_values() if jmax is None else jmax
    cases = (
        ({"rho": rho, "j": j}, power_step_matrix(chain, rho, j), power_step_probability(chain, rho, j))
        for j in range(jmax + 1)
        for rho in chain.states
    )
    return compare("chain-power-steps", cases, n=chain.n)


def kernel_classes(eta: ClassFunction) -> list[Partition]:
    """Classes on which ``eta`` takes the value ``eta(1)``; the character is faithful iff this is only the identity."""
    tab = character_table(eta.n)
    return [mu for mu, v in zip(tab.classes, eta.values) if v == eta.degree]


def burnside_brauer_check(chain: IrrChain) -> CheckReport:
    """Least ``j`` with ``<eta^j, chi^rho> > 0`` for every ``rho``; passes when all are below the number of distinct values of ``eta``."""
    eta = chain.eta
    m = chain.distinct_values()
    report = CheckReport("burnside-brauer-coverage", n=chain.n)
    kernel = kernel_classes(eta)
    if kernel != [(1,) * chain.n]:
        report.status = HYPOTHESIS_VIOLATED
        report.counterexample = {"kernel_classes": kernel}
        return report
    tab = character_table(chain.n)
    first: dict[Partition, int | None] = {}
    for rho in chain.states:
        first[rho] = None
        for j in range(2 * m + 1):
            if _inner(tab, tab.row(rho), [v**j for v in eta.values]) > 0:
                first[rho] = j
                break
        report.checked += 1
        if (first[rho] is None or first[rho] >= m) and report.counterexample is None:
            report.status = FAIL
            report.counterexample = {"rho": rho, "first_j": first[rho], "m": m}
    report.details = {"m": m, "first_j": {rho: j for rho, j in first.items()}}
    return report


def weighted_graph_diameter(chain: IrrChain) -> int:
    """Graph distance diameter on edges with ``pi(lam) L(lam, rho) > 0``."""
    k = len(chain.states)
    adj = [[b for b in range(k) if b != a and chain.matrix[a][b] > 0] for a in range(k)]
    diameter = 0
    for source in range(k):
        dist = [-1] * k
        dist[source] = 0
        queue = deque([source])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if min(dist) < 0:
            unreachable = [chain.states[b] for b in range(k) if dist[b] < 0]
            raise DisconnectedGraphError(f"graph is disconnected (eta is not faithful); unreachable from {chain.states[source]}: {unreachable}")
        diameter = max(diameter, max(dist))
    return diameter


def diameter_check(chain: IrrChain) -> CheckReport:
    """Diameter at most ``m - 1`` and at least ``diameter + 1`` distinct eigenvalues."""
    report = CheckReport("chain-diameter", n=chain.n)
    m = chain.distinct_values()
    try:
        d = weighted_graph_diameter(chain)
    except DisconnectedGraphError as exc:
        report.status = HYPOTHESIS_VIOLATED
        report.counterexample = {"error": str(exc)}
        return report
    eigen = len(set(chain.eigenvalues().values()))
    report.checked = 2
    report.details = {"diameter": d, "m": m, "distinct_eigenvalues": eigen}
    if d > m - 1 or eigen < d + 1:
        report.status = FAIL
        report.counterexample = dict(report.details)
    return report


def chain_reports(chain: IrrChain) -> list[CheckReport]:
    return verify_dictionary(chain) + [power_step_check(chain), burnside_brauer_check(chain), diameter_check(chain)]


def walk_suite(n: int, eta) -> list[CheckReport]:
    return chain_reports(chain_from_character(n, eta))
