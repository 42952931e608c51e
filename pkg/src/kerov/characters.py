"""Irreducible characters of symmetric groups via the Murnaghan-Nakayama rule."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from kerov.errors import DomainError, ResourceBoundError
from kerov.measures import class_size, factorial, z_stat
from kerov.partitions import Partition, as_partition, conjugate, partitions_of, syt_count
from kerov.report import CheckReport, compare

DEFAULT_MAX_N = 10


def _strip_rim_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(lam minus a rim hook of length k, sign)`` using beta-numbers."""
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    present = set(beta)
    out = []
    for idx, b in enumerate(beta):
        t = b - k
        if t < 0 or t in present:
            continue
        between = sum(1 for v in beta if t < v < b)
        new = sorted(beta[:idx] + [t] + beta[idx + 1 :], reverse=True)
        shape = as_partition(v - (length - 1 - i) for i, v in enumerate(new))
        out.append((shape, -1 if between % 2 else 1))
    return out


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """``chi^lam`` on the class of cycle type ``mu`` (sizes must agree)."""
    if sum(lam) != sum(mu):
        raise DomainError("character needs partitions of the same size")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    return sum(sign * mn_character(shape, rest) for shape, sign in _strip_rim_hooks(lam, k))


@dataclass(frozen=True)
class CharacterTable:
    """``values[i][j] = chi^{irreps[i]}(C_{classes[j]})``."""

    n: int
    irreps: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def chi(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.irreps.index(tuple(lam))][self.classes.index(tuple(mu))]

    def dim(self, lam: Partition) -> int:
        return self.chi(lam, (1,) * self.n)

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.irreps.index(tuple(lam))]

    @property
    def order(self) -> int:
        return factorial(self.n)


@lru_cache(maxsize=None)
def _character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    values = tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(n, parts, parts, values)


def character_table(n: int, bound: int = DEFAULT_MAX_N) -> CharacterTable:
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > bound:
        raise ResourceBoundError(f"character table of S_{n} exceeds the bound {bound}")
    return _character_table(n)


def frobenius_ratio(lam: Partition) -> Fraction:
    """``chi^lam(12) / dim(lam)`` from the row and column lengths."""
    lam = tuple(lam)
    n = sum(lam)
    if n < 2:
        raise DomainError("S_n has no transpositions for n < 2")
    s = sum(comb(p, 2) for p in lam) - sum(comb(p, 2) for p in conjugate(lam))
    return Fraction(s, comb(n, 2))


def orthogonality_check(n: int) -> list[CheckReport]:
    """Row and column orthogonality plus ``chi^lam(1) = f^lam``."""
    tab = character_table(n)
    sizes = [class_size(mu) for mu in tab.classes]

    def rows():
        for i, lam in enumerate(tab.irreps):
            for k, nu in enumerate(tab.irreps):
                s = sum(c * a * b for c, a, b in zip(sizes, tab.values[i], tab.values[k]))
                yield {"lam": lam, "nu": nu}, s, tab.order if i == k else 0

    def cols():
        for j, mu in enumerate(tab.classes):
            for k, eta in enumerate(tab.classes):
                s = sum(row[j] * row[k] for row in tab.values)
                yield {"mu": mu, "eta": eta}, s, z_stat(mu) if j == k else 0

    dims = (({"lam": lam}, tab.dim(lam), syt_count(lam)) for lam in tab.irreps)
    return [
        compare("character-row-orthogonality", rows(), n=n),
        compare("character-column-orthogonality", cols(), n=n),
        compare("character-degree-hook-formula", dims, n=n),
    ]


def frobenius_check(n: int) -> CheckReport:
    tab = character_table(n)
    tr = (2,) + (1,) * (n - 2)
    cases = (({"lam": lam}, frobenius_ratio(lam), Fraction(tab.chi(lam, tr), tab.dim(lam))) for lam in tab.irreps)
    return compare("frobenius-transposition-ratio", cases, n=n)
