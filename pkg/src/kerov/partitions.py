"""Integer partitions, Young diagrams and standard Young tableaux.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the partition of 0. Boxes are 1-indexed ``(row, col)`` pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from kerov.errors import DomainError

Partition = tuple[int, ...]
Box = tuple[int, int]

EMPTY: Partition = ()


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical tuple.

    Trailing zeros are dropped; anything else that is not weakly decreasing
    and positive raises :class:`DomainError`.
    """
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    for i, p in enumerate(lam):
        if p < 1 or (i and lam[i - 1] < p):
            raise DomainError(f"not a partition: {lam}")
    return lam


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; accepts ``"4,2,1"`` or ``"-"``."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        return as_partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse partition {text!r}") from exc


def size(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def boxes(lam: Partition) -> Iterator[Box]:
    for r, p in enumerate(lam, start=1):
        for c in range(1, p + 1):
            yield (r, c)


def contains_box(lam: Partition, x: Box) -> bool:
    r, c = x
    return 1 <= r <= len(lam) and 1 <= c <= lam[r - 1]


def _check_box(lam: Partition, x: Box) -> None:
    if not contains_box(lam, x):
        raise DomainError(f"box {x} is not in the diagram of {lam}")


def arm(lam: Partition, x: Box) -> int:
    _check_box(lam, x)
    return lam[x[0] - 1] - x[1]


def leg(lam: Partition, x: Box) -> int:
    _check_box(lam, x)
    return conjugate(lam)[x[1] - 1] - x[0]


def hook_length(lam: Partition, x: Box) -> int:
    return arm(lam, x) + leg(lam, x) + 1


def content(x: Box) -> int:
    return x[1] - x[0]


def alpha_content(x: Box, alpha) -> Fraction:
    """``alpha*(col-1) - (row-1)``; equals :func:`content` at ``alpha == 1``."""
    return Fraction(alpha) * (x[1] - 1) - (x[0] - 1)


def addable_corners(lam: Partition) -> list[Box]:
    """Boxes that can be added to ``lam``, top row first."""
    out = []
    for r in range(1, len(lam) + 2):
        p = lam[r - 1] if r <= len(lam) else 0
        if r == 1 or lam[r - 2] > p:
            out.append((r, p + 1))
    return out


def removable_corners(lam: Partition) -> list[Box]:
    """Boxes that can be removed from ``lam``, top row first."""
    out = []
    for r, p in enumerate(lam, start=1):
        below = lam[r] if r < len(lam) else 0
        if p > below:
            out.append((r, p))
    return out


def add_box(lam: Partition, x: Box) -> Partition:
    r, c = x
    if x not in addable_corners(lam):
        raise DomainError(f"box {x} is not addable to {lam}")
    if r == len(lam) + 1:
        return lam + (1,)
    return lam[: r - 1] + (c,) + lam[r:]


def remove_box(lam: Partition, x: Box) -> Partition:
    r, c = x
    if x not in removable_corners(lam):
        raise DomainError(f"box {x} is not removable from {lam}")
    if c == 1:
        return lam[:-1]
    return lam[: r - 1] + (c - 1,) + lam[r:]


def covers(big: Partition, small: Partition) -> Box | None:
    """The single box of ``big`` not in ``small``, or None if ``big`` does not cover ``small``."""
    if sum(big) != sum(small) + 1 or len(big) < len(small):
        return None
    diff = None
    for r in range(1, len(big) + 1):
        b = big[r - 1]
        s = small[r - 1] if r <= len(small) else 0
        if b == s:
            continue
        if b != s + 1 or diff is not None:
            return None
        diff = (r, b)
    return diff


def up_covers(lam: Partition) -> list[tuple[Box, Partition]]:
    return [(x, add_box(lam, x)) for x in addable_corners(lam)]


def down_covers(lam: Partition) -> list[tuple[Box, Partition]]:
    return [(x, remove_box(lam, x)) for x in removable_corners(lam)]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise DomainError("n must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield EMPTY
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True if ``lam >= mu`` in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicity(lam: Partition, i: int) -> int:
    return sum(1 for p in lam if p == i)


def remove_ones(mu: Partition, b: int) -> Partition | None:
    """``mu - 1^b``: drop ``b`` parts equal to 1, or None when ``mu`` has fewer."""
    if b < 0:
        raise DomainError("b must be nonnegative")
    if multiplicity(mu, 1) < b:
        return None
    return mu[: len(mu) - b]


def pad_ones(mu: Partition, b: int) -> Partition:
    return mu + (1,) * b


def n_stat(lam: Partition) -> int:
    """``n(lam) = sum (i-1) * lam_i``."""
    return sum(i * p for i, p in enumerate(lam))


def hook_product(lam: Partition) -> int:
    return prod(hook_length(lam, x) for x in boxes(lam))


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    return factorial(sum(lam)) // hook_product(lam)


def content_sum(lam: Partition) -> int:
    return sum(content(x) for x in boxes(lam))


def transposition_count(n: int) -> int:
    return comb(n, 2)


@dataclass(frozen=True)
class GrowthPath:
    """A saturated chain ``() = shapes[0] < shapes[1] < ... < shapes[n]``.

    ``shapes[j]`` has size ``j``; ``path[j]`` is shorthand for it. The chain is
    the same data as a standard Young tableau of shape ``shapes[-1]``: box
    ``shapes[j] - shapes[j-1]`` carries the label ``j``.
    """

    shapes: tuple[Partition, ...]

    def __post_init__(self):
        if not self.shapes or self.shapes[0] != EMPTY:
            raise DomainError("a growth path starts at the empty partition")
        for j in range(1, len(self.shapes)):
            if covers(self.shapes[j], self.shapes[j - 1]) is None:
                raise DomainError(f"step {j} does not add a single box")

    @classmethod
    def from_boxes(cls, added: Sequence[Box]) -> GrowthPath:
        shapes = [EMPTY]
        for x in added:
            shapes.append(add_box(shapes[-1], x))
        return cls(tuple(shapes))

    @property
    def n(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    @property
    def steps(self) -> tuple[Partition, ...]:
        """``(lambda(1), ..., lambda(n))`` without the empty seed."""
        return self.shapes[1:]

    def __getitem__(self, j: int) -> Partition:
        return self.shapes[j]

    def __len__(self) -> int:
        return self.n

    def added_boxes(self) -> list[Box]:
        return [covers(self.shapes[j], self.shapes[j - 1]) for j in range(1, len(self.shapes))]

    def tableau(self) -> list[list[int]]:
        rows = [[0] * p for p in self.shape]
        for j, (r, c) in enumerate(self.added_boxes(), start=1):
            rows[r - 1][c - 1] = j
        return rows


def syt_enumerate(lam: Partition) -> Iterator[GrowthPath]:
    """Every growth path ending at ``lam``, i.e. every SYT of that shape."""

    def back(mu: Partition) -> Iterator[list[Partition]]:
        if not mu:
            yield [EMPTY]
            return
        for _, smaller in down_covers(mu):
            for chain in back(smaller):
                yield chain + [mu]

    for chain in back(tuple(lam)):
        yield GrowthPath(tuple(chain))
