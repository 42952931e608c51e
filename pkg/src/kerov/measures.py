"""Exact Plancherel and Jack measure weights, ``c``/``c'`` products, centralizers."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from kerov.errors import DomainError
from kerov.partitions import Partition, arm, boxes, hook_product, leg, multiplicity, partitions_of

FACTORIAL_BOUND = 200


@lru_cache(maxsize=None)
def _factorials() -> tuple[int, ...]:
    out = [1]
    for k in range(1, FACTORIAL_BOUND + 1):
        out.append(out[-1] * k)
    return tuple(out)


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError("factorial of a negative number")
    if n <= FACTORIAL_BOUND:
        return _factorials()[n]
    return prod(range(1, n + 1))


def as_alpha(alpha) -> Fraction:
    """Coerce ``alpha`` to an exact positive rational.

    Strings of the form ``"p/q"`` are accepted. Floats are converted exactly,
    which is rarely what you want; pass a Fraction or a string instead.
    """
    try:
        a = Fraction(alpha)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainError(f"alpha must be a positive rational, got {alpha!r}") from exc
    if a <= 0:
        raise DomainError(f"alpha must be positive, got {a}")
    return a


def plancherel_weight(lam: Partition) -> Fraction:
    return Fraction(factorial(sum(lam)), hook_product(lam) ** 2)


@lru_cache(maxsize=None)
def _c_products(lam: Partition, alpha: Fraction) -> tuple[Fraction, Fraction]:
    c = cp = Fraction(1)
    for x in boxes(lam):
        a, l = arm(lam, x), leg(lam, x)
        c *= alpha * a + l + 1
        cp *= alpha * a + l + alpha
    return c, cp


def c_poly(lam: Partition, alpha) -> Fraction:
    """``prod_s (alpha*a(s) + l(s) + 1)``."""
    return _c_products(tuple(lam), Fraction(alpha))[0]


def c_prime_poly(lam: Partition, alpha) -> Fraction:
    """``prod_s (alpha*a(s) + l(s) + alpha)``."""
    return _c_products(tuple(lam), Fraction(alpha))[1]


def jack_weight(lam: Partition, alpha) -> Fraction:
    """Jack_alpha probability of ``lam``: ``alpha^n n! / (c_lam c'_lam)``."""
    alpha = as_alpha(alpha)
    n = sum(lam)
    c, cp = _c_products(tuple(lam), alpha)
    return alpha**n * factorial(n) / (c * cp)


def dim_alpha(lam: Partition, alpha) -> Fraction:
    alpha = as_alpha(alpha)
    n = sum(lam)
    return factorial(n) * alpha**n / c_prime_poly(lam, alpha)


def jack_distribution(n: int, alpha) -> dict[Partition, Fraction]:
    return {lam: jack_weight(lam, alpha) for lam in partitions_of(n)}


def z_stat(mu: Partition) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of cycle type ``mu``."""
    return prod(i ** multiplicity(mu, i) * factorial(multiplicity(mu, i)) for i in set(mu))


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_stat(mu)
