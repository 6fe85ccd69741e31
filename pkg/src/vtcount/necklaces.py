"""Necklace-type counting polynomials and fixed-density binary necklaces."""
from __future__ import annotations

import math
from fractions import Fraction

from . import arith
from ._errors import check_positive, exact_div

__all__ = [
    "necklace_poly",
    "quasi_necklace_poly",
    "fixed_density_necklaces",
    "fixed_density_lyndon",
]


def _mobius_power_sum(q: int, n: int, ctx) -> int:
    check_positive("n", n)
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    return sum(arith.mobius(d, ctx) * q ** (n // d) for d in arith.divisors(n, ctx))


def necklace_poly(q: int, n: int, *, ctx=None) -> int:
    """M(q, n) = (1/n) sum_{d | n} mu(d) q^(n/d).

    Counts aperiodic q-ary necklaces of length n.

    >>> necklace_poly(2, 6)
    9
    """
    return exact_div(_mobius_power_sum(q, n, ctx), n)


def quasi_necklace_poly(q: int, n: int, *, ctx=None) -> Fraction:
    """M'(q, n) = M(q, n) / 2 as an exact fraction.

    Not integral in general: ``quasi_necklace_poly(3, 1) == Fraction(3, 2)``.
    """
    return Fraction(_mobius_power_sum(q, n, ctx), 2 * n)


def _check_density(n: int, k: int) -> None:
    check_positive("n", n)
    if not 0 <= k <= n:
        raise ValueError(f"density must lie in 0..{n}, got {k}")


def fixed_density_necklaces(n: int, k: int, *, ctx=None) -> int:
    """Binary necklaces of length n with exactly k ones."""
    _check_density(n, k)
    total = sum(
        arith.euler_phi(d, ctx) * arith.binomial(n // d, k // d)
        for d in arith.divisors(math.gcd(n, k), ctx)
    )
    return exact_div(total, n)


def fixed_density_lyndon(n: int, k: int, *, ctx=None) -> int:
    """Binary Lyndon words (aperiodic necklaces) of length n with k ones."""
    _check_density(n, k)
    total = sum(
        arith.mobius(d, ctx) * arith.binomial(n // d, k // d)
        for d in arith.divisors(math.gcd(n, k), ctx)
    )
    return exact_div(total, n)
