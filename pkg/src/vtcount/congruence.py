"""Counting solutions of x_1 + ... + x_k = b (mod n) with distinct coordinates.

All counts are exact Python ints.  Every division that the closed forms
require is checked to be exact, which doubles as a guard against
transcription errors in the formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith
from ._errors import check_positive, exact_div

__all__ = [
    "CongruenceSpec",
    "CoeffVector",
    "count_distinct",
    "count_distinct_unordered",
    "count_distinct_positive",
    "subset_sum_count",
    "subset_sum_count_excl",
    "count_unrestricted",
    "product_coefficients",
]


@dataclass(frozen=True)
class CongruenceSpec:
    """One instance (n, k, b); ``b`` is reduced into 0..n-1 on construction."""

    n: int
    k: int
    b: int = 0

    def __post_init__(self):
        check_positive("n", self.n)
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        object.__setattr__(self, "b", self.b % self.n)


@dataclass(frozen=True)
class CoeffVector:
    n: int
    coeffs: tuple[int, ...]

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def _spec(spec_or_n, k=None, b=0) -> CongruenceSpec:
    if isinstance(spec_or_n, CongruenceSpec):
        return spec_or_n
    return CongruenceSpec(spec_or_n, k, b)


def _signed_unordered(spec: CongruenceSpec, ctx) -> int:
    # P_n(k,b) = ((-1)^k / n) * sum_{d | (n,k)} (-1)^(k/d) c_d(b) C(n/d, k/d)
    n, k, b = spec.n, spec.k, spec.b
    total = 0
    for d in arith.divisors(math.gcd(n, k), ctx):
        term = arith.ramanujan_sum(d, b, ctx) * arith.binomial(n // d, k // d)
        total += -term if (k // d) % 2 else term
    if k % 2:
        total = -total
    return exact_div(total, n)


def count_distinct(spec_or_n, k=None, b=0, *, ctx=None) -> int:
    """N_n(k, b): ordered solutions in Z_n^k with pairwise distinct coordinates.

    Accepts either a :class:`CongruenceSpec` or ``(n, k, b)``.

    >>> count_distinct(5, 2, 0)
    4
    """
    spec = _spec(spec_or_n, k, b)
    if spec.k > spec.n:
        return 0
    return math.factorial(spec.k) * _signed_unordered(spec, ctx)


def count_distinct_unordered(spec_or_n, k=None, b=0, *, ctx=None) -> int:
    """P_n(k, b) = N_n(k, b) / k!, i.e. k-subsets of Z_n summing to b."""
    spec = _spec(spec_or_n, k, b)
    return exact_div(count_distinct(spec, ctx=ctx), math.factorial(spec.k))


def count_distinct_positive(spec_or_n, k=None, b=0, *, ctx=None) -> int:
    """N_n^{>0}(k, b): as :func:`count_distinct` with every x_i nonzero mod n.

    Uses the full divisor sum over d | n with floor(k/d) in both the sign
    and the binomial, so no gcd restriction applies here.
    """
    spec = _spec(spec_or_n, k, b)
    n, k, b = spec.n, spec.k, spec.b
    if k >= n:
        return 0
    total = 0
    for d in arith.divisors(n, ctx):
        j = k // d
        term = arith.ramanujan_sum(d, b, ctx) * arith.binomial(n // d - 1, j)
        total += -term if j % 2 else term
    if k % 2:
        total = -total
    return math.factorial(k) * exact_div(total, n)


def subset_sum_count(n: int, b: int, *, ctx=None) -> int:
    """T_n(b): number of subsets of {1, ..., n} whose sum is b mod n.

    >>> subset_sum_count(5, 0)
    8
    """
    check_positive("n", n)
    b %= n
    total = sum(
        arith.ramanujan_sum(d, b, ctx) << (n // d)
        for d in arith.divisors(n, ctx)
        if d % 2
    )
    return exact_div(total, n)


def subset_sum_count_excl(n: int, b: int, *, ctx=None) -> int:
    """T'_n(b): subsets of {1, ..., n-1} summing to b mod n; half of T_n(b)."""
    return exact_div(subset_sum_count(n, b, ctx=ctx), 2)


def count_unrestricted(coeffs, b: int, n: int) -> int:
    """Solutions in Z_n^k of a_1 x_1 + ... + a_k x_k = b (mod n), no restriction.

    There are l * n^(k-1) of them when l = gcd(a_1, ..., a_k, n) divides b,
    and none otherwise.
    """
    check_positive("n", n)
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("coefficient list must be non-empty")
    ell = math.gcd(n, *coeffs)
    if b % ell:
        return 0
    return ell * n ** (len(coeffs) - 1)


def product_coefficients(n: int, m: int) -> CoeffVector:
    """Exact coefficients of prod_{j=1..n} (1 + z e^{2 pi i j m / n}).

    With d = gcd(m, n) the coefficient of z^k is (-1)^(k + kd/n) C(d, kd/n),
    which vanishes unless n/d divides k.
    """
    check_positive("n", n)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    d = math.gcd(m, n)
    coeffs = []
    for k in range(n + 1):
        idx = Fraction(k * d, n)
        c = arith.binomial_at(d, idx)
        if c and (k + idx.numerator) % 2:
            c = -c
        coeffs.append(c)
    return CoeffVector(n, tuple(coeffs))
