"""Exact arithmetic functions over the positive integers.

Factorizations, divisor lists, the Moebius function and Euler's totient are
memoized in an :class:`ArithContext`.  Module-level functions use a shared
default context; pass your own if you want an isolated cache.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ._errors import check_positive, exact_div

__all__ = [
    "Factorization",
    "ArithContext",
    "default_context",
    "factorize",
    "divisors",
    "mobius",
    "euler_phi",
    "ramanujan_sum",
    "von_sterneck",
    "binomial",
    "binomial_at",
    "factorial",
]


@dataclass(frozen=True)
class Factorization:
    value: int
    primes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_positive("value", self.value)
        prod = 1
        last = 1
        for p, e in self.primes:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.primes}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factorization {self.primes} does not multiply to {self.value}")

    def __iter__(self):
        return iter(self.primes)


def _trial_division(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


class ArithContext:
    """Memoizing provider of factorizations, divisors, mu and phi.

    Reads are lock-free dict lookups; population takes a lock so that
    concurrent callers never observe a half-built entry.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._factor: dict[int, Factorization] = {}
        self._divisors: dict[int, tuple[int, ...]] = {}
        self._mu: dict[int, int] = {}
        self._phi: dict[int, int] = {}

    def _store(self, cache: dict, key: int, value):
        with self._lock:
            return cache.setdefault(key, value)

    def factorize(self, n: int) -> Factorization:
        check_positive("n", n)
        f = self._factor.get(n)
        if f is None:
            f = self._store(self._factor, n, Factorization(n, _trial_division(n)))
        return f

    def divisors(self, n: int) -> tuple[int, ...]:
        check_positive("n", n)
        ds = self._divisors.get(n)
        if ds is None:
            ds = [1]
            for p, e in self.factorize(n):
                ds = [d * p**i for d in ds for i in range(e + 1)]
            ds = self._store(self._divisors, n, tuple(sorted(ds)))
        return ds

    def mobius(self, n: int) -> int:
        check_positive("n", n)
        mu = self._mu.get(n)
        if mu is None:
            primes = self.factorize(n).primes
            if any(e > 1 for _, e in primes):
                mu = 0
            else:
                mu = -1 if len(primes) % 2 else 1
            mu = self._store(self._mu, n, mu)
        return mu

    def euler_phi(self, n: int) -> int:
        check_positive("n", n)
        phi = self._phi.get(n)
        if phi is None:
            phi = 1
            for p, e in self.factorize(n):
                phi *= (p - 1) * p ** (e - 1)
            phi = self._store(self._phi, n, phi)
        return phi

    def ramanujan_sum(self, n: int, m: int) -> int:
        """c_n(m) via Kluyver's formula, sum of mu(n/d)*d over d | gcd(m, n).

        gcd(0, n) is taken as n, so c_n(0) = phi(n).
        """
        check_positive("n", n)
        g = math.gcd(m, n)
        return sum(self.mobius(n // d) * d for d in self.divisors(g))

    def von_sterneck(self, n: int, m: int) -> int:
        check_positive("n", n)
        q = n // math.gcd(m, n)
        mu = self.mobius(q)
        if mu == 0:
            return 0
        return mu * exact_div(self.euler_phi(n), self.euler_phi(q))


default_context = ArithContext()


def factorize(n: int, ctx: ArithContext | None = None) -> Factorization:
    """Prime factorization of ``n`` by trial division.

    >>> factorize(12).primes
    ((2, 2), (3, 1))
    """
    return (ctx or default_context).factorize(n)


def divisors(n: int, ctx: ArithContext | None = None) -> tuple[int, ...]:
    """Positive divisors of ``n`` in ascending order."""
    return (ctx or default_context).divisors(n)


def mobius(n: int, ctx: ArithContext | None = None) -> int:
    return (ctx or default_context).mobius(n)


def euler_phi(n: int, ctx: ArithContext | None = None) -> int:
    return (ctx or default_context).euler_phi(n)


def ramanujan_sum(n: int, m: int, ctx: ArithContext | None = None) -> int:
    """Ramanujan sum c_n(m), the sum of the m-th powers of the primitive
    n-th roots of unity, evaluated exactly.

    >>> ramanujan_sum(6, 4)
    -1
    >>> ramanujan_sum(6, 0)
    2
    """
    return (ctx or default_context).ramanujan_sum(n, m)


def von_sterneck(n: int, m: int, ctx: ArithContext | None = None) -> int:
    """phi(n) / phi(n/(m,n)) * mu(n/(m,n)); equal to ``ramanujan_sum(n, m)``."""
    return (ctx or default_context).von_sterneck(n, m)


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero when k lies outside 0..n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_at(n: int, k: Rational | int) -> int:
    """C(n, k) where ``k`` may be rational; a non-integral index gives 0."""
    k = Fraction(k)
    if k.denominator != 1:
        return 0
    return binomial(n, k.numerator)
