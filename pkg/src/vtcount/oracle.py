"""Brute-force and floating-point reference implementations.

Nothing here shares code with the closed-form modules: the enumerators walk
the objects being counted, and the Fourier routines work in complex floating
point.  They are meant for validation at small sizes; every routine has an
explicit cap and raises :class:`CapacityError` past it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._errors import CapacityError
from .congruence import CongruenceSpec
from .vt import VTSpec, WeightDistribution

__all__ = [
    "PeriodicSamples",
    "brute_count_distinct",
    "brute_count_distinct_positive",
    "brute_subset_sum",
    "brute_vt",
    "brute_necklaces",
    "brute_ramanujan",
    "dft",
    "idft",
    "complex_product_coeffs",
]

SUBSET_CAP = 10**6
HYPERCUBE_CAP = 24
VT_CAP = 20
NECKLACE_CAP = 16
RAMANUJAN_CAP = 10**4
PRODUCT_CAP = 24

DEFINITION_TOL = 1e-6


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise CapacityError(what)


def _as_spec(spec_or_n, k=None, b=0) -> CongruenceSpec:
    if isinstance(spec_or_n, CongruenceSpec):
        return spec_or_n
    return CongruenceSpec(spec_or_n, k, b)


def _count_k_subsets(pool: range, k: int, n: int, b: int, cap: int) -> int:
    _require(math.comb(len(pool), k) <= cap, f"C({len(pool)}, {k}) exceeds cap {cap}")
    hits = sum(1 for c in itertools.combinations(pool, k) if sum(c) % n == b)
    # each k-subset gives k! ordered tuples with the same sum
    return hits * math.factorial(k)


def brute_count_distinct(spec_or_n, k=None, b=0, *, cap: int = SUBSET_CAP) -> int:
    spec = _as_spec(spec_or_n, k, b)
    return _count_k_subsets(range(spec.n), spec.k, spec.n, spec.b, cap)


def brute_count_distinct_positive(spec_or_n, k=None, b=0, *, cap: int = SUBSET_CAP) -> int:
    spec = _as_spec(spec_or_n, k, b)
    return _count_k_subsets(range(1, spec.n), spec.k, spec.n, spec.b, cap)


def brute_subset_sum(n: int, b: int, exclude_n: bool = False, *, cap: int = HYPERCUBE_CAP) -> int:
    """Subsets of {1..n} (or {1..n-1}) whose sum is b mod n, by exhaustion."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require(n <= cap, f"n = {n} exceeds subset cap {cap}")
    top = n - 1 if exclude_n else n
    b %= n
    count = 0
    for mask in range(1 << top):
        s = 0
        for i in range(top):
            if mask >> i & 1:
                s += i + 1
        if s % n == b:
            count += 1
    return count


def brute_vt(spec_or_n, b=0, *, cap: int = VT_CAP) -> tuple[int, WeightDistribution]:
    """Scan all 2^n words; return the code size and its weight distribution."""
    spec = spec_or_n if isinstance(spec_or_n, VTSpec) else VTSpec(spec_or_n, b)
    n, m = spec.n, spec.n + 1
    _require(n <= cap, f"n = {n} exceeds VT cap {cap}")
    counts = [0] * (n + 1)
    for word in itertools.product((0, 1), repeat=n):
        if sum(i * y for i, y in enumerate(word, 1)) % m == spec.b:
            counts[sum(word)] += 1
    return sum(counts), WeightDistribution(n, spec.b, tuple(counts))


def brute_necklaces(n: int, k: int, lyndon: bool = False, *, cap: int = NECKLACE_CAP) -> int:
    """Rotation classes of binary strings of length n with k ones.

    With ``lyndon`` only aperiodic classes (n distinct rotations) count.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require(n <= cap, f"n = {n} exceeds necklace cap {cap}")
    seen = set()
    count = 0
    for ones in itertools.combinations(range(n), k):
        s = ["0"] * n
        for i in ones:
            s[i] = "1"
        s = "".join(s)
        rotations = {s[i:] + s[:i] for i in range(n)}
        rep = min(rotations)
        if rep in seen:
            continue
        seen.add(rep)
        if not lyndon or len(rotations) == n:
            count += 1
    return count


def brute_ramanujan(n: int, m: int, *, cap: int = RAMANUJAN_CAP, tol: float = DEFINITION_TOL) -> int:
    """Sum of e(jm/n) over 1 <= j <= n coprime to n, rounded to an integer."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require(n <= cap, f"n = {n} exceeds Ramanujan-sum cap {cap}")
    j = np.array([j for j in range(1, n + 1) if math.gcd(j, n) == 1], dtype=np.int64)
    # reduce jm mod n before scaling to keep the phase argument small
    phase = (j * (m % n)) % n
    z = np.exp(2j * np.pi * phase / n).sum()
    r = round(z.real)
    if abs(z.imag) >= tol or abs(z.real - r) >= tol:
        raise ArithmeticError(f"c_{n}({m}) definition sum {z} is not within {tol} of an integer")
    return int(r)


@dataclass(frozen=True)
class PeriodicSamples:
    """One period f(1), ..., f(n) of an n-periodic function.

    ``values[j - 1]`` holds f(j); index n stands for residue 0.
    """

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 1 or v.size < 1:
            raise ValueError("need a non-empty 1-d vector of samples")
        if not np.all(np.isfinite(v)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.size

    def __call__(self, b: int) -> complex:
        return self.values[(b - 1) % self.n]


def _kernel(n: int, sign: int) -> np.ndarray:
    idx = np.arange(1, n + 1)
    phase = np.outer(idx, idx) % n
    return np.exp(sign * 2j * np.pi * phase / n)


def dft(f: PeriodicSamples) -> PeriodicSamples:
    """f_hat(b) = sum_{j=1..n} f(j) e(-bj/n), for b = 1..n."""
    if not isinstance(f, PeriodicSamples):
        f = PeriodicSamples(f)
    return PeriodicSamples(_kernel(f.n, -1) @ f.values)


def idft(fhat: PeriodicSamples) -> PeriodicSamples:
    """f(b) = (1/n) sum_{j=1..n} f_hat(j) e(bj/n), for b = 1..n."""
    if not isinstance(fhat, PeriodicSamples):
        fhat = PeriodicSamples(fhat)
    return PeriodicSamples(_kernel(fhat.n, 1) @ fhat.values / fhat.n)


def complex_product_coeffs(n: int, m: int, *, cap: int = PRODUCT_CAP, tol: float = DEFINITION_TOL) -> np.ndarray:
    """Real coefficients of prod_{j=1..n} (1 + z e(jm/n)) by repeated multiplication.

    Index k of the result is the coefficient of z^k.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require(n <= cap, f"n = {n} exceeds product cap {cap}")
    poly = np.array([1.0 + 0j])
    for j in range(1, n + 1):
        root = np.exp(2j * np.pi * ((j * m) % n) / n)
        nxt = np.zeros(poly.size + 1, dtype=complex)
        nxt[:-1] += poly
        nxt[1:] += root * poly
        poly = nxt
    if np.max(np.abs(poly.imag)) >= tol:
        raise ArithmeticError(f"product for n={n}, m={m} has imaginary residue above {tol}")
    return poly.real
