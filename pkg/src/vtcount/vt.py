"""Binary Varshamov-Tenengolts codes VT_b(n).

A length-n word y_1 ... y_n belongs to VT_b(n) when sum(i * y_i) = b
(mod n + 1).  Note the modulus is n + 1, one more than the code length.
Words are written left to right starting at y_1, so "01010" has y_2 = 1.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from . import arith
from ._errors import CapacityError, check_positive, exact_div

__all__ = [
    "BitVector",
    "VTSpec",
    "WeightDistribution",
    "DEFAULT_ENUM_CAP",
    "enum_cap",
    "syndrome",
    "vt_member",
    "vt_size",
    "vt_weight_count",
    "vt_weight_distribution",
    "vt_enumerate",
]

DEFAULT_ENUM_CAP = 24
ENUM_CAP_ENV = "VTCOUNT_ENUM_CAP"


def enum_cap() -> int:
    """Largest code length :func:`vt_enumerate` accepts by default."""
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


@dataclass(frozen=True)
class BitVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(y) for y in self.bits)
        if any(y not in (0, 1) for y in bits):
            raise ValueError(f"not a binary vector: {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, s: str) -> BitVector:
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {s!r}")
        return cls(tuple(int(c) for c in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class VTSpec:
    """Code length ``n`` and syndrome ``b``, the latter reduced mod n + 1."""

    n: int
    b: int = 0

    def __post_init__(self):
        check_positive("n", self.n)
        object.__setattr__(self, "b", self.b % (self.n + 1))

    @property
    def modulus(self) -> int:
        return self.n + 1


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    b: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def _vtspec(spec_or_n, b=0) -> VTSpec:
    if isinstance(spec_or_n, VTSpec):
        return spec_or_n
    return VTSpec(spec_or_n, b)


def syndrome(v) -> int:
    """sum(i * y_i) mod (n + 1) for a word ``v`` of length n."""
    if isinstance(v, str):
        v = BitVector.from_string(v)
    elif not isinstance(v, BitVector):
        v = BitVector(tuple(v))
    return sum(i for i, y in enumerate(v.bits, 1) if y) % (v.n + 1)


def vt_member(v, spec_or_n, b=0) -> bool:
    """Is ``v`` (BitVector, 0/1 string or sequence) a codeword of VT_b(n)?

    >>> vt_member("01010", 5, 0)
    True
    """
    spec = _vtspec(spec_or_n, b)
    if isinstance(v, str):
        v = BitVector.from_string(v)
    elif not isinstance(v, BitVector):
        v = BitVector(tuple(v))
    if v.n != spec.n:
        raise ValueError(f"vector has length {v.n}, code has length {spec.n}")
    return syndrome(v) == spec.b


def vt_size(spec_or_n, b=0, *, ctx=None) -> int:
    """|VT_b(n)|, the number of codewords.

    Computed as 1/(2(n+1)) * sum over odd d | n+1 of c_d(b) 2^((n+1)/d);
    only the odd divisors of n + 1 contribute, so this is cheap even when
    the answer has tens of thousands of digits.

    >>> vt_size(5, 0)
    6
    """
    spec = _vtspec(spec_or_n, b)
    m = spec.modulus
    total = sum(
        arith.ramanujan_sum(d, spec.b, ctx) << (m // d)
        for d in arith.divisors(m, ctx)
        if d % 2
    )
    return exact_div(total, 2 * m)


def vt_weight_count(spec_or_n, b=0, k=None, *, ctx=None) -> int:
    """Number of codewords of VT_b(n) with Hamming weight ``k``.

    Either ``vt_weight_count(spec, k=k)`` or ``vt_weight_count(n, b, k)``.
    """
    if isinstance(spec_or_n, VTSpec):
        spec = spec_or_n
        if k is None:
            k = b
    else:
        spec = VTSpec(spec_or_n, b)
    if k is None or k < 0 or k > spec.n:
        raise ValueError(f"weight must lie in 0..{spec.n}, got {k}")
    m = spec.modulus
    total = 0
    for d in arith.divisors(m, ctx):
        j = k // d
        term = arith.ramanujan_sum(d, spec.b, ctx) * arith.binomial(m // d - 1, j)
        total += -term if j % 2 else term
    if k % 2:
        total = -total
    return exact_div(total, m)


def vt_weight_distribution(spec_or_n, b=0, *, ctx=None) -> WeightDistribution:
    """Weight counts for k = 0..n, one closed-form evaluation per weight."""
    spec = _vtspec(spec_or_n, b)
    counts = tuple(vt_weight_count(spec, k=k, ctx=ctx) for k in range(spec.n + 1))
    return WeightDistribution(spec.n, spec.b, counts)


def vt_enumerate(spec_or_n, b=0, *, cap: int | None = None) -> list[BitVector]:
    """All codewords of VT_b(n) in lexicographic order of their strings.

    Scans the 2^n hypercube, so ``n`` is limited by ``cap`` (default 24,
    overridable through the ``VTCOUNT_ENUM_CAP`` environment variable).
    """
    spec = _vtspec(spec_or_n, b)
    cap = enum_cap() if cap is None else cap
    if spec.n > cap:
        raise CapacityError(f"refusing to enumerate 2^{spec.n} words (cap n <= {cap})")
    n, m = spec.n, spec.modulus
    # split y_1..y_h | y_{h+1}..y_n; the syndrome is additive across halves
    h = n // 2
    tails: dict[int, list[tuple[int, ...]]] = {}
    for tail in itertools.product((0, 1), repeat=n - h):
        s = sum(i for i, y in enumerate(tail, h + 1) if y) % m
        tails.setdefault(s, []).append(tail)
    out = []
    for head in itertools.product((0, 1), repeat=h):
        s = sum(i for i, y in enumerate(head, 1) if y)
        for tail in tails.get((spec.b - s) % m, ()):
            out.append(BitVector(head + tail))
    return out
