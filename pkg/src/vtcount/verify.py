"""Oracle-equivalence and identity sweeps behind ``vtcount verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import arith, congruence as cg, necklaces as nk, oracle, vt
from ._errors import CapacityError

__all__ = ["CheckResult", "SUITES", "run_suite"]

Case = tuple[str, object, object]


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.name} ({self.checks} checks)"
        if not self.passed:
            msg += f": {self.counterexample}"
        return msg


def _check(name: str, cases: Iterable[Case]) -> CheckResult:
    res = CheckResult(name)
    for label, got, want in cases:
        res.checks += 1
        if got != want:
            res.counterexample = f"{label}: got {got}, expected {want}"
            break
    return res


def _naive_phi(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def _naive_mu(n):
    sign, p = 1, 2
    while n > 1:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return sign


def arith_suite(max_n: int) -> Iterator[CheckResult]:
    ms = range(-max_n, max_n + 1)
    yield _check("ramanujan: Kluyver = von Sterneck", (
        (f"n={n} m={m}", arith.ramanujan_sum(n, m), arith.von_sterneck(n, m))
        for n in range(1, max_n + 1) for m in ms))
    yield _check("ramanujan: Kluyver = definition sum", (
        (f"n={n} m={m}", arith.ramanujan_sum(n, m), oracle.brute_ramanujan(n, m))
        for n in range(1, max_n + 1) for m in ms))
    yield _check("divisor identity sum_{d|n} c_d(m)", (
        (f"n={n} m={m}", sum(arith.ramanujan_sum(d, m) for d in arith.divisors(n)),
         n if m % n == 0 else 0)
        for n in range(1, max_n + 1) for m in range(1, max_n + 1)))
    yield _check("mobius / totient vs naive", (
        (f"n={n}", (arith.mobius(n), arith.euler_phi(n)), (_naive_mu(n), _naive_phi(n)))
        for n in range(1, max_n + 1)))


def _triples(max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for b in range(n):
                yield n, k, b


def congruence_suite(max_n: int) -> Iterator[CheckResult]:
    yield _check("N_n(k,b) vs enumeration", (
        (f"n={n} k={k} b={b}", cg.count_distinct(n, k, b), oracle.brute_count_distinct(n, k, b))
        for n, k, b in _triples(max_n)))
    yield _check("N>0_n(k,b) vs enumeration", (
        (f"n={n} k={k} b={b}", cg.count_distinct_positive(n, k, b),
         oracle.brute_count_distinct_positive(n, k, b))
        for n, k, b in _triples(max_n)))
    yield _check("P_n(k,b) * k! = N_n(k,b)", (
        (f"n={n} k={k} b={b}", cg.count_distinct_unordered(n, k, b) * math.factorial(k),
         cg.count_distinct(n, k, b))
        for n, k, b in _triples(max_n)))
    yield _check("total mass sum_b N_n(k,b) = n!/(n-k)!", (
        (f"n={n} k={k}", sum(cg.count_distinct(n, k, b) for b in range(n)), math.perm(n, k))
        for n in range(1, max_n + 1) for k in range(n + 1)))
    yield _check("recurrence N = N>0(k) + k N>0(k-1)", (
        (f"n={n} k={k} b={b}", cg.count_distinct(n, k, b),
         cg.count_distinct_positive(n, k, b) + k * cg.count_distinct_positive(n, k - 1, b))
        for n, k, b in _triples(max_n) if k >= 1))
    yield _check("T_n(b) vs enumeration", (
        (f"n={n} b={b}", cg.subset_sum_count(n, b), oracle.brute_subset_sum(n, b))
        for n in range(1, min(max_n, oracle.HYPERCUBE_CAP) + 1) for b in range(n)))
    yield _check("T'_n(b) vs enumeration", (
        (f"n={n} b={b}", cg.subset_sum_count_excl(n, b), oracle.brute_subset_sum(n, b, True))
        for n in range(1, min(max_n, oracle.HYPERCUBE_CAP) + 1) for b in range(n)))
    tol = oracle.DEFINITION_TOL
    yield _check("product coefficients vs complex product", (
        (f"n={n} m={m}", True,
         bool(max(abs(a - c) for a, c in zip(cg.product_coefficients(n, m),
                                              oracle.complex_product_coeffs(n, m))) < tol))
        for n in range(1, min(max_n, oracle.PRODUCT_CAP) + 1) for m in range(n + 1)))


def vt_suite(max_n: int) -> Iterator[CheckResult]:
    def cases():
        for n in range(1, max_n + 1):
            for b in range(n + 1):
                size, dist = oracle.brute_vt(n, b)
                got = (vt.vt_size(n, b), vt.vt_weight_distribution(n, b).counts)
                yield f"n={n} b={b}", got, (size, dist.counts)
    yield _check("|VT_b(n)| and weights vs hypercube scan", cases())
    yield _check("sum_b |VT_b(n)| = 2^n", (
        (f"n={n}", sum(vt.vt_size(n, b) for b in range(n + 1)), 2**n)
        for n in range(1, max_n + 1)))
    yield _check("|VT_0(n)| is maximal", (
        (f"n={n} b={b}", True, vt.vt_size(n, 0) >= vt.vt_size(n, b))
        for n in range(1, max_n + 1) for b in range(n + 1)))
    yield _check("|VT_b(n)| = T'_{n+1}(b)", (
        (f"n={n} b={b}", vt.vt_size(n, b), cg.subset_sum_count_excl(n + 1, b))
        for n in range(1, max_n + 1) for b in range(n + 1)))


def necklace_suite(max_n: int) -> Iterator[CheckResult]:
    yield _check("fixed-density necklaces vs rotation classes", (
        (f"n={n} k={k}", nk.fixed_density_necklaces(n, k), oracle.brute_necklaces(n, k))
        for n in range(1, max_n + 1) for k in range(n + 1)))
    yield _check("fixed-density Lyndon words vs aperiodic classes", (
        (f"n={n} k={k}", nk.fixed_density_lyndon(n, k), oracle.brute_necklaces(n, k, True))
        for n in range(1, max_n + 1) for k in range(n + 1)))
    odd = [n for n in range(1, max_n + 1) if n % 2]
    yield _check("M(2,n) = T_n(1) for odd n", (
        (f"n={n}", nk.necklace_poly(2, n), cg.subset_sum_count(n, 1)) for n in odd))
    yield _check("M'(2,n) = T'_n(1) for odd n", (
        (f"n={n}", nk.quasi_necklace_poly(2, n), cg.subset_sum_count_excl(n, 1)) for n in odd))
    yield _check("parity: necklaces = P_n(k,0), Lyndon = P_n(k,1)", (
        (f"n={n} k={k}",
         (nk.fixed_density_necklaces(n, k), nk.fixed_density_lyndon(n, k)),
         (cg.count_distinct_unordered(n, k, 0), cg.count_distinct_unordered(n, k, 1)))
        for n in range(1, max_n + 1) for k in range(n + 1) if n % 2 or k % 2))


SUITES: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "arith": arith_suite,
    "congruence": congruence_suite,
    "vt": vt_suite,
    "necklace": necklace_suite,
}


# largest max_n each suite's oracles accept
MAX_N = {
    "arith": oracle.RAMANUJAN_CAP,
    "congruence": 22,  # C(22, 11) is the last central binomial under SUBSET_CAP
    "vt": oracle.VT_CAP,
    "necklace": oracle.NECKLACE_CAP,
}


def run_suite(name: str, max_n: int) -> list[CheckResult]:
    """Run one suite (or ``"all"``) and collect its results in order.

    Raises :class:`CapacityError` before doing any work if ``max_n`` is
    beyond what a requested suite's oracles can enumerate.
    """
    names = list(SUITES) if name == "all" else [name]
    for s in names:
        if max_n > MAX_N[s]:
            raise CapacityError(f"suite {s!r} supports --max-n up to {MAX_N[s]}")
    out = []
    for s in names:
        out.extend(SUITES[s](max_n))
    return out
