import math
import threading

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from vtcount import arith
from vtcount.arith import ArithContext, Factorization
from vtcount.oracle import brute_ramanujan


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_phi(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def naive_mu(n):
    # squarefree-sign oracle
    for p in range(2, math.isqrt(n) + 1):
        if n % (p * p) == 0:
            return 0
    k = 0
    m = n
    for p in range(2, n + 1):
        if m % p == 0:
            k += 1
            m //= p
        if m == 1:
            break
    return (-1) ** k


@pytest.mark.parametrize("n, primes", [
    (1, ()),
    (12, ((2, 2), (3, 1))),
    (100000, ((2, 5), (5, 5))),
    (9999991, ((9999991, 1),)),
])
def test_factorize(n, primes):
    f = arith.factorize(n)
    assert f.primes == primes
    assert math.prod(p**e for p, e in f) == n


@given(st.integers(1, 10**7))
def test_factorize_multiplies_back(n):
    f = arith.factorize(n)
    assert math.prod(p**e for p, e in f) == n
    ps = [p for p, _ in f]
    assert ps == sorted(set(ps))


def test_factorization_rejects_bad_data():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(6, ((3, 1), (2, 1)))


@pytest.mark.parametrize("fn", [arith.factorize, arith.divisors, arith.mobius, arith.euler_phi])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_divisors_examples():
    assert arith.divisors(1) == (1,)
    assert arith.divisors(6) == (1, 2, 3, 6)
    assert list(arith.divisors(30)) == naive_divisors(30)


def test_divisors_vs_trial_division():
    for n in range(1, 2001):
        assert list(arith.divisors(n)) == naive_divisors(n)


def test_mobius_phi_examples():
    assert [arith.mobius(n) for n in (1, 6, 12)] == [1, 1, 0]
    assert [arith.euler_phi(n) for n in (1, 6, 100)] == [1, 2, 40]


def test_mobius_phi_vs_naive():
    for n in range(1, 10**4 + 1):
        assert arith.mobius(n) == naive_mu(n), n
    for n in range(1, 2001):
        assert arith.euler_phi(n) == naive_phi(n), n


def test_phi_large_by_multiplicativity():
    # sample above the naive range: phi(n) = n prod (1 - 1/p)
    for n in range(2001, 10**4 + 1, 97):
        assert arith.euler_phi(n) == naive_phi(n)


@pytest.mark.parametrize("n, m, want", [(6, 0, 2), (5, 1, -1), (6, 4, -1)])
def test_ramanujan_examples(n, m, want):
    assert arith.ramanujan_sum(n, m) == want
    assert arith.von_sterneck(n, m) == want


def test_ramanujan_special_values():
    for n in range(1, 200):
        assert arith.ramanujan_sum(n, 0) == arith.euler_phi(n)
        assert arith.ramanujan_sum(n, 1) == arith.mobius(n)


def test_ramanujan_three_routes():
    for n in range(1, 201):
        for m in range(-200, 201, 7):
            k = arith.ramanujan_sum(n, m)
            assert k == arith.von_sterneck(n, m)
            assert k == brute_ramanujan(n, m)


@given(st.integers(1, 10**6), st.integers(-10**9, 10**9))
def test_ramanujan_symmetry_and_period(n, m):
    c = arith.ramanujan_sum(n, m)
    assert c == arith.ramanujan_sum(n, -m)
    assert c == arith.ramanujan_sum(n, m % n)
    assert c == arith.von_sterneck(n, m)


def test_divisor_sum_identity():
    for n in range(1, 101):
        for m in range(1, 101):
            s = sum(arith.ramanujan_sum(d, m) for d in arith.divisors(n))
            assert s == (n if m % n == 0 else 0)


def test_binomial_examples():
    assert arith.binomial(5, 2) == 10
    assert arith.binomial(4, 7) == 0
    assert arith.binomial(4, -1) == 0
    with pytest.raises(ValueError):
        arith.binomial(-1, 0)


def test_binomial_1000_500_by_pascal():
    row = [1]
    for _ in range(1000):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    c = arith.binomial(1000, 500)
    assert c == row[500]
    assert str(c).startswith("270288")
    assert len(str(c)) == 300


def test_binomial_pascal_recurrence():
    for n in range(1, 201):
        for k in range(n + 1):
            assert arith.binomial(n, k) == arith.binomial(n - 1, k - 1) + arith.binomial(n - 1, k)


def test_binomial_rational_index():
    assert arith.binomial_at(6, Fraction(3, 2)) == 0
    assert arith.binomial_at(6, Fraction(4, 2)) == 15
    assert arith.binomial_at(6, 2) == 15


def test_context_isolated_and_thread_safe():
    ctx = ArithContext()
    results = []

    def work():
        results.append([ctx.ramanujan_sum(n, 12) for n in range(1, 500)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    want = [arith.ramanujan_sum(n, 12) for n in range(1, 500)]
    assert all(r == want for r in results)
    for n in range(1, 500):
        ds = ctx.divisors(n)
        assert ds[0] == 1 and ds[-1] == n
