"""Ramanujan sums three ways.

c_n(m) is the sum of the m-th powers of the primitive n-th roots of unity.
It is always an integer.  The library evaluates it exactly with a divisor
sum; here we compare that with the von Sterneck closed form and with the
floating-point definition.
"""
import numpy as np

from vtcount import arith, oracle

# %% a small table: rows n = 1..10, columns m = 0..11
table = np.array([[arith.ramanujan_sum(n, m) for m in range(12)] for n in range(1, 11)])
print(table)

# column m = 0 is Euler's totient, column m = 1 is the Moebius function
assert list(table[:, 0]) == [arith.euler_phi(n) for n in range(1, 11)]
assert list(table[:, 1]) == [arith.mobius(n) for n in range(1, 11)]

# %% the three routes agree
for n in range(1, 60):
    for m in range(-60, 61):
        c = arith.ramanujan_sum(n, m)
        assert c == arith.von_sterneck(n, m) == oracle.brute_ramanujan(n, m)
print("divisor formula, von Sterneck and the definition agree for n < 60")

# %% summing c_d(m) over d | n gives n when n | m and 0 otherwise
print([sum(arith.ramanujan_sum(d, m) for d in arith.divisors(12)) for m in range(1, 25)])

# %% c_n is n-periodic; its discrete Fourier transform is n on the units mod n
n = 12
f = oracle.PeriodicSamples([arith.ramanujan_sum(n, j) for j in range(1, n + 1)])
print(np.round(oracle.dft(f).values.real, 9))
