"""Varshamov-Tenengolts codes.

VT_b(n) holds the length-n binary words with sum(i * y_i) = b (mod n + 1).
We list a small code, read off its weight distribution, and then evaluate
code sizes far beyond what enumeration could reach.
"""
import sys

from vtcount import vt_enumerate, vt_member, vt_size, vt_weight_distribution
from vtcount.oracle import brute_vt

# %% the six words of VT_0(5)
words = vt_enumerate(5, 0)
print([str(w) for w in words])
print(vt_member("01010", 5, 0), vt_member("10000", 5, 0))

# %% weight distribution from the closed form vs a hypercube scan
print(list(vt_weight_distribution(5, 0)), brute_vt(5, 0)[1].counts)

# %% b = 0 always gives the largest code
n = 20
sizes = [vt_size(n, b) for b in range(n + 1)]
print(sizes)
assert max(sizes) == sizes[0] and sum(sizes) == 2**n

# %% code length 99999: modulus 100000, a 30098-digit answer in milliseconds
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
big = vt_size(99999, 0)
s = str(big)
print(len(s), s[:20] + "...")

# %% weight distributions scale too (one closed-form evaluation per weight)
dist = vt_weight_distribution(300, 0)
print(dist.total == vt_size(300, 0), max(dist) == dist[150])
