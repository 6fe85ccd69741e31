"""Necklace counts and how they meet the subset-sum counts.

The number of binary Lyndon words of length n is M(2, n).  For odd n it
equals T_n(1), the number of subsets of {1, ..., n} with sum 1 mod n.
"""
from vtcount import (
    count_distinct_unordered,
    fixed_density_lyndon,
    fixed_density_necklaces,
    necklace_poly,
    quasi_necklace_poly,
    subset_sum_count,
    subset_sum_count_excl,
)
from vtcount.oracle import brute_necklaces

# %% M(q, n) for a few alphabets
for q in (2, 3, 4):
    print(q, [necklace_poly(q, n) for n in range(1, 11)])

# %% the half-sized variant is rational in general
print(quasi_necklace_poly(3, 1), quasi_necklace_poly(2, 9))

# %% odd n: M(2, n) = T_n(1) and M'(2, n) = T'_n(1)
for n in range(1, 20, 2):
    assert necklace_poly(2, n) == subset_sum_count(n, 1)
    assert quasi_necklace_poly(2, n) == subset_sum_count_excl(n, 1)
print("necklace identities hold for odd n < 20")

# %% fixed density, against explicit rotation classes
n = 12
print([fixed_density_necklaces(n, k) for k in range(n + 1)])
print([brute_necklaces(n, k) for k in range(n + 1)])
print([fixed_density_lyndon(n, k) for k in range(n + 1)])

# %% when n or k is odd these are the unordered congruence counts at b = 0 and b = 1
n = 15
print([fixed_density_necklaces(n, k) - count_distinct_unordered(n, k, 0) for k in range(n + 1)])
print([fixed_density_lyndon(n, k) - count_distinct_unordered(n, k, 1) for k in range(n + 1)])
