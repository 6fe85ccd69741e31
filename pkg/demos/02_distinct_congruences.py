"""Counting x_1 + ... + x_k = b (mod n) with distinct coordinates.

N_n(k, b) counts ordered solutions, P_n(k, b) = N_n(k, b) / k! counts the
k-element subsets of Z_n with the given sum, and N_n^{>0}(k, b) further
forbids the residue 0.
"""
import math

from vtcount import (
    count_distinct,
    count_distinct_positive,
    count_distinct_unordered,
    count_unrestricted,
    product_coefficients,
)
from vtcount.oracle import brute_count_distinct

# %% a first example: 2-subsets of Z_5 summing to 0 are {1,4} and {2,3}
print(count_distinct_unordered(5, 2, 0), count_distinct(5, 2, 0))

# %% compare with brute force over a grid
for n in range(1, 11):
    for k in range(n + 1):
        for b in range(n):
            assert count_distinct(n, k, b) == brute_count_distinct(n, k, b)
print("closed form matches enumeration for n <= 10")

# %% when gcd(n, k) = 1 the count does not depend on b
n, k = 9, 4
print({count_distinct(n, k, b) for b in range(n)}, math.factorial(k) * math.comb(n, k) // n)

# %% with n = 2k + 1 the unordered count is a Catalan number
print([count_distinct_unordered(2 * k + 1, k, 0) for k in range(10)])

# %% removing the zero residue
n, k, b = 12, 5, 7
print(count_distinct(n, k, b), count_distinct_positive(n, k, b) + k * count_distinct_positive(n, k - 1, b))

# %% the generating product behind all of this: prod_j (1 + z w^(jm))
for m in range(7):
    print(m, list(product_coefficients(6, m)))

# %% without the distinctness restriction the answer is l * n^(k-1)
print(count_unrestricted([2, 4], 2, 6), count_unrestricted([2, 4], 3, 6))

# %% exact at sizes where no float would survive
v = count_distinct_unordered(1000, 400, 17)
print(len(str(v)), "digits")
