"""Exact counts of distinct-coordinate solutions of x_1 + ... + x_k = b (mod n),
Varshamov-Tenengolts code sizes and weight distributions, and necklace counts.
"""
from ._errors import CapacityError, InexactDivisionError
from .arith import (
    ArithContext,
    Factorization,
    binomial,
    binomial_at,
    divisors,
    euler_phi,
    factorize,
    mobius,
    ramanujan_sum,
    von_sterneck,
)
from .congruence import (
    CoeffVector,
    CongruenceSpec,
    count_distinct,
    count_distinct_positive,
    count_distinct_unordered,
    count_unrestricted,
    product_coefficients,
    subset_sum_count,
    subset_sum_count_excl,
)
from .necklaces import (
    fixed_density_lyndon,
    fixed_density_necklaces,
    necklace_poly,
    quasi_necklace_poly,
)
from .vt import (
    BitVector,
    VTSpec,
    WeightDistribution,
    vt_enumerate,
    vt_member,
    vt_size,
    vt_weight_count,
    vt_weight_distribution,
)

__version__ = "0.1.0"
