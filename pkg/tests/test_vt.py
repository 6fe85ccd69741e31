import math

import pytest

from vtcount import CapacityError, vt
from vtcount.congruence import count_distinct_positive, subset_sum_count_excl
from vtcount.oracle import brute_vt
from vtcount.vt import BitVector, VTSpec

VT0_5 = {"00000", "10001", "01010", "11100", "00111", "11011"}


def test_spec_reduces_syndrome():
    assert VTSpec(5, 7).b == 1
    assert VTSpec(5, -1).b == 5
    with pytest.raises(ValueError):
        VTSpec(0, 0)


def test_bitvector():
    v = BitVector.from_string("01010")
    assert v.bits == (0, 1, 0, 1, 0)
    assert str(v) == "01010" and v.n == 5 and v.weight == 2
    with pytest.raises(ValueError):
        BitVector.from_string("0120")
    with pytest.raises(ValueError):
        BitVector((0, 2))


def test_member_examples():
    assert vt.vt_member("01010", 5, 0)
    assert not vt.vt_member("10000", 5, 0)
    for b in range(6):
        assert vt.vt_member("00000", VTSpec(5, b)) == (b == 0)
    with pytest.raises(ValueError):
        vt.vt_member("0101", 5, 0)


def test_paper_listing():
    words = {str(w) for w in vt.vt_enumerate(5, 0)}
    assert words == VT0_5
    assert all(vt.vt_member(w, 5, 0) for w in VT0_5)
    assert vt.vt_size(5, 0) == 6
    assert vt.vt_weight_count(5, 0, 2) == 2
    assert vt.vt_weight_count(5, 0, 3) == 2
    assert vt.vt_weight_count(5, 0, 0) == 1


def test_weight_distribution_examples():
    # weights of the six listed codewords: 0, 2, 2, 3, 3, 4
    dist = vt.vt_weight_distribution(5, 0)
    assert list(dist) == [1, 0, 2, 2, 1, 0]
    assert dist.total == 6
    assert list(vt.vt_weight_distribution(1, 0)) == [1, 0]
    assert vt.vt_weight_distribution(5, 1).total == 5


@pytest.mark.parametrize("n, b, want", [(5, 0, 6), (1, 0, 1), (5, 1, 5)])
def test_size_examples(n, b, want):
    assert vt.vt_size(n, b) == want


def test_weight_count_range():
    with pytest.raises(ValueError):
        vt.vt_weight_count(5, 0, 6)
    with pytest.raises(ValueError):
        vt.vt_weight_count(5, 0, -1)


def test_enumerate_order_and_small_cases():
    words = [str(w) for w in vt.vt_enumerate(5, 0)]
    assert words == sorted(VT0_5)
    assert [str(w) for w in vt.vt_enumerate(1, 0)] == ["0"]
    assert [str(w) for w in vt.vt_enumerate(2, 0)] == ["00", "11"]


def test_enumerate_cap(monkeypatch):
    with pytest.raises(CapacityError):
        vt.vt_enumerate(25, 0)
    with pytest.raises(CapacityError):
        vt.vt_enumerate(10, 0, cap=9)
    monkeypatch.setenv("VTCOUNT_ENUM_CAP", "3")
    with pytest.raises(CapacityError):
        vt.vt_enumerate(4, 0)
    assert len(vt.vt_enumerate(3, 0)) == vt.vt_size(3, 0)


def test_formula_vs_enumeration():
    for n in range(1, 17):
        for b in range(n + 1):
            words = vt.vt_enumerate(n, b)
            assert len(words) == vt.vt_size(n, b)
            tally = [0] * (n + 1)
            for w in words:
                tally[w.weight] += 1
            assert list(vt.vt_weight_distribution(n, b)) == tally


def test_formula_vs_brute_vt_small():
    for n in range(1, 11):
        for b in range(n + 1):
            size, dist = brute_vt(n, b)
            assert vt.vt_size(n, b) == size
            assert vt.vt_weight_distribution(n, b).counts == dist.counts


def test_hypercube_partition():
    for n in range(1, 513):
        assert sum(vt.vt_size(n, b) for b in range(n + 1)) == 2**n


def test_varshamov_maximality():
    for n in range(1, 129):
        top = vt.vt_size(n, 0)
        assert all(top >= vt.vt_size(n, b) for b in range(n + 1))


def test_cross_module_identities():
    for n in range(1, 17):
        for b in range(n + 1):
            for k in range(n + 1):
                assert vt.vt_weight_count(n, b, k) * math.factorial(k) == count_distinct_positive(n + 1, k, b)
    for n in range(1, 65):
        for b in range(n + 1):
            assert vt.vt_size(n, b) == subset_sum_count_excl(n + 1, b)


def test_weight_distribution_sums_to_size_large_n():
    for n in (100, 255, 511):
        for b in (0, 1, n // 2):
            assert vt.vt_weight_distribution(n, b).total == vt.vt_size(n, b)
