import math

import pytest

from selinks import (
    UsageError,
    WeightSystem,
    binomial,
    branched_cover,
    fermat_cy_moduli,
    hyperbolic_moduli,
    moduli_count,
)


def test_moduli_count_named_covers():
    # 7-dimensional Fermat Calabi-Yau cover, k = 13
    mc = moduli_count(WeightSystem((4, 13, 13, 13, 13), 52))
    assert (mc.complex_dim, mc.real_dim) == (19, 38)
    # 5-dimensional hyperbolic cover, (l, k) = (4, 3)
    mc = moduli_count(WeightSystem((4, 3, 3, 3), 12))
    assert (mc.complex_dim, mc.real_dim) == (6, 12)
    # cubic Euclidean cover, k = 7
    mc = moduli_count(WeightSystem((3, 7, 7, 7), 21))
    assert (mc.h0_degree, mc.h0_weights_sum) == (11, 10)
    assert (mc.complex_dim, mc.real_dim) == (1, 2)
    # d = 6 Euclidean cover, k = 5
    mc = moduli_count(WeightSystem((6, 5, 10, 15), 30))
    assert (mc.h0_degree, mc.h0_weights_sum) == (8, 7)
    assert (mc.complex_dim, mc.real_dim) == (1, 2)


def test_moduli_count_invariants():
    for weights, d in [((4, 3, 3, 3), 12), ((1, 1), 1), ((6, 5, 10, 15), 30)]:
        mc = moduli_count(WeightSystem(weights, d))
        assert mc.complex_dim == mc.h0_degree - mc.h0_weights_sum
        assert mc.real_dim == 2 * max(mc.complex_dim, 0)


def test_moduli_count_negative_raw_value():
    # h^0(O(1)) = 2 but the weight sum contributes 4: raw count -2, real 0
    mc = moduli_count(WeightSystem((1, 1), 1))
    assert mc.complex_dim == -2
    assert mc.real_dim == 0


def test_fermat_cy_moduli_closed_form():
    assert fermat_cy_moduli(3) == 1
    assert fermat_cy_moduli(4) == 19
    assert fermat_cy_moduli(5) == 101
    with pytest.raises(UsageError):
        fermat_cy_moduli(2)


def test_fermat_cy_moduli_matches_literal_count_and_is_k_independent():
    for m in range(3, 8):
        expected = fermat_cy_moduli(m)
        ks = [k for k in range(m + 1, 100) if math.gcd(k, m) == 1][:3]
        for k in ks:
            cover = branched_cover(k, WeightSystem((1,) * m, m)).cover
            assert moduli_count(cover).complex_dim == expected, (m, k)


def test_fermat_cy_moduli_exponential_growth():
    for m in range(4, 13):
        assert fermat_cy_moduli(m + 1) > 2 * fermat_cy_moduli(m)


def test_hyperbolic_moduli():
    assert hyperbolic_moduli(3, 4) == 6
    assert hyperbolic_moduli(4, 5) == 40
    for m in range(3, 9):
        assert hyperbolic_moduli(m, m + 1) == binomial(2 * m, m + 1) - m * m
    with pytest.raises(UsageError):
        hyperbolic_moduli(3, 7)


def test_hyperbolic_moduli_matches_literal_count():
    for m, l, k in [(3, 4, 3), (4, 5, 4), (5, 6, 5)]:
        cover = branched_cover(k, WeightSystem((1,) * m, l)).cover
        assert moduli_count(cover).complex_dim == hyperbolic_moduli(m, l)
