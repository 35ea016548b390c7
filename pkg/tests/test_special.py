from fractions import Fraction as F
from math import factorial

import pytest

from pcmix.poly import Poly, X
from pcmix.series import exp_series, log1p_scaled, one_series, t_series
from pcmix.special import (
    StirlingTable,
    bernoulli_order,
    cauchy_first,
    cauchy_second,
    falling_poly,
    frobenius_number,
    lif_series,
    rising_poly,
    stirling1,
    stirling2,
)


def partitions_count(n, k):
    # Brute-force count of set partitions of {0..n-1} into k nonempty blocks.
    if n == 0:
        return 1 if k == 0 else 0

    def rec(items, blocks):
        if not items:
            return 1 if len(blocks) == k else 0
        if len(blocks) > k:
            return 0
        head, rest = items[0], items[1:]
        total = 0
        for i in range(len(blocks)):
            total += rec(rest, blocks[:i] + [blocks[i] + [head]] + blocks[i + 1 :])
        total += rec(rest, blocks + [[head]])
        return total

    return rec(list(range(n)), [])


def test_stirling_base_cases():
    assert stirling1(0, 0) == 1
    for n in range(1, 10):
        assert stirling1(n, n) == 1
        assert stirling1(n, 0) == 0
        assert stirling2(n, n) == 1
        assert stirling2(n, 1) == 1


def test_stirling_recurrences_hold_for_stored_entries():
    for n in range(12):
        for k in range(n + 2):
            lower = stirling1(n, k - 1) if 1 <= k <= n + 1 else 0
            same = stirling1(n, k) if k <= n else 0
            assert stirling1(n + 1, k) == lower - n * same
            lower2 = stirling2(n, k - 1) if 1 <= k <= n + 1 else 0
            same2 = stirling2(n, k) if k <= n else 0
            assert stirling2(n + 1, k) == lower2 + k * same2


def test_stirling1_against_falling_factorial_expansion():
    # Independent oracle: multiply the factors of the falling factorial.
    for n in range(11):
        p = Poly((1,))
        for i in range(n):
            p = p * Poly((-i, 1))
        for k in range(n + 1):
            assert stirling1(n, k) == p.coefficient(k)
    assert stirling1(3, 1) == 2 and stirling1(3, 2) == -3


def test_stirling2_against_partition_count():
    for n in range(7):
        for k in range(n + 1):
            assert stirling2(n, k) == partitions_count(n, k)
    assert stirling2(3, 2) == 3


def test_stirling_matrix_orthogonality():
    for n in range(11):
        for m in range(11):
            total = sum(
                stirling1(n, k) * stirling2(k, m) for k in range(m, n + 1)
            ) if m <= n else 0
            assert total == (1 if n == m else 0)


def test_stirling1_series_bridge():
    # m! S1(l, m) / l! is the t^l coefficient of log(1+t)^m.
    for m in range(7):
        power = log1p_scaled(1, 8) ** m
        for l in range(8):
            expected = (
                F(factorial(m) * stirling1(l, m), factorial(l)) if l >= m else F(0)
            )
            assert power.coeffs[l].constant_value == expected


def test_stirling_domain_errors():
    with pytest.raises(ValueError):
        stirling1(2, 3)
    with pytest.raises(ValueError):
        stirling2(-1, 0)
    with pytest.raises(ValueError):
        StirlingTable("third")


def test_cauchy_first_values():
    for n in range(6):
        assert cauchy_first(n, 0) == (1 if n == 0 else 0)
    assert cauchy_first(1, 1) == F(1, 2)
    assert cauchy_first(2, 1) == F(-1, 6)


def test_cauchy_first_order_two_by_squaring():
    gf = log1p_scaled(1, 8).divide_t().inverse()
    squared = gf * gf
    for n in range(6):
        assert cauchy_first(n, 2) == squared.egf_coefficient(n).constant_value
    assert cauchy_first(2, 2) == squared.egf_coefficient(2).constant_value


def test_cauchy_second_values():
    for r in range(4):
        assert cauchy_second(0, r) == 1
    assert cauchy_second(1, 1) == F(-1, 2)
    assert cauchy_second(2, 1) == F(5, 6)


def test_cauchy_gf_relation_between_kinds():
    # First-kind generating function equals (1+t) times the second-kind one.
    n = 10
    first = log1p_scaled(1, n).divide_t().inverse()
    second_base = (one_series(n) + t_series(n)) * log1p_scaled(1, n)
    second = second_base.divide_t().inverse()
    assert first == (one_series(n - 1) + t_series(n - 1)) * second
    for m in range(n - 1):
        assert cauchy_first(m, 1) == first.egf_coefficient(m).constant_value
        assert cauchy_second(m, 1) == second.egf_coefficient(m).constant_value


def test_cauchy_higher_order_against_series_power():
    for r in range(4):
        gf = (log1p_scaled(1, 13).divide_t().inverse()) ** r
        gf2 = (
            ((one_series(13) + t_series(13)) * log1p_scaled(1, 13)).divide_t().inverse()
        ) ** r
        for n in range(13 - 1):
            assert cauchy_first(n, r) == gf.egf_coefficient(n).constant_value
            assert cauchy_second(n, r) == gf2.egf_coefficient(n).constant_value


def test_bernoulli_order_values():
    for r in range(5):
        assert bernoulli_order(0, r) == 1
    assert bernoulli_order(1, 1) == F(-1, 2)
    assert bernoulli_order(2, 1) == F(1, 6)


def test_bernoulli_order_against_series_power():
    base = (exp_series(14) - one_series(14)).divide_t().inverse()
    for r in range(5):
        gf = base ** r
        for n in range(13):
            assert bernoulli_order(n, r) == gf.egf_coefficient(n).constant_value


def test_frobenius_number_against_series():
    lam = F(5, 3)
    base = (exp_series(10) - one_series(10) * lam).inverse() * (1 - lam)
    for r in range(4):
        gf = base ** r
        for n in range(10):
            assert frobenius_number(n, r, lam) == gf.egf_coefficient(n).constant_value
    with pytest.raises(ValueError):
        frobenius_number(2, 1, 1)


def test_domain_errors():
    with pytest.raises(ValueError):
        cauchy_first(-1, 1)
    with pytest.raises(ValueError):
        cauchy_second(2, -1)
    with pytest.raises(ValueError):
        bernoulli_order(-2, 0)


def test_lif_constant_term_is_one():
    for k in (-3, -1, 0, 1, 4):
        assert lif_series(k, 5).coeffs[0] == Poly((1,))


def test_lif_zero_is_exp():
    assert lif_series(0, 8) == exp_series(8)


def test_lif_one_times_t():
    n = 9
    assert lif_series(1, n) * t_series(n) == exp_series(n) - one_series(n)


def test_lif_index_difference():
    for k in (-1, 0, 2):
        diff = lif_series(k, 7) - lif_series(k - 1, 7)
        for n in range(7):
            expected = (F(n + 1) ** -k - F(n + 1) ** -(k - 1)) / factorial(n)
            assert diff.coeffs[n].constant_value == expected


def test_factorial_polynomials():
    assert falling_poly(0) == Poly((1,)) and rising_poly(0) == Poly((1,))
    assert falling_poly(2) == X ** 2 - X
    assert rising_poly(2) == X ** 2 + X
    for n in range(11):
        assert rising_poly(n) == falling_poly(n).compose(-X) * (-1) ** n
        for k in range(n + 1):
            assert falling_poly(n).coefficient(k) == stirling1(n, k)
