from fractions import Fraction as F

import pytest

from pcmix.families import (
    bernoulli_poly,
    catalogue_pairs,
    charlier_pair,
    frobenius_euler,
    mixed_hat_pair,
    mixed_pair,
    pc_hat_mixed,
    pc_hat_mixed_series,
    pc_mixed,
    pc_mixed_series,
    poisson_charlier,
    poly_cauchy_first,
    poly_cauchy_second,
)
from pcmix.poly import Poly, X
from pcmix.series import binomial_pow, exp_neg_series

A_SAMPLES = (F(1), F(2), F(-1), F(3, 7), F(-5, 2))
K_SAMPLES = (-2, -1, 0, 1, 2, 3)


def test_poisson_charlier_small():
    assert poisson_charlier(0, F(3, 7)) == Poly((1,))
    for a in A_SAMPLES:
        assert poisson_charlier(1, a) == X * (1 / a) - 1
    assert poisson_charlier(2, 1) == X ** 2 - 3 * X + 1


def test_poly_cauchy_small():
    for k in K_SAMPLES:
        assert poly_cauchy_first(0, k) == Poly((1,))
        assert poly_cauchy_first(1, k) == -X + F(2) ** -k
        assert poly_cauchy_second(1, k) == X - F(2) ** -k


def test_bernoulli_poly_small():
    assert bernoulli_poly(3, 0) == X ** 3
    assert bernoulli_poly(1, 1) == X - F(1, 2)
    assert bernoulli_poly(2, 1) == X ** 2 - X + F(1, 6)


def test_frobenius_euler_small():
    lam = F(5, 3)
    assert frobenius_euler(0, 2, lam) == Poly((1,))
    assert frobenius_euler(1, 1, lam) == X - 1 / (1 - lam)
    assert frobenius_euler(4, 0, lam) == X ** 4


def test_mixed_families_first_order():
    for k in K_SAMPLES:
        for a in A_SAMPLES:
            lead = 1 / (a * F(2) ** k)
            assert pc_mixed(0, k, a) == Poly((1,))
            assert pc_hat_mixed(0, k, a) == Poly((1,))
            assert pc_mixed(1, k, a) == Poly((F(-1) + lead, -1 / a))
            assert pc_hat_mixed(1, k, a) == Poly((F(-1) - lead, 1 / a))


def test_mixed_degree_and_leading_coefficient():
    for k in (-1, 0, 2):
        for a in (F(2), F(3, 7), F(-5, 2)):
            for n in range(9):
                p = pc_mixed(n, k, a)
                q = pc_hat_mixed(n, k, a)
                assert p.degree == n and q.degree == n
                assert p.lead == (-a) ** -n
                assert q.lead == a ** -n


def test_k_zero_collapse_of_generating_function():
    # With Lif index 0 the middle factor becomes 1 + t/a, so the whole
    # product is exp(-t) * (1 + t/a)^(1-x).
    for a in (F(1), F(2)):
        collapsed = exp_neg_series(8) * binomial_pow(a, Poly((1, -1)), 8)
        assert pc_mixed_series(0, a, 8) == collapsed


def test_route_equivalence_sample():
    for k, a in ((1, F(1)), (-2, F(3, 7)), (3, F(-5, 2))):
        pair = mixed_pair(k, a, 9)
        hat_pair = mixed_hat_pair(k, a, 9)
        for n in range(8):
            assert pair.polynomial(n) == pc_mixed(n, k, a)
            assert hat_pair.polynomial(n) == pc_hat_mixed(n, k, a)


def test_parameter_validation():
    with pytest.raises(ValueError):
        poisson_charlier(2, 0)
    with pytest.raises(ValueError):
        pc_mixed(2, 1, 0)
    with pytest.raises(ValueError):
        frobenius_euler(2, 1, 1)
    with pytest.raises(ValueError):
        bernoulli_poly(2, -1)
    with pytest.raises(ValueError):
        pc_mixed(-1, 1, 1)
    with pytest.raises(TypeError):
        pc_mixed(2, 1, 0.5)


def test_poly_cauchy_numbers_at_zero():
    for k in K_SAMPLES:
        assert poly_cauchy_first(1, k)(0) == F(2) ** -k
        assert poly_cauchy_second(1, k)(0) == -(F(2) ** -k)


def test_charlier_pair_matches_family():
    pair = charlier_pair(F(2), 9)
    for n in range(8):
        assert pair.polynomial(n) == poisson_charlier(n, F(2))


def test_catalogue_pairs_are_well_formed():
    pairs = catalogue_pairs(10)
    labels = [p.label for p in pairs]
    assert len(set(labels)) == len(labels)
    for pair in pairs:
        assert pair.order == 10
        assert pair.polynomial(0) == Poly((pair.polynomial(0).constant_value,))


def test_hat_k_zero_collapse():
    # With Lif index 0 the hat factor reduces to 1/(1 + t/a), so the whole
    # product is exp(-t) * (1 + t/a)^(x-1).
    for a in (F(1), F(2)):
        collapsed = exp_neg_series(8) * binomial_pow(a, Poly((-1, 1)), 8)
        assert pc_hat_mixed_series(0, a, 8) == collapsed


def test_hat_series_extraction_consistency():
    gf = pc_hat_mixed_series(1, F(1), 6)
    assert gf.egf_coefficient(3) == pc_hat_mixed(3, 1, F(1))
