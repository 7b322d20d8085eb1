"""Exact polynomial / rational-function arithmetic."""

import random

import pytest

from branchgf.errors import (
    NonIntegerCoefficientError,
    NonUnitConstantTermError,
    ZeroDenominatorError,
)
from branchgf.polyring import (
    ONE,
    Poly,
    RatFun,
    bareiss_det,
    geometric_factors,
    one_minus,
    poly_gcd,
    poly_product,
    ratfun_eq,
    ratfun_sum,
    resolvent_column,
)


def test_poly_mul_identity():
    assert (Poly([1, -3, 1]) * Poly([1])).coeffs == (1, -3, 1)


def test_poly_mul_distributes():
    assert (Poly([1, -1]) * Poly([1, -2])).coeffs == (1, -3, 2)


def test_poly_add_cancellation():
    assert (Poly([1, -8, 14]) + Poly([0, 8, -14])).coeffs == (1,)


def test_poly_canonical_length():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).coeffs == ()
    assert Poly().is_zero


def test_poly_eval():
    p = Poly([1, -3, 2])
    assert p(0) == 1 and p(1) == 0 and p(3) == 10


def test_poly_divexact_rejects_inexact():
    with pytest.raises(ValueError):
        Poly([1, 1]).divexact(Poly([1, -1]))


@pytest.mark.parametrize(
    "a,b,g",
    [
        ([0, 2], [2, -4], [2]),
        ([1, -4, 4], [1, -2], [1, -2]),
        ([1, -3, 2], [1, -1], [1, -1]),
        ([6], [4], [2]),
    ],
)
def test_poly_gcd(a, b, g):
    assert poly_gcd(Poly(a), Poly(b)) == Poly(g)


def test_normalize_common_content():
    f = RatFun(Poly([0, 2]), Poly([2, -4]))
    assert f.num == Poly([0, 1]) and f.den == Poly([1, -2])


def test_normalize_gcd_cancellation():
    f = RatFun(Poly([1, -4, 4]), Poly([1, -2]))
    assert f.num == Poly([1, -2]) and f.den == ONE


def test_normalize_zero_numerator():
    f = RatFun(Poly(), Poly([1, -6]))
    assert f.is_zero and f.den == ONE


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        RatFun(Poly([1]), Poly())


def test_normalize_zero_constant_term():
    with pytest.raises(NonUnitConstantTermError):
        RatFun(Poly([1]), Poly([0, 1]))


def test_ratfun_additive_identity():
    f = RatFun(Poly([1]), Poly([1, -1]))
    assert f + RatFun(Poly()) == f


def test_ratfun_partial_fraction_sum():
    # 1/(6(1-6t)) + 1/(2(1-2t)) + 1/(3(1-3t))
    total = ratfun_sum(
        [
            RatFun(Poly([1]), Poly([6]) * one_minus(6)),
            RatFun(Poly([1]), Poly([2]) * one_minus(2)),
            RatFun(Poly([1]), Poly([3]) * one_minus(3)),
        ]
    )
    expected = RatFun(
        Poly([1, -8, 14]), poly_product([one_minus(2), one_minus(3), one_minus(6)])
    )
    assert ratfun_eq(total, expected)


def test_ratfun_monomial_product():
    f = RatFun(Poly([0, 1]), one_minus(1)) * RatFun(Poly([0, 1]), one_minus(2))
    assert f == RatFun(Poly([0, 0, 1]), one_minus(1) * one_minus(2))


def test_series_two_factor():
    f = RatFun(Poly([1]), one_minus(1) * one_minus(2))
    assert f.series(4) == [1, 3, 7, 15, 31]


def test_series_three_factor():
    f = RatFun(Poly([1, -3, 1]), poly_product([one_minus(1), one_minus(2), one_minus(3)]))
    assert f.series(3) == [1, 3, 8, 21]


def test_series_constant():
    assert RatFun(Poly([1])).series(4) == [1, 0, 0, 0, 0]


def test_series_non_integer_coefficient():
    f = RatFun(Poly([1]), Poly([2, -1]))
    with pytest.raises(NonIntegerCoefficientError):
        f.series(3)


def test_series_roundtrip_recurrence():
    # den * series must reproduce num coefficientwise.
    f = RatFun(Poly([1, -3, 1]), poly_product([one_minus(1), one_minus(2), one_minus(3)]))
    coeffs = f.series(12)
    den, num = f.den, f.num
    for k in range(13):
        acc = sum(den[i] * coeffs[k - i] for i in range(min(k, den.degree) + 1))
        assert acc == num[k]


def test_ratfun_eq_unreduced_and_unequal():
    a = RatFun(Poly([1]), one_minus(2))
    b = RatFun(Poly([1, 1]), Poly([1, 1]) * one_minus(2))
    assert ratfun_eq(a, b)
    assert not ratfun_eq(a, RatFun(Poly([1]), one_minus(1)))


def test_resolvent_two_class_example():
    col = resolvent_column([[1, 0], [2, 2]])
    assert col[0] == RatFun(Poly([1]), one_minus(1))
    assert col[1] == RatFun(Poly([0, 2]), one_minus(1) * one_minus(2))
    assert ratfun_sum(col) == RatFun(Poly([1]), one_minus(1) * one_minus(2))


def test_resolvent_single_zero_class():
    assert resolvent_column([[0]]) == [RatFun(Poly([1]))]


def test_resolvent_three_class_column_sum():
    col = resolvent_column([[1, 0, 0], [1, 2, 0], [1, 0, 3]])
    total = ratfun_sum(col)
    expected = RatFun(
        Poly([1, -3, 1]), poly_product([one_minus(1), one_minus(2), one_minus(3)])
    )
    assert total == expected


def test_resolvent_rejects_bad_input():
    with pytest.raises(ValueError):
        resolvent_column([[1, 0], [2, -1]])
    with pytest.raises(ValueError):
        resolvent_column([[1, 0]])


def test_bareiss_det_matches_cofactor_expansion():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        mat = [
            [Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) for _ in range(n)]
            for _ in range(n)
        ]
        assert bareiss_det(mat) == _naive_det(mat)


def _naive_det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = Poly()
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _naive_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def test_geometric_factors():
    den = poly_product([one_minus(2), one_minus(3), one_minus(6)])
    c, factors, rest = geometric_factors(den)
    assert (c, factors, rest) == (1, [(2, 1), (3, 1), (6, 1)], ONE)
    c, factors, rest = geometric_factors(one_minus(2) * one_minus(2))
    assert factors == [(2, 2)]


def test_display_strings():
    f = RatFun(
        Poly([1, -3, 1]), poly_product([one_minus(1), one_minus(2), one_minus(3)])
    )
    assert str(f) == "(1 - 3*t + t^2)/((1 - t)*(1 - 2*t)*(1 - 3*t))"
    assert str(RatFun(Poly([1]), one_minus(2))) == "1/(1 - 2*t)"
    assert str(RatFun(Poly([1]))) == "1"
    assert str(RatFun(Poly([0, 2]), one_minus(1) * one_minus(2))) == "2*t/((1 - t)*(1 - 2*t))"


def _random_ratfun(rng):
    num = Poly([rng.randint(-6, 6) for _ in range(rng.randint(0, 4))])
    while True:
        den = Poly(
            [rng.choice([1, 1, 2, 3, -1, -2])]
            + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))]
        )
        if not den.is_zero and den[0] != 0:
            return RatFun(num, den)


def test_randomized_normalization_invariants():
    # 10^4 random arithmetic results all stay canonical.
    rng = random.Random(20260810)
    for i in range(10_000):
        a, b = _random_ratfun(rng), _random_ratfun(rng)
        f = a + b if i % 2 else a * b
        assert not f.den.is_zero
        assert f.den[0] >= 1
        g = poly_gcd(f.num, f.den)
        assert g == ONE or (f.num.is_zero and f.den == ONE)


def test_scalar_constructors():
    from fractions import Fraction

    assert RatFun.from_int(5) == RatFun(Poly([5]))
    third = RatFun.from_fraction(Fraction(2, 6))
    assert third.num == Poly([1]) and third.den == Poly([3])


def test_randomized_add_commutative_associative():
    rng = random.Random(5)
    for _ in range(300):
        a, b, c = (_random_ratfun(rng) for _ in range(3))
        assert ratfun_eq(a + b, b + a)
        assert ratfun_eq((a + b) + c, a + (b + c))
        assert ratfun_eq(a * b, b * a)
