"""q-combinatorics: Gaussian binomials, q-Catalan polynomials, maj oracle."""

import random
from math import comb

import pytest

from qcatalan.qcomb import (
    ballot_words,
    catalan_sum,
    central_sum,
    gaussian_binomial,
    legendre3,
    major_index,
    q_catalan,
    q_catalan_maj_oracle,
    q_pochhammer,
    shifted_central_sum,
)
from qcatalan.ring import Poly


class PascalOracle:
    """Independent Gaussian binomial via the q-Pascal recurrence
    [n, k] = [n-1, k-1] + q^k [n-1, k]."""

    def __init__(self):
        self.memo = {}

    def __call__(self, n, k):
        if k < 0 or k > n:
            return Poly.zero()
        if k == 0 or k == n:
            return Poly([1])
        key = (n, k)
        if key not in self.memo:
            self.memo[key] = self(n - 1, k - 1) + self(n - 1, k).shift(k)
        return self.memo[key]


def test_pochhammer_examples():
    assert q_pochhammer(1, 0) == 1
    assert q_pochhammer(1, 2) == Poly([1, -1, -1, 1])
    assert q_pochhammer(2, 1) == Poly([1, 0, -1])


def test_binomial_factor_kernels():
    from qcatalan.qcomb import _div_one_minus, _mul_one_minus

    # p * (1 - q^t) / (1 - q^t) round-trips, and remainders raise
    rng = random.Random(55)
    for _ in range(200):
        t = rng.randint(1, 8)
        p = [rng.randint(-9, 9) for _ in range(rng.randint(0, 15))]
        assert _div_one_minus(_mul_one_minus(list(p), t), t) == p
    with pytest.raises(ValueError):
        _div_one_minus([1], 3)  # constants are not divisible by 1 - q^3
    with pytest.raises(ValueError):
        _div_one_minus([1, 1], 1)  # 1 + q is not divisible by 1 - q
    assert _div_one_minus([0, 0], 3) == []  # zero divides cleanly


def test_gaussian_examples():
    assert gaussian_binomial(2, 1) == Poly([1, 1])
    assert gaussian_binomial(4, 2) == Poly([1, 1, 2, 1, 1])
    assert gaussian_binomial(3, 5).is_zero()
    assert gaussian_binomial(-1, 0).is_zero()


def test_gaussian_pascal_and_symmetry():
    oracle = PascalOracle()
    rng = random.Random(777)
    for _ in range(160):
        n = rng.randint(0, 40)
        k = rng.randint(-2, n + 2)
        lhs = gaussian_binomial(n, k)
        assert lhs == oracle(n, k), (n, k)
        if 0 <= k <= n:
            assert lhs == gaussian_binomial(n, n - k)
            if n >= 1:
                # the mirror recurrence [n,k] = q^(n-k) [n-1,k-1] + [n-1,k]
                assert lhs == gaussian_binomial(n - 1, k - 1).shift(n - k) + (
                    gaussian_binomial(n - 1, k)
                )


def test_gaussian_division_always_exact():
    # the implementation asserts exactness internally; the q-Pochhammer
    # quotient definition must agree too
    for n in range(0, 18):
        for k in range(0, n + 1):
            quotient = q_pochhammer(1, n).divmod(
                q_pochhammer(1, k) * q_pochhammer(1, n - k)
            )
            assert quotient[1].is_zero()
            assert quotient[0] == gaussian_binomial(n, k)


def test_qcatalan_first_values():
    assert q_catalan(0) == 1
    assert q_catalan(1) == 1
    assert q_catalan(2) == Poly([1, 0, 1])
    assert q_catalan(3) == Poly([1, 0, 1, 1, 1, 0, 1])


def test_qcatalan_matches_definition():
    for k in range(0, 26):
        assert q_catalan(k) == gaussian_binomial(2 * k, k) - gaussian_binomial(
            2 * k, k + 1
        ).shift(1)


def test_two_definitions_agree():
    # (1 - q^(k+1)) C_k = (1 - q) [2k, k]
    for k in range(0, 41):
        lhs = Poly([1] + [0] * k + [-1]) * q_catalan(k)
        rhs = Poly([1, -1]) * gaussian_binomial(2 * k, k)
        assert lhs == rhs, k


def test_catalan_numbers_at_one():
    for k in range(0, 21):
        assert q_catalan(k).eval(1) == comb(2 * k, k) // (k + 1)


def test_ballot_words():
    assert list(ballot_words(0)) == [()]
    assert list(ballot_words(1)) == [(0, 1)]
    words2 = sorted(ballot_words(2))
    assert words2 == [(0, 0, 1, 1), (0, 1, 0, 1)]
    assert major_index((0, 0, 1, 1)) == 0
    assert major_index((0, 1, 0, 1)) == 2
    for k in range(0, 9):
        assert len(list(ballot_words(k))) == comb(2 * k, k) // (k + 1)
    for w in ballot_words(5):
        assert all(w[:i].count(0) >= w[:i].count(1) for i in range(len(w)))


def test_maj_oracle():
    assert q_catalan_maj_oracle(1) == 1
    assert q_catalan_maj_oracle(2) == Poly([1, 0, 1])
    assert q_catalan_maj_oracle(3) == Poly([1, 0, 1, 1, 1, 0, 1])
    for k in range(0, 9):
        assert q_catalan_maj_oracle(k) == q_catalan(k)
    with pytest.raises(ValueError):
        q_catalan_maj_oracle(11)


def test_legendre3():
    assert legendre3(1) == 1
    assert legendre3(2) == -1
    assert legendre3(-3) == 0
    assert legendre3(-1) == -1
    assert [legendre3(a) for a in range(6)] == [0, 1, -1, 0, 1, -1]


def test_catalan_sum_examples():
    assert catalan_sum(1) == 1
    assert catalan_sum(2) == Poly([1, 1])
    assert catalan_sum(3) == Poly([1, 1, 1, 0, 1])
    with pytest.raises(ValueError):
        catalan_sum(0)


def test_partial_sums_match_direct():
    for n in range(1, 14):
        cat = Poly.zero()
        cen = Poly.zero()
        shifted = Poly.zero()
        for k in range(n):
            cat = cat + q_catalan(k).shift(k)
            cen = cen + gaussian_binomial(2 * k, k).shift(k)
            shifted = shifted + gaussian_binomial(2 * k, k + 1).shift(k + 1)
        assert catalan_sum(n) == cat
        assert central_sum(n) == cen
        assert shifted_central_sum(n) == shifted
