import random
from fractions import Fraction

import pytest

from symident.exactalg import (MultiLaurent, Series, UniLaurent, det_cofactor,
                               det_fraction_free, laurent_eval, laurent_mul,
                               series_compose, series_sqrt)

from oracles import det_permutation_expansion


def rand_series(rng, order):
    return Series([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                   for _ in range(order + 1)], order)


def rand_unilaurent(rng, terms=4):
    return UniLaurent({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(terms)})


def rand_multilaurent(rng, nvars, terms=4):
    d = {}
    for _ in range(terms):
        key = tuple(rng.randint(-4, 4) for _ in range(nvars))
        d[key] = rng.randint(-9, 9)
    return MultiLaurent(nvars, d)


class TestSeries:
    def test_sqrt_identity(self):
        one = Series.one(5)
        assert series_sqrt(one) == one

    def test_sqrt_1_minus_4x(self):
        s = Series([1, -4], 3)
        t = series_sqrt(s)
        # derived by squaring back: these are the unique coefficients
        assert t == Series([1, -2, -2, -4], 3)
        assert t * t == s

    def test_sqrt_squares_back(self):
        s = Series([1, 1, 1], 10)
        t = series_sqrt(s)
        assert t * t == s

    def test_sqrt_requires_unit_constant(self):
        with pytest.raises(ValueError):
            series_sqrt(Series([2, 1], 4))

    def test_compose_identity(self):
        rng = random.Random(1)
        for _ in range(5):
            f = rand_series(rng, 8)
            assert series_compose(f, Series.x(8)) == f

    def test_compose_geometric(self):
        geom = Series([1, -1], 8).inverse()
        sq = series_compose(geom, Series([0, 0, 1], 8))
        assert sq == Series([1, 0, 1, 0, 1, 0, 1, 0, 1], 8)

    def test_compose_rejects_constant_term(self):
        with pytest.raises(ValueError):
            series_compose(Series.one(4), Series.one(4))

    def test_mixed_order_equality_refused(self):
        with pytest.raises(ValueError):
            Series.one(3) == Series.one(4)

    def test_order_is_min_of_operands(self):
        a = Series.one(3)
        b = Series.one(7)
        assert (a * b).order == 3
        assert (a + b).order == 3

    def test_inverse(self):
        rng = random.Random(2)
        for _ in range(5):
            s = rand_series(rng, 6)
            if s[0] == 0:
                continue
            assert s * s.inverse() == Series.one(6)

    def test_divided_by_x(self):
        s = Series([0, 0, 3, 5], 3)
        assert s.divided_by_x(2) == Series([3, 5], 1)
        with pytest.raises(ValueError):
            Series([1, 2], 3).divided_by_x(1)

    def test_ring_laws(self):
        rng = random.Random(3)
        for _ in range(20):
            a, b, c = (rand_series(rng, 5) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


class TestUniLaurent:
    def test_basic_algebra(self):
        q = UniLaurent.monomial(1, 1)
        assert (q + q ** -1) * (q - q ** -1) == q ** 2 - q ** -2

    def test_ring_laws(self):
        rng = random.Random(4)
        for _ in range(30):
            a, b, c = (rand_unilaurent(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_evaluate(self):
        q = UniLaurent.monomial(1, 1)
        p = q ** 2 + q ** -1 * 3
        assert p.evaluate(Fraction(1, 2)) == Fraction(1, 4) + 6
        with pytest.raises(ValueError):
            p.evaluate(0)

    def test_no_zero_coefficients_stored(self):
        p = UniLaurent({2: 5, 3: 0, -1: 1})
        assert 3 not in p.coeffs
        q = p - p
        assert q.coeffs == {}

    def test_canonical_idempotent(self):
        p = UniLaurent({0: 1, 2: -4})
        assert UniLaurent(p.coeffs) == p


class TestMultiLaurent:
    def test_difference_of_squares(self):
        z = MultiLaurent.variable(0, 1)
        zi = z ** -1
        assert laurent_mul(z + zi, z - zi) == z ** 2 - zi ** 2

    def test_eval_example(self):
        z1 = MultiLaurent.variable(0, 2)
        z2 = MultiLaurent.variable(1, 2)
        assert laurent_eval(z1 * z2 ** -1, (Fraction(1, 2), 3)) == Fraction(1, 6)

    def test_eval_zero_with_negative_exponent(self):
        z1 = MultiLaurent.variable(0, 2)
        with pytest.raises(ValueError):
            (z1 ** -1).evaluate((0, 1))
        # zero is fine where only nonnegative exponents occur
        assert (z1 ** 2).evaluate((0, 5)) == 0

    def test_commutativity_random(self):
        rng = random.Random(5)
        for _ in range(100):
            a = rand_multilaurent(rng, 3)
            b = rand_multilaurent(rng, 3)
            assert a * b == b * a

    def test_ring_laws(self):
        rng = random.Random(6)
        for _ in range(25):
            a, b, c = (rand_multilaurent(rng, 2) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_eval_is_ring_homomorphism(self):
        rng = random.Random(7)
        for _ in range(25):
            a = rand_multilaurent(rng, 2)
            b = rand_multilaurent(rng, 2)
            pt = (Fraction(rng.randint(1, 9), rng.randint(1, 9)),
                  Fraction(-rng.randint(1, 9), rng.randint(1, 9)))
            assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
            assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)

    def test_exact_division_roundtrip(self):
        rng = random.Random(8)
        for _ in range(25):
            a = rand_multilaurent(rng, 2)
            b = rand_multilaurent(rng, 2)
            if b.is_zero():
                continue
            assert (a * b) / b == a

    def test_inexact_division_raises(self):
        z1 = MultiLaurent.variable(0, 2)
        z2 = MultiLaurent.variable(1, 2)
        with pytest.raises(ValueError):
            (z1 + z2) / (z1 - z2)

    def test_canonical_idempotent(self):
        z1 = MultiLaurent.variable(0, 2)
        p = z1 ** 3 - z1 + 2
        assert MultiLaurent(2, p.coeffs) == p


class TestDeterminants:
    def test_against_permutation_expansion(self):
        rng = random.Random(9)
        for n in (1, 2, 3, 4):
            for _ in range(10):
                m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
                want = det_permutation_expansion(m)
                assert det_fraction_free(m) == want
                assert det_cofactor(m) == want

    def test_singular(self):
        assert det_fraction_free([[1, 2], [2, 4]]) == 0

    def test_ring_valued_cofactor(self):
        z1 = MultiLaurent.variable(0, 2)
        z2 = MultiLaurent.variable(1, 2)
        m = [[z1, z2], [z2, z1]]
        assert det_cofactor(m) == z1 * z1 - z2 * z2
