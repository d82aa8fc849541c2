import random
from fractions import Fraction

import pytest

from symident.combinat import ballot
from symident.exactalg import MultiLaurent, UniLaurent
from symident.symfun import (PointVector, complete, complete_prefix,
                             elementary, elementary_prefix,
                             genfun_coefficients, monomial, newton_check,
                             power, schur, symbolic_vectors, wronski_check)

from oracles import (brute_complete, brute_elementary, brute_monomial,
                     brute_power, count_standard_tableaux_two_rows)


def rand_vector(rng, r):
    vals = set()
    while len(vals) < r:
        x = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        if rng.randint(0, 1):
            x = -x
        vals.add(x)
    return PointVector(tuple(vals))


class TestElementary:
    def test_unit_and_bounds(self):
        v = PointVector([Fraction(3), Fraction(5)])
        assert elementary(0, v) == 1
        assert elementary(-1, v) == 0
        assert elementary(3, v) == 0

    def test_full_product(self):
        v = PointVector([Fraction(1), Fraction(2), Fraction(3)])
        assert elementary(3, v) == 6

    def test_doubled_pair_cancels(self):
        _, doubled, _ = symbolic_vectors(1)
        assert elementary(2, doubled) == MultiLaurent.one(1)

    def test_against_enumeration(self):
        rng = random.Random(11)
        for r in (2, 3, 4):
            v = rand_vector(rng, r)
            for n in range(0, r + 2):
                assert elementary(n, v) == brute_elementary(n, v.entries)


class TestComplete:
    def test_two_variable(self):
        a, b = Fraction(2), Fraction(7)
        assert complete(2, PointVector([a, b])) == a * a + a * b + b * b

    def test_unit(self):
        assert complete(0, PointVector([Fraction(9)])) == 1

    def test_negative_index_vanishes(self):
        v = PointVector([Fraction(1), Fraction(2), Fraction(3)])
        assert complete(-1, v) == 0
        assert complete(-2, v) == 0
        # the vanishing window is exactly 1..r-1
        for r in (2, 3, 4, 5):
            w = rand_vector(random.Random(100 + r), r)
            for n in range(1, r):
                assert complete(-n, w) == 0, (r, n)

    def test_against_enumeration(self):
        rng = random.Random(12)
        for r in (2, 3):
            v = rand_vector(rng, r)
            for n in range(0, 6):
                assert complete(n, v) == brute_complete(n, v.entries)


class TestPower:
    def test_examples(self):
        v = PointVector([Fraction(1), Fraction(2), Fraction(3)])
        assert power(2, v) == 14
        assert power(1, v) == elementary(1, v)

    def test_symbolic_laurent(self):
        _, doubled, _ = symbolic_vectors(1)
        z = MultiLaurent.variable(0, 1)
        assert power(3, doubled) == z ** 3 + z ** -3

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            power(0, PointVector([Fraction(1)]))

    def test_against_enumeration(self):
        rng = random.Random(13)
        v = rand_vector(rng, 4)
        for n in range(1, 7):
            assert power(n, v) == brute_power(n, v.entries)


class TestMonomial:
    def test_one_row_is_power(self):
        rng = random.Random(14)
        v = rand_vector(rng, 3)
        for n in range(1, 5):
            assert monomial((n,), v) == power(n, v)

    def test_one_column_is_elementary(self):
        v = PointVector([Fraction(1), Fraction(2), Fraction(5)])
        assert monomial((1, 1), v) == elementary(2, v)

    def test_orbit_example(self):
        a, b = Fraction(3), Fraction(4)
        v = PointVector([a, b])
        assert monomial((2, 1), v) == brute_monomial((2, 1), v.entries)
        assert monomial((2, 1), v) == a * a * b + a * b * b

    def test_against_enumeration(self):
        rng = random.Random(15)
        v = rand_vector(rng, 3)
        for lam in ((2,), (1, 1), (2, 1), (2, 2), (3, 1, 1)):
            assert monomial(lam, v) == brute_monomial(lam, v.entries)


class TestSchur:
    def test_one_row_is_complete(self):
        rng = random.Random(16)
        v = rand_vector(rng, 3)
        for n in range(0, 7):
            assert schur((n,), v) == complete(n, v)

    def test_one_column_is_elementary(self):
        v = PointVector([Fraction(1), Fraction(2), Fraction(3)])
        assert schur((1, 1), v) == elementary(2, v)

    def test_symbolic_jacobi_trudi_specials(self):
        for r in (2, 3, 4):
            plain, _, _ = symbolic_vectors(r)
            for n in range(0, 9):
                assert schur((n,), plain) == complete(n, plain), (r, n)
                if 1 <= n <= r:
                    assert schur((1,) * n, plain) == elementary(n, plain), (r, n)

    def test_two_row_character_quotient(self):
        # against the sine-ratio form: s_(l1,l2)(z, 1/z) (z - 1/z) equals
        # z^(l1-l2+1) - z^-(l1-l2+1)
        z = MultiLaurent.variable(0, 1)
        v = PointVector([z, z ** -1])
        for l1, l2 in ((1, 0), (3, 1), (4, 4), (6, 2)):
            d = l1 - l2 + 1
            assert schur((l1, l2), v) * (z - z ** -1) == z ** d - z ** -d

    def test_repeated_entries_fail(self):
        v = PointVector([Fraction(2), Fraction(2), Fraction(3)])
        with pytest.raises(ZeroDivisionError):
            schur((2, 1), v)

    def test_general_negative_shape_rejected(self):
        v = PointVector([Fraction(1), Fraction(2)])
        with pytest.raises(ValueError):
            schur((1, -1), v)


class TestRelations:
    def test_wronski_small(self):
        v = PointVector([Fraction(2), Fraction(3)])
        assert wronski_check(1, v)
        with pytest.raises(ValueError):
            wronski_check(0, v)

    def test_newton_base(self):
        v = PointVector([Fraction(2), Fraction(3), Fraction(5)])
        assert newton_check(0, v)

    def test_symbolic_and_random(self):
        rng = random.Random(17)
        for r in (1, 2, 3, 4):
            plain, _, _ = symbolic_vectors(r)
            for n in range(1, 11):
                assert wronski_check(n, plain), (r, n)
                assert newton_check(n, plain), (r, n)
            for _ in range(20):
                v = rand_vector(rng, r)
                n = rng.randint(1, 10)
                assert wronski_check(n, v)
                assert newton_check(n, v)

    def test_truncation_beyond_variable_count(self):
        # e_(n+1) = 0 once n+1 > r, so the alternating sum telescopes to 0
        v = PointVector([Fraction(4), Fraction(9)])
        assert newton_check(5, v)


class TestGenfun:
    def test_e_kind_coefficients(self):
        a, b = Fraction(2), Fraction(3)
        coeffs = genfun_coefficients("e", PointVector([a, b]), 2)
        assert coeffs == [1, a + b, a * b]

    def test_h_kind_frozen_value(self):
        coeffs = genfun_coefficients("h", PointVector([Fraction(1), Fraction(1)]), 4)
        assert coeffs[3] == brute_complete(3, (1, 1)) == 4

    def test_p_kind_constant_is_arity(self):
        v = PointVector([Fraction(5), Fraction(7), Fraction(11)])
        assert genfun_coefficients("p", v, 0)[0] == 3

    def test_matches_direct_values(self):
        rng = random.Random(18)
        for r in (2, 3, 4):
            v = rand_vector(rng, r)
            e = genfun_coefficients("e", v, 10)
            h = genfun_coefficients("h", v, 10)
            p = genfun_coefficients("p", v, 10)
            for n in range(11):
                assert e[n] == elementary(n, v)
                assert h[n] == complete(n, v)
                if n >= 1:
                    assert p[n] == power(n, v)


class TestClebschGordan:
    def test_laurent_identity(self):
        # (z + 1/z)^n (z - 1/z) = sum_k ballot(n,k) (z^(n-2k+1) - z^(2k-n-1))
        z = UniLaurent.monomial(1, 1, "z")
        zi = z ** -1
        for n in range(0, 21):
            lhs = (z + zi) ** n * (z - zi)
            rhs = UniLaurent.zero("z")
            for k in range(n // 2 + 1):
                d = n - 2 * k + 1
                rhs = rhs + (z ** d - z ** -d) * ballot(n, k)
            assert lhs == rhs, n


class TestKostka:
    def test_two_row_kostka_equals_ballot(self):
        for n in range(0, 11):
            for k in range(0, n // 2 + 1):
                want = count_standard_tableaux_two_rows(n - k, k)
                assert ballot(n, k) == want, (n, k)


class TestPrefixConsistency:
    def test_prefix_matches_pointwise(self):
        rng = random.Random(19)
        v = rand_vector(rng, 3)
        es = elementary_prefix(5, v)
        hs = complete_prefix(5, v)
        for n in range(6):
            assert es[n] == elementary(n, v)
            assert hs[n] == complete(n, v)
