import pytest

from symident.combinat import ballot, binom
from symident.cyclotomic import (CycField, as_integer, cyclotomic_poly,
                                 discriminant_square_check,
                                 doubled_roots_vector, shifted_roots_vector)
from symident.symfun import complete_prefix, elementary_prefix, power


def totient(m):
    count = 0
    for k in range(1, m + 1):
        a, b = k, m
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


class TestCyclotomicPoly:
    def test_small(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
        assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)

    def test_degree_and_divisibility(self):
        for m in range(1, 31):
            phi = cyclotomic_poly(m)
            assert phi[-1] == 1
            assert len(phi) - 1 == totient(m)
            # product over divisors rebuilds x^m - 1
            prod = [1]
            for d in range(1, m + 1):
                if m % d == 0:
                    p = cyclotomic_poly(d)
                    out = [0] * (len(prod) + len(p) - 1)
                    for i, a in enumerate(prod):
                        for j, b in enumerate(p):
                            out[i + j] += a * b
                    prod = out
            want = [0] * (m + 1)
            want[0], want[m] = -1, 1
            assert prod == want, m


class TestCycField:
    def test_root_relations(self):
        for r in range(1, 9):
            f = CycField(2 * r + 1)
            z = f.zeta(1)
            assert z ** f.m == f.one
            total = f.zero
            for k in range(f.m):
                total = total + z ** k
            assert total == f.zero

    def test_as_integer(self):
        f = CycField(5)
        assert as_integer(f.from_int(1)) == 1
        with pytest.raises(ValueError):
            as_integer(f.zeta(1))

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            CycField(5).one + CycField(7).one


class TestShiftedVector:
    def test_order_three_collapses_to_one(self):
        v = shifted_roots_vector(1)
        assert v[0] == CycField(3).one

    def test_first_power_sum(self):
        for r in range(1, 9):
            assert as_integer(power(1, shifted_roots_vector(r))) == 1

    def test_first_elementary(self):
        for r in range(2, 9):
            assert as_integer(elementary_prefix(1, shifted_roots_vector(r))[1]) == 1

    def test_complete_six_gives_table_value(self):
        assert as_integer(complete_prefix(6, shifted_roots_vector(3))[6]) == 28


class TestDoubledVector:
    def test_elementary_window(self):
        for r in range(1, 9):
            es = elementary_prefix(2 * r + 4, doubled_roots_vector(r))
            for n in range(2 * r + 5):
                assert as_integer(es[n]) == (1 if n <= 2 * r else 0), (r, n)

    def test_complete_pattern(self):
        for r in range(1, 5):
            p = 2 * r + 1
            hs = complete_prefix(3 * p, doubled_roots_vector(r))
            for n in range(3 * p + 1):
                m = n % (2 * p)
                want = 1 if m in (0, 1) else (-1 if m in (p, p + 1) else 0)
                assert as_integer(hs[n]) == want, (r, n)

    def test_power_pattern(self):
        v = doubled_roots_vector(2)
        assert as_integer(power(5, v)) == -4
        for r in (1, 3):
            p = 2 * r + 1
            w = doubled_roots_vector(r)
            for n in range(1, 3 * p + 1):
                want = (-1 if n % 2 else 1) * (-1 + p * (n % p == 0))
                assert as_integer(power(n, w)) == want, (r, n)

    def test_complete_three_at_order_five(self):
        assert as_integer(complete_prefix(3, doubled_roots_vector(2))[3]) == 0


class TestThirdResult:
    def test_elementary_closed_form(self):
        # e_m of the shifted roots equals the telescoped ballot sum and the
        # signed binomial, for every m up to r
        for r in range(1, 9):
            es = elementary_prefix(r, shifted_roots_vector(r))
            for m in range(r + 1):
                val = as_integer(es[m])
                assert val == sum(ballot(m - r - 1, k) for k in range(m // 2 + 1))
                assert val == binom(m - r - 1, m // 2)
                sign = -1 if (m // 2) % 2 else 1
                assert val == sign * binom(r - (m + 1) // 2, m // 2)


class TestDiscriminant:
    def test_small_values(self):
        assert discriminant_square_check(1)   # det^2 = 1 = 3^0
        assert discriminant_square_check(2)   # det^2 = 5
        assert discriminant_square_check(3)   # det^2 = 49

    def test_all_prime_orders_to_eight(self):
        for r in (1, 2, 3, 5, 6, 8):
            assert discriminant_square_check(r)

    def test_composite_order_rejected(self):
        with pytest.raises(ValueError):
            discriminant_square_check(4)
