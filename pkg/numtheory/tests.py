from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from utils.exceptions import IntegrityFailure, InvalidArgument
from .arithmetic import (
    base_p_digits, binomial, binomial_mod_p, ceil_log2, factorial_valuation, is_prime,
    kummer_valuation, p_part, p_valuation,
)
from .expansions import ConsOnesExpansion, cons_ones_expansion

PRIMES = (2, 3, 5, 7)


class ArithmeticTests(SimpleTestCase):

    def test_is_prime(self):
        self.assertEqual([n for n in range(30) if is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
        self.assertFalse(is_prime(-7))
        self.assertFalse(is_prime(2.0))

    def test_p_part(self):
        self.assertEqual(p_part(12, 2), 4)
        self.assertEqual(p_part(9, 3), 9)
        self.assertEqual(p_part(10, 7), 1)
        self.assertEqual(p_valuation(96, 2), 5)

    def test_p_part_rejects_bad_input(self):
        with self.assertRaises(InvalidArgument):
            p_part(0, 2)
        with self.assertRaises(InvalidArgument):
            p_part(12, 4)

    def test_binomial(self):
        self.assertEqual(binomial(8, 4), 70)
        self.assertEqual(binomial(6, 3), 20)
        self.assertEqual(binomial(5, -1), 0)
        self.assertEqual(binomial(5, 6), 0)

    def test_base_p_digits(self):
        self.assertEqual(base_p_digits(10, 2), [0, 1, 0, 1])
        self.assertEqual(base_p_digits(0, 5), [])
        self.assertEqual(base_p_digits(9, 3), [0, 0, 1])

    def test_binomial_mod_p_examples(self):
        self.assertEqual(binomial_mod_p(5, 2, 2), 0)
        self.assertEqual(binomial_mod_p(10, 2, 2), 1)
        for p in PRIMES:
            self.assertEqual(binomial_mod_p(123, 0, p), 1)

    def test_kummer_valuation_examples(self):
        self.assertEqual(kummer_valuation(8, 4, 2), 1)
        self.assertEqual(kummer_valuation(4, 2, 2), 1)
        self.assertEqual(kummer_valuation(17, 0, 3), 0)
        with self.assertRaises(InvalidArgument):
            kummer_valuation(3, 4, 2)

    def test_lucas_and_kummer_agree_with_exact_binomials(self):
        for p in PRIMES:
            for m in range(0, 201):
                for n in range(0, m + 1):
                    exact = binomial(m, n)
                    self.assertEqual(binomial_mod_p(m, n, p), exact % p, (m, n, p))
                    self.assertEqual(kummer_valuation(m, n, p), p_valuation(exact, p), (m, n, p))

    def test_factorial_valuation(self):
        self.assertEqual(factorial_valuation(0, 2), 0)
        self.assertEqual(factorial_valuation(10, 2), 8)
        self.assertEqual(factorial_valuation(25, 5), 6)

    def test_ceil_log2(self):
        self.assertEqual([ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)], [0, 1, 2, 2, 3, 3, 4])
        with self.assertRaises(InvalidArgument):
            ceil_log2(0)

    @given(st.integers(min_value=1, max_value=10 ** 6), st.sampled_from(PRIMES))
    def test_p_part_divides_with_coprime_cofactor(self, n, p):
        part = p_part(n, p)
        self.assertEqual(n % part, 0)
        self.assertNotEqual((n // part) % p, 0)


class ConsOnesExpansionTests(SimpleTestCase):

    def test_examples(self):
        cases = {
            5: ((3, 2, 0), (5, 3, 1, 0)),
            6: ((3, 1), (6, 2, 0)),
            4: ((2,), (4, 0)),
            1: ((0,), (1, 0)),
        }
        for r, (exponents, partial_sums) in cases.items():
            with self.subTest(r=r):
                expansion = cons_ones_expansion(r)
                self.assertEqual(expansion.exponents, exponents)
                self.assertEqual(expansion.partial_sums, partial_sums)

    def test_round_trip(self):
        for r in range(1, 10 ** 4 + 1):
            expansion = cons_ones_expansion(r)
            self.assertEqual(expansion.evaluate(), r)
            self.assertEqual(expansion.value, r)

    def test_rejects_non_positive(self):
        with self.assertRaises(InvalidArgument):
            cons_ones_expansion(0)

    def test_invariants_are_enforced(self):
        with self.assertRaises(IntegrityFailure):
            ConsOnesExpansion((3, 2), (4, 4, 0))
        with self.assertRaises(IntegrityFailure):
            ConsOnesExpansion((2,), (3, 0))
        with self.assertRaises(IntegrityFailure):
            ConsOnesExpansion((2, 1), (2, 2, 0))

    @settings(deadline=None)
    @given(st.integers(min_value=1, max_value=2 ** 40))
    def test_minimal_length(self, r):
        exponents = cons_ones_expansion(r).exponents
        if len(exponents) > 1:
            self.assertGreater(exponents[-2], exponents[-1] + 1)
