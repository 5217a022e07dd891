from django.test import SimpleTestCase

from greenring.decompositions import VirtualSum
from numtheory.arithmetic import is_prime, p_part
from renaud.algorithm import decompose_renaud
from utils.exceptions import InvalidArgument
from .formulas import (
    alternating_rr1_form, decompose_large_p, decompose_rr1_char2, decompose_rr_char2,
    large_p_applies, largest_part_overflow, smallest_part, smallest_part_bits_hold,
)


def next_prime(n):
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


class LargePTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(decompose_large_p(2, 3).dims, (4, 2))
        self.assertEqual(decompose_large_p(1, 6).dims, (6,))
        self.assertEqual(decompose_large_p(3, 3, 7).dims, (5, 3, 1))
        self.assertEqual(decompose_large_p(3, 3).p, 0)

    def test_applies(self):
        self.assertTrue(large_p_applies(3, 3, 5))
        self.assertFalse(large_p_applies(3, 4, 5))
        self.assertTrue(large_p_applies(30, 40, 0))

    def test_rejects_composite_characteristic(self):
        with self.assertRaises(InvalidArgument):
            decompose_large_p(2, 3, 9)

    def test_matches_renaud_at_the_smallest_admissible_prime(self):
        for r in range(1, 13):
            for s in range(r, 13):
                p = next_prime(r + s - 1)
                with self.subTest(r=r, s=s, p=p):
                    self.assertEqual(decompose_large_p(r, s, p), decompose_renaud(r, s, p))


class Char2Tests(SimpleTestCase):

    def test_square_examples(self):
        self.assertEqual(str(decompose_rr_char2(5)), '2V8 + 2V4 + V1')
        self.assertEqual(str(decompose_rr_char2(6)), '4V8 + 2V2')
        for e in range(6):
            self.assertEqual(str(decompose_rr_char2(2 ** e)), f'{2 ** e}V{2 ** e}' if e else 'V1')

    def test_adjacent_examples(self):
        self.assertEqual(str(decompose_rr1_char2(5)), '3V8 + V4 + V2')
        self.assertEqual(str(decompose_rr1_char2(1)), 'V2')
        self.assertEqual(str(decompose_rr1_char2(4)), 'V8 + 3V4')

    def test_adjacent_base_case_matches_renaud(self):
        for e in range(6):
            r = 2 ** e
            with self.subTest(r=r):
                self.assertEqual(decompose_rr1_char2(r), decompose_renaud(r, r + 1, 2))

    def test_rejects_non_positive(self):
        with self.assertRaises(InvalidArgument):
            decompose_rr_char2(0)
        with self.assertRaises(InvalidArgument):
            decompose_rr1_char2(-3)

    def test_square_matches_renaud_and_parity(self):
        for r in range(1, 257):
            d = decompose_rr_char2(r)
            self.assertEqual(d, decompose_renaud(r, r, 2), r)
            self.assertTrue(all(dim & (dim - 1) == 0 for dim in d.dims), r)
            self.assertTrue(all(mult % 2 == 0 for dim, mult in d.pairs if dim != 1), r)
            self.assertTrue(all(mult <= 1 for dim, mult in d.pairs if dim == 1), r)

    def test_adjacent_matches_renaud_and_parity(self):
        for r in range(1, 257):
            d = decompose_rr1_char2(r)
            self.assertEqual(d, decompose_renaud(r, r + 1, 2), r)
            self.assertTrue(all(dim > 1 and dim & (dim - 1) == 0 for dim in d.dims), r)

    def test_alternating_form(self):
        self.assertEqual(alternating_rr1_form(5), VirtualSum({8: 3, 4: 1, 1: 2}))
        self.assertEqual(alternating_rr1_form(1), VirtualSum({1: 2}))
        self.assertNotEqual(alternating_rr1_form(5), VirtualSum.from_decomposition(decompose_rr1_char2(5)))


class SmallestPartTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(smallest_part(6, 2), (2, 2))
        self.assertEqual(smallest_part(5, 2), (1, 1))
        self.assertEqual(smallest_part(9, 3), (9, 9))

    def test_matches_renaud(self):
        for p in (2, 3, 5):
            for r in range(1, 65):
                with self.subTest(r=r, p=p):
                    d = decompose_renaud(r, r, p)
                    self.assertEqual(d.pairs[-1], (p_part(r, p), p_part(r, p)))
                    self.assertTrue(smallest_part_bits_hold(r, p))


class LargestPartTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(largest_part_overflow(3, 3, 2, 2), (4, 2))
        self.assertEqual(largest_part_overflow(4, 4, 2, 2), (4, 4))
        self.assertEqual(largest_part_overflow(3, 2, 2, 2), (4, 1))

    def test_preconditions(self):
        with self.assertRaises(InvalidArgument):
            largest_part_overflow(1, 2, 2, 2)
        with self.assertRaises(InvalidArgument):
            largest_part_overflow(5, 2, 2, 2)

    def test_matches_renaud(self):
        for p, top in ((2, 5), (3, 3), (5, 2), (7, 1)):
            for n in range(1, top + 1):
                pn = p ** n
                for r1 in range(1, pn + 1):
                    for s1 in range(pn - r1 + 1, pn + 1):
                        self.assertEqual(
                            decompose_renaud(r1, s1, p).pairs[0],
                            largest_part_overflow(r1, s1, p, n),
                            (r1, s1, p, n),
                        )
