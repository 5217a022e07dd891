from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import Matrix, binomial as sympy_binomial

from greenring.decompositions import to_partition
from numtheory.arithmetic import binomial
from utils.exceptions import IntegrityFailure, InvalidArgument
from .algorithm import decompose_iima, mults_to_parts, parts_recurrence, parts_to_mults
from .determinants import (
    IDENTITY_VARIANTS, DeltaSequence, det_Dk, delta, delta_sequence, determinant_identity_holds,
    fast_valuation_Dk, valuation_Dk,
)

PRIMES = (2, 3, 5, 7)


def binomial_matrix(r, s, k):
    """
    A_k(r, s): the k x k matrix with (i, j) entry C(r+s-2k, s+i-j-k).
    """
    return Matrix(k, k, lambda i, j: sympy_binomial(r + s - 2 * k, s + i - j - k) if s + i - j - k >= 0 else 0)


class DeterminantTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(det_Dk(2, 3, 1), 3)
        self.assertEqual(det_Dk(5, 5, 2), 175)
        self.assertEqual([det_Dk(5, 5, k) for k in range(6)], [1, 70, 175, 50, 5, 1])
        self.assertEqual(det_Dk(4, 9, 0), 1)

    def test_range(self):
        with self.assertRaises(InvalidArgument):
            det_Dk(5, 3, 1)
        with self.assertRaises(InvalidArgument):
            det_Dk(3, 5, 4)

    def test_matches_direct_determinant(self):
        for r in range(1, 13):
            for s in range(r, 13):
                for k in range(1, min(r, 6) + 1):
                    with self.subTest(r=r, s=s, k=k):
                        self.assertEqual(det_Dk(r, s, k), int(binomial_matrix(r, s, k).det()))

    def test_exact_division_on_the_grid(self):
        for r in range(1, 21):
            for s in range(r, 21):
                for k in range(r + 1):
                    self.assertGreater(det_Dk(r, s, k), 0)

    def test_identities(self):
        for r in range(1, 21):
            for s in range(r, 21):
                for variant in IDENTITY_VARIANTS:
                    upper = r if variant == 'a' else r - 1
                    for k in range(upper + 1):
                        self.assertTrue(determinant_identity_holds(r, s, k, variant), (r, s, k, variant))

    def test_identity_examples_and_range(self):
        self.assertTrue(determinant_identity_holds(2, 3, 1, 'a'))
        self.assertTrue(determinant_identity_holds(5, 5, 0, 'c'))
        self.assertTrue(determinant_identity_holds(4, 7, 0, 'a'))
        with self.assertRaises(InvalidArgument):
            determinant_identity_holds(3, 4, 3, 'b')
        with self.assertRaises(InvalidArgument):
            determinant_identity_holds(3, 4, 1, 'd')


class DeltaTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(delta(5, 5, 1, 2), 0)
        self.assertEqual(delta(5, 5, 4, 2), 1)
        self.assertEqual(delta(6, 9, 6, 3), 1)

    def test_valuation_path_matches_exact_values(self):
        for p in PRIMES:
            for r in range(1, 21):
                for s in range(r, 21):
                    for k in range(r + 1):
                        exact = det_Dk(r, s, k)
                        self.assertEqual(delta(r, s, k, p), 1 if exact % p else 0, (r, s, k, p))

    def test_fast_valuation_matches_kummer_sum(self):
        for p in PRIMES:
            for r in range(1, 31):
                for s in range(r, 31):
                    for k in range(r + 1):
                        self.assertEqual(
                            fast_valuation_Dk(r, s, k, p), valuation_Dk(r, s, k, p), (r, s, k, p)
                        )

    def test_sequences(self):
        sequence = delta_sequence(5, 5, 2)
        self.assertEqual(sequence.bits, (1, 0, 1, 0, 1, 1))
        self.assertEqual(sequence.ones, (0, 2, 4, 5))
        self.assertEqual(sequence.t, 3)
        self.assertEqual(str(sequence), '101011')

        self.assertEqual(delta_sequence(2, 3, 2).ones, (0, 1, 2))
        self.assertEqual(delta_sequence(1, 7, 5).bits, (1, 1))

    def test_sequence_needs_sorted_input(self):
        with self.assertRaises(InvalidArgument):
            delta_sequence(5, 3, 2)

    def test_sequence_endpoints_are_enforced(self):
        with self.assertRaises(IntegrityFailure):
            DeltaSequence(2, 3, 2, (1, 1, 0))

    def test_gap(self):
        sequence = delta_sequence(5, 5, 2)
        self.assertEqual([sequence.gap(k) for k in (2, 4, 5)], [2, 2, 1])
        with self.assertRaises(InvalidArgument):
            sequence.gap(3)


class DecomposeIimaTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(str(decompose_iima(5, 5, 2)), '2V8 + 2V4 + V1')
        self.assertEqual(str(decompose_iima(2, 3, 2)), 'V4 + V2')
        self.assertEqual(str(decompose_iima(2, 3, 7)), 'V4 + V2')
        self.assertEqual(str(decompose_iima(5, 6, 2)), '3V8 + V4 + V2')

    def test_keeps_argument_order(self):
        d = decompose_iima(6, 5, 2)
        self.assertEqual(d.context, (6, 5, 2))
        self.assertTrue(d.same_parts(decompose_iima(5, 6, 2)))

    def test_parts_recurrence(self):
        self.assertEqual(parts_recurrence(delta_sequence(5, 5, 2)).parts, (8, 8, 4, 4, 1))
        self.assertEqual(parts_recurrence(delta_sequence(2, 3, 2)).parts, (4, 2))
        self.assertEqual(parts_recurrence(delta_sequence(1, 9, 3)).parts, (9,))

    @settings(deadline=None)
    @given(
        st.integers(min_value=1, max_value=150),
        st.integers(min_value=1, max_value=150),
        st.sampled_from((2, 3, 5, 7, 11)),
    )
    def test_recurrence_matches_support_reading(self, r, s, p):
        r, s = min(r, s), max(r, s)
        self.assertEqual(parts_recurrence(delta_sequence(r, s, p)), to_partition(decompose_iima(r, s, p)))


class MultiplicityConversionTests(SimpleTestCase):

    def test_mults_to_parts(self):
        self.assertEqual(mults_to_parts((2, 2, 1), 5, 5), (8, 4, 1))
        self.assertEqual(mults_to_parts((3, 1, 1), 5, 6), (8, 4, 2))
        self.assertEqual(mults_to_parts((1,), 1, 7), (7,))

    def test_parts_to_mults(self):
        self.assertEqual(parts_to_mults((8, 4, 1), 5, 5), (2, 2, 1))
        self.assertEqual(parts_to_mults((8, 4, 2), 5, 6), (3, 1, 1))
        self.assertEqual(parts_to_mults((7,), 1, 7), (1,))

    def test_invalid_input(self):
        with self.assertRaises(InvalidArgument):
            mults_to_parts((2, 2), 5, 5)
        with self.assertRaises(InvalidArgument):
            parts_to_mults((4, 8), 5, 5)
        with self.assertRaises(IntegrityFailure):
            parts_to_mults((3, 2), 3, 3)

    @settings(deadline=None)
    @given(st.integers(min_value=1, max_value=100), st.integers(min_value=1, max_value=100), st.sampled_from(PRIMES))
    def test_round_trip_on_computed_decompositions(self, r, s, p):
        d = decompose_iima(r, s, p)
        self.assertEqual(mults_to_parts(d.mults, r, s), d.dims)
        self.assertEqual(parts_to_mults(d.dims, r, s), d.mults)

    def test_binomial_helper_agrees_with_sympy(self):
        self.assertEqual(binomial(20, 7), int(sympy_binomial(20, 7)))
