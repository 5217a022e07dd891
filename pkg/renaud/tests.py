from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from greenring.decompositions import Decomposition, normalize
from greenring.transforms import empty_decomposition
from utils.decomposition_cache import DecompositionCache
from utils.exceptions import InvalidArgument
from .algorithm import (
    base_case, decompose_renaud, level, reduce, reduction_params, scale_case,
)


def lam(r, s, p, *pairs):
    return Decomposition(r, s, p, pairs)


class BaseCaseTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(str(base_case(2, 3, 7)), 'V4 + V2')
        self.assertEqual(str(base_case(2, 2, 3)), 'V3 + V1')
        self.assertEqual(str(base_case(3, 4, 5)), '2V5 + V2')
        self.assertEqual(str(base_case(3, 3, 3)), '3V3')

    def test_symmetric(self):
        for p in (2, 3, 5, 7):
            for r in range(1, p + 1):
                for s in range(1, p + 1):
                    with self.subTest(r=r, s=s, p=p):
                        self.assertTrue(base_case(r, s, p).same_parts(base_case(s, r, p)))

    def test_out_of_range(self):
        with self.assertRaises(InvalidArgument):
            base_case(3, 4, 3)
        with self.assertRaises(InvalidArgument):
            base_case(1, 2, 4)


class ReductionParamsTests(SimpleTestCase):

    def test_examples(self):
        params = reduction_params(7, 7, 2, 2)
        self.assertEqual((params.r0, params.s0, params.r1, params.s1), (1, 1, 3, 3))
        self.assertEqual((params.c, params.d1, params.d2), (6, 0, 1))

        params = reduction_params(3, 6, 2, 2)
        self.assertEqual((params.r0, params.s0, params.r1, params.s1), (0, 1, 3, 2))
        self.assertEqual((params.c, params.d1, params.d2), (0, 0, 0))

        params = reduction_params(5, 6, 2, 2)
        self.assertEqual((params.r0, params.s0, params.r1, params.s1), (1, 1, 1, 2))
        self.assertEqual((params.c, params.d1, params.d2), (3, 0, 1))

    def test_invariants(self):
        for p in (2, 3, 5):
            for n in (1, 2):
                top = p ** (n + 1)
                for r in range(1, top):
                    for s in range(r, top):
                        params = reduction_params(r, s, p, n)
                        self.assertEqual(params.r0 * params.pn + params.r1, r)
                        self.assertEqual(params.s0 * params.pn + params.s1, s)
                        self.assertGreaterEqual(params.c, 0)
                        self.assertIn(params.d2 - params.d1, (0, 1))

    def test_preconditions(self):
        with self.assertRaises(InvalidArgument):
            reduction_params(6, 3, 2, 2)
        with self.assertRaises(InvalidArgument):
            reduction_params(3, 8, 2, 2)
        with self.assertRaises(InvalidArgument):
            reduction_params(1, 1, 2, 0)


class ReduceTests(SimpleTestCase):

    def test_negative_terms_cancel(self):
        virtual = reduce(reduction_params(7, 7, 2, 2), lam(3, 3, 2, (4, 2), (1, 1)))
        self.assertEqual(normalize(virtual, 7, 7, 2), lam(7, 7, 2, (8, 6), (1, 1)))

    def test_with_sub_decomposition(self):
        virtual = reduce(reduction_params(5, 6, 2, 2), lam(1, 2, 2, (2, 1)))
        self.assertEqual(str(normalize(virtual, 5, 6, 2)), '3V8 + V4 + V2')

    def test_empty_sub_decomposition(self):
        virtual = reduce(reduction_params(2, 3, 2, 1), empty_decomposition(0, 1, 2))
        self.assertEqual(str(normalize(virtual, 2, 3, 2)), 'V4 + V2')


class ScaleCaseTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(str(scale_case(4, 4, 2, 2, lam(1, 1, 2, (1, 1)))), '4V4')
        self.assertEqual(str(scale_case(9, 9, 3, 2, lam(1, 1, 3, (1, 1)))), '9V9')
        self.assertEqual(str(scale_case(6, 6, 3, 1, lam(2, 2, 3, (3, 1), (1, 1)))), '3V9 + 3V3')

    def test_requires_multiples(self):
        with self.assertRaises(InvalidArgument):
            scale_case(5, 4, 2, 2, lam(1, 1, 2, (1, 1)))

    def test_agrees_with_the_reduction(self):
        for p in (2, 3, 5):
            for n in (1, 2):
                pn = p ** n
                for r0 in range(1, p):
                    for s0 in range(r0, p):
                        r, s = r0 * pn, s0 * pn
                        with self.subTest(r=r, s=s, p=p):
                            sub = decompose_renaud(r0, s0, p)
                            params = reduction_params(r, s, p, n)
                            via_reduce = normalize(reduce(params, empty_decomposition(0, 0, p)), r, s, p)
                            self.assertEqual(scale_case(r, s, p, n, sub), via_reduce)


class DecomposeRenaudTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(str(decompose_renaud(5, 5, 2)), '2V8 + 2V4 + V1')
        self.assertEqual(str(decompose_renaud(3, 6, 2)), 'V8 + V6 + V4')
        self.assertEqual(str(decompose_renaud(7, 7, 2)), '6V8 + V1')
        self.assertEqual(str(decompose_renaud(1, 9, 3)), 'V9')

    def test_level(self):
        self.assertEqual([level(s, 2) for s in (3, 4, 7, 8, 16)], [1, 2, 2, 3, 4])

    def test_keeps_argument_order(self):
        self.assertEqual(decompose_renaud(6, 3, 2).context, (6, 3, 2))
        self.assertEqual(decompose_renaud(3, 6, 2).context, (3, 6, 2))

    def test_is_memoized_under_a_canonical_key(self):
        DecompositionCache.clear()
        decompose_renaud(11, 5, 3)
        self.assertEqual(DecompositionCache.make_key('renaud', 11, 5, 3), 'renaud:3:5:11')
        self.assertIsNotNone(DecompositionCache.get('renaud', 5, 11, 3))

    def test_large_p_parts(self):
        for r in range(1, 8):
            for s in range(r, 8):
                p = 13
                with self.subTest(r=r, s=s):
                    expected = tuple(r + s + 1 - 2 * i for i in range(1, r + 1))
                    self.assertEqual(decompose_renaud(r, s, p).dims, expected)

    def test_rejects_bad_input(self):
        with self.assertRaises(InvalidArgument):
            decompose_renaud(0, 3, 2)
        with self.assertRaises(InvalidArgument):
            decompose_renaud(3, 3, 9)

    @settings(deadline=None)
    @given(
        st.integers(min_value=1, max_value=200),
        st.integers(min_value=1, max_value=200),
        st.sampled_from((2, 3, 5, 7, 11)),
    )
    def test_symmetric_and_consistent(self, r, s, p):
        d = decompose_renaud(r, s, p)
        self.assertTrue(d.same_parts(decompose_renaud(s, r, p)))
        self.assertEqual(sum(dim * mult for dim, mult in d.pairs), r * s)
        self.assertEqual(d.b, min(r, s))
