import json

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from utils.exceptions import CancellationFailure, IntegrityFailure, InvalidArgument
from .decompositions import (
    Decomposition, Part, Partition, VirtualSum, direct_sum, from_partition, normalize,
    scale, to_partition,
)
from .serializers import DecompositionSerializer, render_json
from .transforms import dual, empty_decomposition, reflect, reflect_via_duality


def lam(r, s, p, *pairs):
    return Decomposition(r, s, p, pairs)


class DecompositionTests(SimpleTestCase):

    def test_accessors_and_rendering(self):
        d = lam(5, 5, 2, (8, 2), (4, 2), (1, 1))
        self.assertEqual(d.dims, (8, 4, 1))
        self.assertEqual(d.mults, (2, 2, 1))
        self.assertEqual((d.t, d.b), (3, 5))
        self.assertEqual(str(d), '2V8 + 2V4 + V1')
        self.assertEqual(d.pairs[0], Part(8, 2))

    def test_empty_decomposition(self):
        d = empty_decomposition(0, 4, 3)
        self.assertEqual(str(d), '0')
        self.assertEqual(d.b, 0)
        with self.assertRaises(InvalidArgument):
            empty_decomposition(1, 4, 3)

    def test_rejects_wrong_dimension_count(self):
        with self.assertRaises(IntegrityFailure):
            lam(2, 3, 2, (4, 1), (1, 1))

    def test_rejects_wrong_part_count(self):
        with self.assertRaises(IntegrityFailure):
            lam(2, 2, 2, (4, 1))

    def test_rejects_unsorted_or_repeated_dims(self):
        with self.assertRaises(IntegrityFailure):
            lam(2, 3, 2, (2, 1), (4, 1))
        with self.assertRaises(IntegrityFailure):
            lam(2, 2, 2, (2, 1), (2, 1))

    def test_swapped_keeps_parts(self):
        d = lam(3, 6, 2, (8, 1), (6, 1), (4, 1))
        self.assertEqual(d.swapped().context, (6, 3, 2))
        self.assertTrue(d.swapped().same_parts(d))


class VirtualSumTests(SimpleTestCase):

    def test_zero_terms_are_dropped(self):
        virtual = VirtualSum().add(0, 5).add(3, 0).add(4, 2).add(4, -2)
        self.assertTrue(virtual.is_empty())
        self.assertEqual(virtual.terms, {})

    def test_direct_sum_and_scale(self):
        self.assertEqual(direct_sum(VirtualSum({4: 1}), VirtualSum({4: 1, 2: 1})), VirtualSum({4: 2, 2: 1}))
        self.assertTrue(scale(0, VirtualSum({8: 3})).is_empty())
        self.assertEqual(scale(-2, VirtualSum({4: 1})).terms, {4: -2})

    def test_items_in_decreasing_order(self):
        self.assertEqual(VirtualSum({1: 1, 8: 6, 4: 3}).items(), [(8, 6), (4, 3), (1, 1)])

    @given(st.dictionaries(st.integers(min_value=1, max_value=50), st.integers(min_value=-5, max_value=5)))
    def test_sum_with_negation_cancels(self, terms):
        virtual = VirtualSum(terms)
        self.assertTrue(direct_sum(virtual, scale(-1, virtual)).is_empty())


class NormalizeTests(SimpleTestCase):

    def test_cancellation_of_negative_middle_terms(self):
        virtual = VirtualSum({8: 6, 1: 1}).add(4, -2).add(4, 2)
        self.assertEqual(normalize(virtual, 7, 7, 2), lam(7, 7, 2, (8, 6), (1, 1)))

    def test_simple_cases(self):
        self.assertEqual(str(normalize(VirtualSum({2: 1}), 1, 2, 2)), 'V2')
        self.assertEqual(str(normalize(VirtualSum({4: 1, 2: 1}), 2, 3, 2)), 'V4 + V2')

    def test_surviving_negative_is_a_cancellation_failure(self):
        with self.assertRaises(CancellationFailure):
            normalize(VirtualSum({8: 7, 4: -1, 1: 3}), 7, 7, 2)

    def test_invariant_violation_is_an_integrity_failure(self):
        with self.assertRaises(IntegrityFailure):
            normalize(VirtualSum({4: 1}), 2, 3, 2)


class PartitionTests(SimpleTestCase):

    def test_to_partition(self):
        self.assertEqual(to_partition(lam(5, 5, 2, (8, 2), (4, 2), (1, 1))).parts, (8, 8, 4, 4, 1))
        self.assertEqual(to_partition(lam(1, 6, 5, (6, 1))).parts, (6,))
        self.assertEqual(str(to_partition(lam(3, 3, 2, (4, 2), (1, 1)))), '4 4 1')

    def test_from_partition(self):
        self.assertEqual(from_partition((3, 3, 3), 3, 3, 3), lam(3, 3, 3, (3, 3)))

    def test_round_trip(self):
        d = lam(5, 6, 2, (8, 3), (4, 1), (2, 1))
        self.assertEqual(from_partition(to_partition(d), 5, 6, 2), d)

    def test_partition_must_be_non_increasing(self):
        with self.assertRaises(IntegrityFailure):
            Partition((1, 2))


class TransformTests(SimpleTestCase):

    def test_dual(self):
        self.assertEqual(dual(lam(3, 3, 2, (4, 2), (1, 1)), 4), lam(1, 3, 2, (3, 1)))
        self.assertEqual(
            dual(lam(5, 5, 2, (8, 2), (4, 2), (1, 1)), 8),
            lam(3, 5, 2, (7, 1), (4, 2)),
        )
        self.assertEqual(dual(lam(1, 1, 2, (1, 1)), 2), lam(1, 1, 2, (1, 1)))

    def test_dual_at_full_power_is_empty(self):
        self.assertEqual(dual(lam(4, 3, 2, (4, 3)), 4), empty_decomposition(0, 3, 2))

    def test_dual_is_an_involution(self):
        d = lam(5, 5, 2, (8, 2), (4, 2), (1, 1))
        self.assertEqual(dual(dual(d, 8), 8), d)

    def test_dual_needs_a_large_enough_power(self):
        with self.assertRaises(InvalidArgument):
            dual(lam(5, 5, 2, (8, 2), (4, 2), (1, 1)), 4)
        with self.assertRaises(InvalidArgument):
            dual(lam(3, 3, 2, (4, 2), (1, 1)), 6)

    def test_reflect(self):
        self.assertEqual(reflect(lam(1, 1, 2, (1, 1)), 4), lam(3, 3, 2, (4, 2), (1, 1)))
        self.assertEqual(reflect(lam(1, 2, 2, (2, 1)), 8), lam(7, 6, 2, (8, 5), (2, 1)))

    def test_reflect_at_complementary_sizes_keeps_parts(self):
        d = lam(1, 3, 2, (3, 1))
        self.assertEqual(reflect(d, 4), lam(3, 1, 2, (3, 1)))

    def test_reflect_past_the_power_removes_top_parts(self):
        self.assertEqual(reflect(lam(3, 3, 2, (4, 2), (1, 1)), 4), lam(1, 1, 2, (1, 1)))
        self.assertEqual(reflect(lam(4, 3, 2, (4, 3)), 4), empty_decomposition(0, 1, 2))

    def test_reflect_agrees_with_double_duality(self):
        for d, pn in [
            (lam(1, 2, 2, (2, 1)), 8),
            (lam(5, 5, 2, (8, 2), (4, 2), (1, 1)), 8),
            (lam(2, 3, 7, (4, 1), (2, 1)), 7),
        ]:
            with self.subTest(context=d.context, pn=pn):
                self.assertEqual(reflect(d, pn), reflect_via_duality(d, pn))

    def test_reflect_range(self):
        with self.assertRaises(InvalidArgument):
            reflect(lam(1, 5, 2, (5, 1)), 4)
        with self.assertRaises(InvalidArgument):
            reflect(lam(1, 2, 2, (2, 1)), 6)


class DecompositionSerializerTests(SimpleTestCase):

    def test_canonical_json(self):
        d = lam(5, 6, 2, (8, 3), (4, 1), (2, 1))
        self.assertEqual(
            render_json(DecompositionSerializer(d).data),
            '{"r":5,"s":6,"p":2,"parts":[{"dim":8,"mult":3},{"dim":4,"mult":1},{"dim":2,"mult":1}]}',
        )

    def test_deserializes_back(self):
        d = lam(5, 5, 2, (8, 2), (4, 2), (1, 1))
        payload = json.loads(render_json(DecompositionSerializer(d).data))
        serializer = DecompositionSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), d)

    def test_rejects_inconsistent_payload(self):
        serializer = DecompositionSerializer(data={'r': 2, 's': 2, 'p': 2, 'parts': [{'dim': 4, 'mult': 1}]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('parts', serializer.errors)
