import time
from math import isqrt

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase, override_settings

from iima.algorithm import decompose_iima
from renaud.algorithm import decompose_renaud
from utils.exceptions import InvalidArgument, ResourceLimit
from .algorithm import decompose_oracle, decompose_oracle_with_ranks, nilpotent_part, rank_sequence
from .matrices import MatrixModP, identity, jordan_block, kron, mat_mul, rank_mod_p, row_echelon, subtract

# smallest prime above 2^32, large enough to force Python-int entries
BIG_PRIME = 4294967311


class MatrixTests(SimpleTestCase):

    def test_jordan_block(self):
        self.assertEqual(jordan_block(2, 2).tolist(), [[1, 1], [0, 1]])
        self.assertEqual(jordan_block(3, 5).tolist(), [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        with self.assertRaises(InvalidArgument):
            jordan_block(0, 2)

    def test_tensor_nilpotent_part(self):
        j2 = jordan_block(2, 2)
        n = subtract(kron(j2, j2), identity(4, 2))
        self.assertEqual(n.tolist(), [[0, 1, 1, 1], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]])
        self.assertEqual(nilpotent_part(2, 2, 2), n)

    def test_kron_with_identity(self):
        m = MatrixModP.from_rows([[1, 2], [3, 4]], 5)
        self.assertEqual(kron(identity(1, 5), m), m)

    def test_entries_are_reduced(self):
        self.assertEqual(MatrixModP.from_rows([[7, -1]], 5).tolist(), [[2, 4]])

    def test_mismatches(self):
        with self.assertRaises(InvalidArgument):
            mat_mul(identity(2, 3), identity(3, 3))
        with self.assertRaises(InvalidArgument):
            subtract(identity(2, 3), identity(3, 3))
        with self.assertRaises(InvalidArgument):
            kron(identity(2, 3), identity(2, 5))

    def test_rank(self):
        j2 = jordan_block(2, 2)
        self.assertEqual(rank_mod_p(subtract(kron(j2, j2), identity(4, 2))), 2)
        self.assertEqual(rank_mod_p(MatrixModP(np.zeros((3, 4), dtype=np.int64), 7)), 0)
        self.assertEqual(rank_mod_p(identity(6, 3)), 6)
        self.assertEqual(rank_mod_p(MatrixModP.from_rows([[1, 2], [2, 4]], 7)), 1)
        self.assertEqual(rank_mod_p(MatrixModP.from_rows([[1, 2], [2, 4]], 3)), 1)
        self.assertEqual(rank_mod_p(MatrixModP.from_rows([[1, 2], [3, 4]], 2)), 1)

    def test_row_echelon(self):
        m = MatrixModP.from_rows([[0, 2, 4], [1, 1, 1], [2, 2, 2], [1, 3, 1]], 5)
        basis = row_echelon(m)
        self.assertEqual(basis.shape, (3, 3))
        leading = [int(np.nonzero(row)[0][0]) for row in basis.entries]
        self.assertEqual(leading, [0, 1, 2])
        self.assertEqual(row_echelon(MatrixModP(np.zeros((0, 4), dtype=np.int64), 3)).shape, (0, 4))

    def test_product_matches_exact_integers(self):
        rows = [[(3 * i + 5 * j) % 7 for j in range(9)] for i in range(9)]
        m = MatrixModP.from_rows(rows, 7)
        expected = [
            [sum(rows[i][k] * rows[k][j] for k in range(9)) % 7 for j in range(9)]
            for i in range(9)
        ]
        self.assertEqual(mat_mul(m, m).tolist(), expected)
        big = MatrixModP.from_rows([[BIG_PRIME - 1, 1], [0, BIG_PRIME - 1]], BIG_PRIME)
        self.assertEqual(mat_mul(big, big).tolist(), [[1, BIG_PRIME - 2], [0, 1]])

    def test_rank_over_a_large_field(self):
        m = identity(5, BIG_PRIME)
        self.assertEqual(m.entries.dtype, object)
        self.assertEqual(rank_mod_p(m), 5)


class OracleTests(SimpleTestCase):

    def test_rank_sequence(self):
        self.assertEqual(rank_sequence(2, 2, 2), [4, 2, 0])
        self.assertEqual(rank_sequence(1, 4, 3), [4, 3, 2, 1, 0])

    def test_examples(self):
        self.assertEqual(str(decompose_oracle(2, 2, 2)), '2V2')
        self.assertEqual(str(decompose_oracle(1, 7, 3)), 'V7')
        self.assertEqual(str(decompose_oracle(2, 3, 2)), 'V4 + V2')
        self.assertEqual(str(decompose_oracle(5, 5, 2)), '2V8 + 2V4 + V1')
        self.assertEqual(str(decompose_oracle(5, 6, 2)), '3V8 + V4 + V2')
        self.assertEqual(str(decompose_oracle(7, 7, 2)), '6V8 + V1')
        self.assertEqual(str(decompose_oracle(6, 6, 3)), '3V9 + 3V3')

    def test_large_characteristic(self):
        self.assertEqual(str(decompose_oracle(3, 3, BIG_PRIME)), 'V5 + V3 + V1')

    def test_ranks_come_with_the_decomposition(self):
        decomposition, ranks = decompose_oracle_with_ranks(5, 5, 2)
        self.assertEqual(str(decomposition), '2V8 + 2V4 + V1')
        self.assertEqual(ranks, rank_sequence(5, 5, 2))
        self.assertEqual(ranks[:2], [25, 20])

    def test_default_cap_is_a_runtime_bound(self):
        side = isqrt(settings.JORDANPARTS_ORACLE_CAP)
        started = time.perf_counter()
        oracle = decompose_oracle(side, side, 2)
        elapsed = time.perf_counter() - started
        self.assertEqual(oracle, decompose_renaud(side, side, 2))
        self.assertLess(elapsed, 10, f'oracle took {elapsed:.1f}s at {side} x {side}')

    def test_cap(self):
        with self.assertRaises(ResourceLimit):
            decompose_oracle(5, 5, 2, cap=24)
        self.assertEqual(decompose_oracle(5, 5, 2, cap=25).b, 5)

    @override_settings(JORDANPARTS_ORACLE_CAP=10)
    def test_cap_defaults_to_setting(self):
        with self.assertRaises(ResourceLimit):
            decompose_oracle(3, 4, 2)

    def test_agrees_with_both_algorithms(self):
        for p in (2, 3, 5, 7):
            for r in range(1, 13):
                for s in range(r, 13):
                    with self.subTest(r=r, s=s, p=p):
                        oracle = decompose_oracle(r, s, p)
                        self.assertEqual(oracle, decompose_renaud(r, s, p))
                        self.assertEqual(oracle, decompose_iima(r, s, p))

    def test_adjacent_char2_base_cases(self):
        for e in range(4):
            r = 2 ** e
            with self.subTest(r=r):
                self.assertEqual(
                    decompose_oracle(r, r + 1, 2).pairs,
                    (((2 * r, 1),) + (((r, r - 1),) if r > 1 else ())),
                )
