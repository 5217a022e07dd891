from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings

from greenring.decompositions import Decomposition
from greenring.serializers import render_json
from iima.algorithm import decompose_iima
from renaud.algorithm import decompose_renaud
from utils.exceptions import InvalidArgument
from .algorithms import applicable_algorithms, closed_form_for, decompose
from .checks import (
    check_char2_parity, check_duality, check_largest_part, check_mults_parts_roundtrip,
    check_pparts_lcm_gcd, check_reflection, check_repeated_parts_divisible,
    check_smallest_part, check_top_part_residue,
)
from .cross import CrossCheckReport, cross_check
from .serializers import CrossCheckReportSerializer
from .sweeps import grid_cells, run_sweep
from .tasks import cross_check_cell


def lam(r, s, p, *pairs):
    return Decomposition(r, s, p, pairs)


LAMBDA_5_5_2 = lam(5, 5, 2, (8, 2), (4, 2), (1, 1))
LAMBDA_5_6_2 = lam(5, 6, 2, (8, 3), (4, 1), (2, 1))


class AlgorithmRegistryTests(SimpleTestCase):

    def test_applicable_algorithms(self):
        self.assertEqual(applicable_algorithms(5, 6, 2), ['renaud', 'iima', 'iima-recurrence', 'char2-adjacent'])
        self.assertEqual(applicable_algorithms(2, 3, 7), ['renaud', 'iima', 'iima-recurrence', 'largep'])
        self.assertEqual(applicable_algorithms(3, 3, 2, oracle_cap=9)[-2:], ['char2-square', 'oracle'])
        self.assertNotIn('oracle', applicable_algorithms(3, 4, 2, oracle_cap=9))

    def test_auto_prefers_a_closed_form(self):
        self.assertEqual(closed_form_for(5, 5, 2).name, 'char2-square')
        self.assertIsNone(closed_form_for(5, 7, 3))
        self.assertEqual(str(decompose(5, 7, 3)), str(decompose(5, 7, 3, 'iima')))
        self.assertEqual(str(decompose(5, 5, 2)), '2V8 + 2V4 + V1')

    def test_every_algorithm_on_an_example(self):
        for algorithm in ('renaud', 'iima', 'iima-recurrence', 'char2-adjacent', 'closedform', 'oracle'):
            with self.subTest(algorithm=algorithm):
                self.assertEqual(decompose(5, 6, 2, algorithm), LAMBDA_5_6_2)

    def test_inapplicable_algorithm(self):
        with self.assertRaises(InvalidArgument):
            decompose(3, 5, 3, 'closedform')
        with self.assertRaises(InvalidArgument):
            decompose(3, 5, 3, 'char2-square')
        with self.assertRaises(InvalidArgument):
            decompose(3, 5, 3, 'nonsense')


class CheckerTests(SimpleTestCase):

    def test_pparts_lcm_gcd(self):
        self.assertTrue(check_pparts_lcm_gcd(LAMBDA_5_5_2))
        self.assertTrue(check_pparts_lcm_gcd(lam(2, 3, 2, (4, 1), (2, 1))))
        self.assertTrue(check_pparts_lcm_gcd(lam(1, 1, 5, (1, 1))))
        self.assertFalse(check_pparts_lcm_gcd(lam(2, 2, 2, (3, 1), (1, 1))))

    def test_repeated_parts_divisible(self):
        self.assertTrue(check_repeated_parts_divisible(LAMBDA_5_5_2))
        self.assertTrue(check_repeated_parts_divisible(lam(7, 7, 2, (8, 6), (1, 1))))
        self.assertTrue(check_repeated_parts_divisible(lam(1, 4, 3, (4, 1))))
        self.assertFalse(check_repeated_parts_divisible(lam(3, 3, 3, (4, 2), (1, 1))))

    def test_mults_parts_roundtrip(self):
        self.assertTrue(check_mults_parts_roundtrip(LAMBDA_5_5_2))
        self.assertTrue(check_mults_parts_roundtrip(LAMBDA_5_6_2))
        self.assertTrue(check_mults_parts_roundtrip(lam(1, 4, 3, (4, 1))))
        self.assertFalse(check_mults_parts_roundtrip(lam(3, 3, 2, (4, 1), (3, 1), (2, 1))))

    def test_top_part_residue(self):
        self.assertTrue(check_top_part_residue(lam(2, 3, 7, (4, 1), (2, 1))))
        self.assertTrue(check_top_part_residue(LAMBDA_5_5_2))
        self.assertTrue(check_top_part_residue(lam(1, 1, 3, (1, 1))))
        self.assertFalse(check_top_part_residue(lam(3, 4, 3, (5, 1), (4, 1), (3, 1))))

    def test_duality(self):
        self.assertTrue(check_duality(5, 5, 2, 3))
        self.assertTrue(check_duality(3, 3, 5, 1))
        self.assertTrue(check_duality(4, 3, 2, 2))
        with self.assertRaises(InvalidArgument):
            check_duality(5, 5, 2, 2)

    def test_reflection(self):
        self.assertTrue(check_reflection(5, 5, 2, 3))
        self.assertTrue(check_reflection(1, 1, 2, 2))
        self.assertTrue(check_reflection(4, 4, 2, 2))

    def test_duality_and_reflection_grids(self):
        for p, n in ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)):
            pn = p ** n
            for r in range(1, pn + 1):
                for s in range(1, pn + 1):
                    self.assertTrue(check_duality(r, s, p, n), (r, s, p, n))
                    self.assertTrue(check_reflection(r, s, p, n), (r, s, p, n))

    def test_smallest_and_largest_part(self):
        self.assertTrue(check_smallest_part(decompose(6, 6, 2, 'renaud')))
        self.assertTrue(check_smallest_part(decompose(9, 9, 3, 'renaud')))
        self.assertTrue(check_largest_part(3, 3, 2, 2))
        self.assertTrue(check_largest_part(3, 2, 2, 2))
        with self.assertRaises(InvalidArgument):
            check_smallest_part(LAMBDA_5_6_2)

    def test_char2_parity(self):
        self.assertTrue(check_char2_parity(LAMBDA_5_5_2))
        self.assertTrue(check_char2_parity(LAMBDA_5_6_2))
        self.assertFalse(check_char2_parity(lam(3, 3, 2, (5, 1), (3, 1), (1, 1))))
        self.assertFalse(check_char2_parity(lam(6, 6, 2, (16, 2), (1, 4))))
        with self.assertRaises(InvalidArgument):
            check_char2_parity(lam(2, 3, 7, (4, 1), (2, 1)))


class CrossCheckTests(SimpleTestCase):

    def test_adjacent_char2_cell(self):
        report = cross_check(5, 6, 2, oracle_cap=4096)
        self.assertTrue(report.ok, report.diagnostics())
        self.assertEqual(report.value, LAMBDA_5_6_2)
        self.assertEqual(
            set(report.algorithms),
            {'renaud', 'iima', 'iima-recurrence', 'char2-adjacent', 'oracle'},
        )
        self.assertTrue(report.checks['renaud=oracle'])
        self.assertEqual(len(report.notes), 1)
        self.assertIn('2V1', report.notes[0])
        self.assertIn('3V8 + V4 + V2', report.notes[0])

    def test_trivial_cells(self):
        report = cross_check(1, 1, 2)
        self.assertTrue(report.ok)
        self.assertEqual(str(report.value), 'V1')
        self.assertIn('largep', report.algorithms)

        report = cross_check(2, 3, 7)
        self.assertTrue(report.ok)
        self.assertEqual(str(report.algorithms['largep']), 'V4 + V2')

    def test_reduced_grid(self):
        for p in (2, 3, 5, 7, 11):
            for r in range(1, 25):
                for s in range(r, 25):
                    report = cross_check(r, s, p)
                    self.assertTrue(report.ok, report.diagnostics())

    def test_recursive_and_determinant_algorithms_agree_up_to_128(self):
        mismatches = [
            (r, s, p)
            for p in (2, 3, 5, 7, 11)
            for r in range(1, 129)
            for s in range(r, 129)
            if decompose_renaud(r, s, p) != decompose_iima(r, s, p)
        ]
        self.assertEqual(mismatches, [])

    def test_diagnostics_name_both_decompositions(self):
        report = CrossCheckReport(
            5, 5, 2,
            algorithms={'renaud': LAMBDA_5_5_2, 'iima': lam(5, 5, 2, (9, 1), (7, 1), (4, 2), (1, 1))},
            checks={'renaud=iima': False, 'duality': True},
        )
        self.assertFalse(report.ok)
        self.assertEqual(
            report.diagnostics(),
            ['(5, 5, 2): iima gives V9 + V7 + 2V4 + V1 but renaud gives 2V8 + 2V4 + V1'],
        )

    def test_errors_fail_the_report(self):
        report = CrossCheckReport(1, 1, 2, errors={'oracle': 'ResourceLimit: too big'})
        self.assertFalse(report.ok)
        self.assertEqual(report.diagnostics(), ['(1, 1, 2): oracle raised ResourceLimit: too big'])


class SerializationTests(SimpleTestCase):

    def test_report_json(self):
        data = CrossCheckReportSerializer(cross_check(2, 3, 7)).data
        self.assertEqual(data['r'], 2)
        self.assertTrue(data['ok'])
        self.assertEqual(data['algorithms']['renaud'], [{'dim': 4, 'mult': 1}, {'dim': 2, 'mult': 1}])
        self.assertIn('"renaud=largep":true', render_json(data))


class SweepTests(SimpleTestCase):

    def test_grid_cells(self):
        self.assertEqual(grid_cells(1, 1, [2]), [(1, 1, 2)])
        self.assertEqual(len(grid_cells(12, 12, [2, 3, 5])), 78 * 3)
        self.assertEqual(grid_cells(2, 3, [3, 2])[:3], [(1, 1, 2), (1, 2, 2), (1, 3, 2)])

    def test_task_returns_serialized_report(self):
        result = cross_check_cell.apply(args=(5, 5, 2, 25)).get()
        self.assertTrue(result['ok'])
        self.assertIn('oracle', result['algorithms'])

    @override_settings(CELERY_TASK_ALWAYS_EAGER=True)
    def test_run_sweep_sorts_by_cell(self):
        reports = run_sweep(grid_cells(4, 4, [3, 2]), oracle_cap=16)
        self.assertEqual(len(reports), 20)
        self.assertEqual(
            [(report['r'], report['s'], report['p']) for report in reports[:3]],
            [(1, 1, 2), (1, 1, 3), (1, 2, 2)],
        )
        self.assertTrue(all(report['ok'] for report in reports))

    @override_settings(CELERY_TASK_ALWAYS_EAGER=False, CELERY_RESULT_BACKEND='cache+memory://')
    def test_workers_need_a_shared_result_backend(self):
        with self.assertRaises(ImproperlyConfigured):
            run_sweep(grid_cells(1, 1, [2]))
