import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from greenring.serializers import DecompositionSerializer


def run(name, **options):
    out = StringIO()
    call_command(name, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


class DecomposeCommandTests(SimpleTestCase):

    def test_text(self):
        self.assertEqual(run('decompose', r=5, s=5, p=2), '2V8 + 2V4 + V1\n')
        self.assertEqual(run('decompose', r=1, s=9, p=3), 'V9\n')

    def test_each_algorithm(self):
        for algorithm in ('auto', 'renaud', 'iima', 'closedform', 'oracle'):
            with self.subTest(algorithm=algorithm):
                self.assertEqual(run('decompose', r=5, s=6, p=2, algorithm=algorithm), '3V8 + V4 + V2\n')

    def test_json(self):
        output = run('decompose', r=5, s=6, p=2, format='json')
        self.assertEqual(
            output,
            '{"r":5,"s":6,"p":2,"parts":[{"dim":8,"mult":3},{"dim":4,"mult":1},{"dim":2,"mult":1}]}\n',
        )
        serializer = DecompositionSerializer(data=json.loads(output))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(str(serializer.save()), '3V8 + V4 + V2')

    def test_partition_line_at_higher_verbosity(self):
        self.assertEqual(run('decompose', r=5, s=5, p=2, verbosity=2), '2V8 + 2V4 + V1\npartition: 8 8 4 4 1\n')

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'out.txt')
            self.assertEqual(run('decompose', r=2, s=3, p=2, output=path), '')
            with open(path, encoding='utf-8') as handle:
                self.assertEqual(handle.read(), 'V4 + V2\n')

    def test_usage_errors(self):
        for options in (
            {'r': 0, 's': 3, 'p': 2},
            {'r': 3, 's': 3, 'p': 4},
            {'r': 3, 's': 5, 'p': 3, 'algorithm': 'closedform'},
            {'r': 80, 's': 80, 'p': 2, 'algorithm': 'oracle'},
        ):
            with self.subTest(options=options):
                with self.assertRaises(CommandError) as context:
                    run('decompose', **options)
                self.assertEqual(context.exception.returncode, 2)

    def test_repeatable(self):
        self.assertEqual(run('decompose', r=11, s=17, p=3), run('decompose', r=11, s=17, p=3))


class TableCommandTests(SimpleTestCase):

    def test_csv(self):
        self.assertEqual(
            run('table', rmax=3, smax=3, p=2),
            '1,1,2,1\n'
            '1,2,2,2\n'
            '1,3,2,3\n'
            '2,2,2,2 2\n'
            '2,3,2,4 2\n'
            '3,3,2,4 4 1\n',
        )

    def test_single_cell(self):
        self.assertEqual(run('table', rmax=1, smax=1, p=5), '1,1,5,1\n')

    def test_header_is_opt_in(self):
        self.assertEqual(run('table', rmax=1, smax=1, p=5, header=True), 'r,s,p,partition\n1,1,5,1\n')

    def test_json(self):
        rows = json.loads(run('table', rmax=2, smax=2, p=2, format='json'))
        self.assertEqual([(row['r'], row['s']) for row in rows], [(1, 1), (1, 2), (2, 2)])
        self.assertEqual(rows[-1]['parts'], [{'dim': 2, 'mult': 2}])


class DeltaCommandTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(run('delta', r=5, s=5, p=2), '101011  k: 0 2 4 5\n')
        self.assertEqual(run('delta', r=1, s=5, p=3), '11  k: 0 1\n')
        self.assertEqual(run('delta', r=2, s=3, p=2), '111  k: 0 1 2\n')

    def test_unsorted_is_a_usage_error(self):
        with self.assertRaises(CommandError) as context:
            run('delta', r=5, s=3, p=2)
        self.assertEqual(context.exception.returncode, 2)


class DetCommandTests(SimpleTestCase):

    def test_all_k(self):
        self.assertEqual(run('det', r=5, s=5), '0: 1\n1: 70\n2: 175\n3: 50\n4: 5\n5: 1\n')

    def test_single_k_with_residue(self):
        self.assertEqual(run('det', r=5, s=5, k=2, p=2), '2: 175  mod 2: 1\n')

    def test_k_out_of_range(self):
        with self.assertRaises(CommandError) as context:
            run('det', r=3, s=5, k=4)
        self.assertEqual(context.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):

    def test_single_cell(self):
        self.assertEqual(run('verify', rmax=1, smax=1, primes='2'), 'checked 1 cells, 0 failures\n')

    def test_grid_with_oracle(self):
        output = run('verify', rmax=6, smax=6, primes='2,3,5', oracle_cap=36)
        lines = output.splitlines()
        self.assertEqual(lines[-1], 'checked 63 cells, 0 failures')
        self.assertTrue(all(line.startswith('note: ') for line in lines[:-1]))
        self.assertTrue(any('lambda(5, 6, 2)' in line for line in lines))

    def test_json_report(self):
        reports = json.loads(run('verify', rmax=5, smax=6, primes='2', oracle_cap=30, format='json'))
        report = next(item for item in reports if (item['r'], item['s']) == (5, 6))
        self.assertTrue(report['ok'])
        self.assertEqual(
            {name: report['algorithms'][name] for name in ('renaud', 'iima', 'char2-adjacent', 'oracle')},
            {name: [{'dim': 8, 'mult': 3}, {'dim': 4, 'mult': 1}, {'dim': 2, 'mult': 1}]
             for name in ('renaud', 'iima', 'char2-adjacent', 'oracle')},
        )

    def test_bad_primes(self):
        with self.assertRaises(CommandError) as context:
            run('verify', rmax=2, smax=2, primes='2,4')
        self.assertEqual(context.exception.returncode, 2)


class OracleCommandTests(SimpleTestCase):

    def test_agreement(self):
        self.assertEqual(
            run('oracle', r=2, s=2, p=2),
            'ranks: 4 2 0\noracle: 2V2\nrenaud: 2V2 (agrees)\n',
        )

    def test_cap(self):
        with self.assertRaises(CommandError) as context:
            run('oracle', r=5, s=5, p=2, oracle_cap=10)
        self.assertEqual(context.exception.returncode, 2)
