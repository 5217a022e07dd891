from django.core.management.base import CommandError

from greenring.serializers import render_json
from verify.sweeps import grid_cells, run_sweep

from cli.base import FAILURE, JordanPartsCommand
from cli.choices import OutputFormat
from cli.serializers import VerifyRequestSerializer


class Command(JordanPartsCommand):
    help = 'Cross-check every algorithm and law on a grid of (r, s, p); exits 1 on any failure.'
    request_serializer = VerifyRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--rmax', type=int, required=True)
        parser.add_argument('--smax', type=int, required=True)
        parser.add_argument('--primes', default='2,3,5,7,11', help='comma-separated primes')
        parser.add_argument(
            '--oracle-cap', type=int, default=0,
            help='also run the oracle on cells with r*s <= N (0 = never)',
        )
        parser.add_argument(
            '--format', choices=[OutputFormat.TEXT, OutputFormat.JSON], default=OutputFormat.TEXT
        )

    def run(self, data):
        cells = grid_cells(data['rmax'], data['smax'], data['primes'])
        reports = run_sweep(cells, data['oracle_cap'])
        self.failures = sum(1 for report in reports if not report['ok'])

        if data['format'] == OutputFormat.JSON:
            return render_json(reports)

        lines = []
        for report in reports:
            lines.extend(report['diagnostics'])
            lines.extend(f'note: {note}' for note in report['notes'])
        lines.append(f'checked {len(reports)} cells, {self.failures} failures')
        return '\n'.join(lines)

    def after_output(self, data):
        if self.failures:
            raise CommandError(f'{self.failures} cells failed verification', returncode=FAILURE)
