import csv
import io

from greenring.decompositions import to_partition
from greenring.serializers import DecompositionSerializer, render_json
from verify.algorithms import decompose

from cli.base import JordanPartsCommand
from cli.choices import Algorithm, OutputFormat
from cli.serializers import TableRequestSerializer


class Command(JordanPartsCommand):
    help = 'Tabulate lambda(r, s, p) for 1 <= r <= rmax, r <= s <= smax.'
    request_serializer = TableRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--rmax', type=int, required=True)
        parser.add_argument('--smax', type=int, required=True)
        parser.add_argument('-p', type=int, required=True)
        parser.add_argument('--algorithm', choices=Algorithm.values, default=Algorithm.AUTO)
        parser.add_argument(
            '--format', choices=[OutputFormat.CSV, OutputFormat.JSON], default=OutputFormat.CSV
        )
        parser.add_argument('--header', action='store_true', help='start the CSV with an r,s,p,partition row')

    def run(self, data):
        p = data['p']
        rows = [
            decompose(r, s, p, data['algorithm'])
            for r in range(1, data['rmax'] + 1)
            for s in range(r, data['smax'] + 1)
        ]

        if data['format'] == OutputFormat.JSON:
            return render_json(DecompositionSerializer(rows, many=True).data)

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        if data['header']:
            writer.writerow(['r', 's', 'p', 'partition'])
        for d in rows:
            writer.writerow([d.r, d.s, d.p, str(to_partition(d))])
        return buffer.getvalue()
