from greenring.decompositions import to_partition
from greenring.serializers import DecompositionSerializer, render_json
from verify.algorithms import decompose

from cli.base import JordanPartsCommand
from cli.choices import Algorithm, OutputFormat
from cli.serializers import DecomposeRequestSerializer


class Command(JordanPartsCommand):
    help = 'Print the decomposition of V_r (x) V_s in characteristic p.'
    request_serializer = DecomposeRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('-r', type=int, required=True)
        parser.add_argument('-s', type=int, required=True)
        parser.add_argument('-p', type=int, required=True)
        parser.add_argument('--algorithm', choices=Algorithm.values, default=Algorithm.AUTO)
        parser.add_argument(
            '--format', choices=[OutputFormat.TEXT, OutputFormat.JSON], default=OutputFormat.TEXT
        )

    def run(self, data):
        d = decompose(data['r'], data['s'], data['p'], data['algorithm'])
        if data['format'] == OutputFormat.JSON:
            return render_json(DecompositionSerializer(d).data)

        lines = [str(d)]
        if self.verbosity >= 2:
            lines.append(f'partition: {to_partition(d)}')
        return '\n'.join(lines)
