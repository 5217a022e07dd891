from iima.determinants import delta_sequence

from cli.base import JordanPartsCommand
from cli.serializers import DeltaRequestSerializer


class Command(JordanPartsCommand):
    help = 'Print the delta-sequence of (r, s, p) and the indices where it is 1.'
    request_serializer = DeltaRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('-r', type=int, required=True)
        parser.add_argument('-s', type=int, required=True)
        parser.add_argument('-p', type=int, required=True)

    def run(self, data):
        sequence = delta_sequence(data['r'], data['s'], data['p'])
        return f'{sequence}  k: {" ".join(str(k) for k in sequence.ones)}'
