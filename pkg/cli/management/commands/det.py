from iima.determinants import det_Dk

from cli.base import JordanPartsCommand
from cli.serializers import DetRequestSerializer


class Command(JordanPartsCommand):
    help = 'Print the binomial determinants D_k(r, s), optionally reduced mod p.'
    request_serializer = DetRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('-r', type=int, required=True)
        parser.add_argument('-s', type=int, required=True)
        parser.add_argument('-k', type=int, help='a single k (default: every 0 <= k <= r)')
        parser.add_argument('-p', type=int, help='also print each value mod p')

    def run(self, data):
        r, s, p = data['r'], data['s'], data['p']
        ks = range(r + 1) if data['k'] is None else [data['k']]

        lines = []
        for k in ks:
            value = det_Dk(r, s, k)
            line = f'{k}: {value}'
            if p is not None:
                line += f'  mod {p}: {value % p}'
            lines.append(line)
        return '\n'.join(lines)
