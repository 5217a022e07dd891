from django.core.management.base import CommandError

from oracle.algorithm import decompose_oracle_with_ranks
from renaud.algorithm import decompose_renaud

from cli.base import FAILURE, JordanPartsCommand
from cli.serializers import OracleRequestSerializer


class Command(JordanPartsCommand):
    help = 'Decompose by brute force over F_p and compare with the recursive algorithm.'
    request_serializer = OracleRequestSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('-r', type=int, required=True)
        parser.add_argument('-s', type=int, required=True)
        parser.add_argument('-p', type=int, required=True)
        parser.add_argument('--oracle-cap', type=int, help='largest r*s to attempt (default: JORDANPARTS_ORACLE_CAP)')

    def run(self, data):
        r, s, p = data['r'], data['s'], data['p']
        oracle, ranks = decompose_oracle_with_ranks(r, s, p, cap=data['oracle_cap'])
        renaud = decompose_renaud(r, s, p)
        self.agrees = oracle == renaud

        return '\n'.join([
            f'ranks: {" ".join(str(rank) for rank in ranks)}',
            f'oracle: {oracle}',
            f'renaud: {renaud} ({"agrees" if self.agrees else "DISAGREES"})',
        ])

    def after_output(self, data):
        if not self.agrees:
            raise CommandError('oracle and renaud disagree', returncode=FAILURE)
