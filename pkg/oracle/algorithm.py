"""
Ground truth by brute force: the Jordan type of J_r(1) (x) J_s(1) over F_p.

With N the nilpotent part, the number of blocks of size >= k is
rank(N^(k-1)) - rank(N^k), so the rank sequence of the powers of N gives
the partition directly.
"""
from django.conf import settings

from greenring.decompositions import Decomposition
from numtheory.arithmetic import require_prime
from utils.exceptions import IntegrityFailure, InvalidArgument, ResourceLimit
from .matrices import identity, jordan_block, kron, mat_mul, row_echelon, subtract

import logging

logger = logging.getLogger(__name__)


def nilpotent_part(r, s, p):
    """
    J_r(1) (x) J_s(1) - I over F_p.
    """
    product = kron(jordan_block(r, p), jordan_block(s, p))
    return subtract(product, identity(r * s, p))


def rank_sequence(r, s, p):
    """
    [rank(N^0), rank(N^1), ..., 0].
    """
    require_prime(p)
    if r < 1 or s < 1:
        raise InvalidArgument(f'dimensions must be positive, got ({r}, {s})')

    nilpotent = nilpotent_part(r, s, p)
    ranks = [r * s]
    # the row space of N^(k+1) is the row space of N^k times N
    basis = row_echelon(nilpotent)
    ranks.append(basis.shape[0])
    while ranks[-1]:
        basis = row_echelon(mat_mul(basis, nilpotent))
        if basis.shape[0] >= ranks[-1]:
            raise IntegrityFailure(f'rank stalled at {ranks[-1]} for ({r}, {s}, {p}): {ranks}')
        ranks.append(basis.shape[0])
    logger.debug('rank sequence of (%s, %s, %s): %s', r, s, p, ranks)

    drops = [a - b for a, b in zip(ranks, ranks[1:])]
    if any(d <= 0 for d in drops) or any(a < b for a, b in zip(drops, drops[1:])):
        raise IntegrityFailure(f'rank sequence {ranks} of ({r}, {s}, {p}) is not that of a nilpotent matrix')
    return ranks


def decomposition_from_ranks(r, s, p, ranks):
    # at_least[k-1] = number of blocks of size >= k
    at_least = [a - b for a, b in zip(ranks, ranks[1:])] + [0]
    pairs = tuple(
        (size, at_least[size - 1] - at_least[size])
        for size in range(len(at_least) - 1, 0, -1)
        if at_least[size - 1] > at_least[size]
    )
    return Decomposition(r, s, p, pairs)


def decompose_oracle_with_ranks(r, s, p, cap=None):
    """
    (lambda(r, s, p), rank sequence); refuses r*s above the cap.
    """
    cap = settings.JORDANPARTS_ORACLE_CAP if cap is None else cap
    if r * s > cap:
        raise ResourceLimit(f'oracle refuses r*s = {r * s} above the cap {cap}')

    ranks = rank_sequence(r, s, p)
    return decomposition_from_ranks(r, s, p, ranks), ranks


def decompose_oracle(r, s, p, cap=None):
    return decompose_oracle_with_ranks(r, s, p, cap)[0]
