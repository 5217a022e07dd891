"""
Registry of every producer of lambda(r, s, p) and the dispatcher the CLI shares.
"""
from dataclasses import dataclass
from typing import Callable

from closedform.formulas import (
    decompose_large_p, decompose_rr1_char2, decompose_rr_char2, large_p_applies,
)
from iima.algorithm import decompose_iima, parts_recurrence
from iima.determinants import delta_sequence
from greenring.decompositions import from_partition
from oracle.algorithm import decompose_oracle
from renaud.algorithm import decompose_renaud
from utils.exceptions import InvalidArgument


@dataclass(frozen=True)
class Producer:
    name: str
    applies: Callable
    compute: Callable
    closed_form: bool = False


def _iima_recurrence(r, s, p):
    sequence = delta_sequence(min(r, s), max(r, s), p)
    return from_partition(parts_recurrence(sequence), r, s, p)


def _char2_adjacent(r, s, p):
    decomposition = decompose_rr1_char2(min(r, s))
    return decomposition if r < s else decomposition.swapped()


PRODUCERS = (
    Producer('renaud', lambda r, s, p: True, decompose_renaud),
    Producer('iima', lambda r, s, p: True, decompose_iima),
    Producer('iima-recurrence', lambda r, s, p: True, _iima_recurrence),
    Producer('largep', large_p_applies, decompose_large_p, closed_form=True),
    Producer(
        'char2-square',
        lambda r, s, p: p == 2 and r == s,
        lambda r, s, p: decompose_rr_char2(r),
        closed_form=True,
    ),
    Producer(
        'char2-adjacent',
        lambda r, s, p: p == 2 and abs(r - s) == 1,
        _char2_adjacent,
        closed_form=True,
    ),
)

REGISTRY = {producer.name: producer for producer in PRODUCERS}

ORACLE = 'oracle'


def applicable_algorithms(r, s, p, oracle_cap=0):
    """
    Names of the producers that apply to (r, s, p), in registry order; the oracle last when r*s <= oracle_cap.
    """
    names = [producer.name for producer in PRODUCERS if producer.applies(r, s, p)]
    if oracle_cap and r * s <= oracle_cap:
        names.append(ORACLE)
    return names


def closed_form_for(r, s, p):
    for producer in PRODUCERS:
        if producer.closed_form and producer.applies(r, s, p):
            return producer
    return None


def decompose(r, s, p, algorithm='auto', oracle_cap=None):
    """
    lambda(r, s, p) by the named algorithm.

    `auto` takes a closed form when one applies, else iima; `closedform` insists on one.
    """
    if r < 1 or s < 1:
        raise InvalidArgument(f'dimensions must be positive, got ({r}, {s})')

    if algorithm == ORACLE:
        return decompose_oracle(r, s, p, cap=oracle_cap)
    if algorithm in ('auto', 'closedform'):
        producer = closed_form_for(r, s, p)
        if producer is None:
            if algorithm == 'closedform':
                raise InvalidArgument(f'no closed form applies to ({r}, {s}, {p})')
            producer = REGISTRY['iima']
        return producer.compute(r, s, p)
    if algorithm not in REGISTRY:
        raise InvalidArgument(f'unknown algorithm {algorithm!r}')
    producer = REGISTRY[algorithm]
    if not producer.applies(r, s, p):
        raise InvalidArgument(f'{algorithm} does not apply to ({r}, {s}, {p})')
    return producer.compute(r, s, p)
