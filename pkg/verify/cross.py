from dataclasses import dataclass, field

from closedform.formulas import alternating_rr1_form, smallest_part_bits_hold
from greenring.decompositions import VirtualSum
from utils.exceptions import JordanPartsError
from .algorithms import applicable_algorithms, decompose
from .checks import (
    check_char2_parity, check_duality, check_largest_part, check_mults_parts_roundtrip,
    check_pparts_lcm_gcd, check_reflection, check_repeated_parts_divisible,
    check_smallest_part, check_top_part_residue,
)

import logging

logger = logging.getLogger(__name__)

REFERENCE = 'renaud'


@dataclass(frozen=True)
class CrossCheckReport:
    """
    Outcome of running every applicable producer and checker on one (r, s, p) cell.

    `checks` holds the checker results and one `renaud=<name>` entry per
    comparison with the reference algorithm. `errors` maps a producer or checker
    to the exception it raised. `notes` never affect `ok`.
    """
    r: int
    s: int
    p: int
    algorithms: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def ok(self):
        return not self.errors and all(self.checks.values())

    @property
    def value(self):
        return self.algorithms.get(REFERENCE)

    def diagnostics(self):
        lines = []
        reference = self.value
        for name, passed in self.checks.items():
            if passed:
                continue
            if name.startswith(f'{REFERENCE}='):
                other = name.split('=', 1)[1]
                lines.append(
                    f'({self.r}, {self.s}, {self.p}): {other} gives {self.algorithms[other]}'
                    f' but {REFERENCE} gives {reference}'
                )
            else:
                lines.append(f'({self.r}, {self.s}, {self.p}): {name} failed on {reference}')
        for name, message in self.errors.items():
            lines.append(f'({self.r}, {self.s}, {self.p}): {name} raised {message}')
        return lines


def _level_at_least(m, p):
    """
    Smallest n >= 1 with p^n >= m.
    """
    n = 1
    while p ** n < m:
        n += 1
    return n


def _guarded(errors, name, check, *args):
    try:
        return check(*args)
    except JordanPartsError as exc:
        errors[name] = f'{type(exc).__name__}: {exc}'
        return False


def _alternating_form_note(r, value):
    displayed = alternating_rr1_form(r)
    computed = VirtualSum.from_decomposition(value)
    if displayed == computed:
        return None
    return f'alternating closed form for lambda({r}, {r + 1}, 2) gives {displayed}, computed {computed}'


def cross_check(r, s, p, oracle_cap=0):
    """
    Runs every applicable algorithm on (r, s, p) and every checker on the reference result.
    """
    algorithms, checks, errors, notes = {}, {}, {}, []

    for name in applicable_algorithms(r, s, p, oracle_cap):
        try:
            algorithms[name] = decompose(r, s, p, name, oracle_cap=oracle_cap)
        except JordanPartsError as exc:
            errors[name] = f'{type(exc).__name__}: {exc}'

    reference = algorithms.get(REFERENCE)
    if reference is not None:
        for name, other in algorithms.items():
            if name != REFERENCE:
                checks[f'{REFERENCE}={name}'] = other == reference

        checks['pparts-lcm-gcd'] = check_pparts_lcm_gcd(reference)
        checks['repeated-parts-divisible'] = check_repeated_parts_divisible(reference)
        checks['mults-parts-roundtrip'] = check_mults_parts_roundtrip(reference)
        checks['top-part-residue'] = check_top_part_residue(reference)

        n = _level_at_least(max(r, s), p)
        checks['duality'] = _guarded(errors, 'duality', check_duality, r, s, p, n)
        checks['reflection'] = _guarded(errors, 'reflection', check_reflection, r, s, p, n)
        if r + s > p ** n:
            checks['largest-part'] = _guarded(errors, 'largest-part', check_largest_part, r, s, p, n)
        if r == s:
            checks['smallest-part'] = check_smallest_part(reference)
            checks['smallest-part-bits'] = smallest_part_bits_hold(r, p)
        if p == 2 and abs(r - s) <= 1:
            checks['char2-parity'] = check_char2_parity(reference)
        if p == 2 and abs(r - s) == 1:
            note = _alternating_form_note(min(r, s), reference)
            if note:
                notes.append(note)

    report = CrossCheckReport(r, s, p, algorithms, checks, errors, tuple(notes))
    for line in report.diagnostics():
        logger.warning(line)
    for note in report.notes:
        logger.warning(note)
    return report
