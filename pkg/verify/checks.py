"""
Checkers for the structural laws every lambda(r, s, p) obeys.

Each one takes finished decompositions (or builds them through the registry)
and returns a bool; a False on real output means an implementation bug.
"""
from closedform.formulas import largest_part_overflow, smallest_part
from greenring.transforms import dual, empty_decomposition, reflect, reflect_via_duality
from iima.algorithm import mults_to_parts, parts_to_mults
from numtheory.arithmetic import p_part
from utils.exceptions import IntegrityFailure, InvalidArgument
from .algorithms import decompose

import logging

logger = logging.getLogger(__name__)


def check_pparts_lcm_gcd(d):
    """
    max(r_p, s_p) equals the smallest p-part among the parts.
    """
    r, s, p = d.context
    return max(p_part(r, p), p_part(s, p)) == min(p_part(dim, p) for dim in d.dims)


def check_repeated_parts_divisible(d):
    """
    A part occurring more than once is divisible by p.
    """
    return all(part.dim % d.p == 0 for part in d.pairs if part.mult > 1)


def check_mults_parts_roundtrip(d):
    try:
        return (
            mults_to_parts(d.mults, d.r, d.s) == d.dims
            and parts_to_mults(d.dims, d.r, d.s) == d.mults
        )
    except (IntegrityFailure, InvalidArgument) as exc:
        logger.warning('round trip failed for %s: %s', d.context, exc)
        return False


def check_top_part_residue(d):
    """
    If p does not divide the largest part then r + s is not 1 mod p.
    """
    if d.dims[0] % d.p == 0:
        return True
    return (d.r + d.s) % d.p != 1


def _lambda(r, s, p, algorithm):
    if min(r, s) == 0:
        return empty_decomposition(r, s, p)
    return decompose(r, s, p, algorithm)


def check_duality(r, s, p, n, algorithm='renaud'):
    pn = p ** n
    if not (1 <= r <= pn and 1 <= s <= pn):
        raise InvalidArgument(f'duality needs 1 <= r, s <= {pn}, got ({r}, {s})')
    expected = _lambda(pn - r, s, p, algorithm)
    return dual(decompose(r, s, p, algorithm), pn) == expected


def check_reflection(r, s, p, n, algorithm='renaud'):
    """
    Reflection in p^n agrees with the directly computed value and with two dualities.
    """
    pn = p ** n
    if not (1 <= r <= pn and 1 <= s <= pn):
        raise InvalidArgument(f'reflection needs 1 <= r, s <= {pn}, got ({r}, {s})')
    d = decompose(r, s, p, algorithm)
    reflected = reflect(d, pn)
    return reflected == _lambda(pn - r, pn - s, p, algorithm) == reflect_via_duality(d, pn)


def check_smallest_part(d):
    """
    lambda(r, r, p) ends in r_p copies of V_{r_p}.
    """
    if d.r != d.s:
        raise InvalidArgument(f'smallest part law is for r = s, got {d.context}')
    return d.pairs[-1] == smallest_part(d.r, d.p)


def check_largest_part(r1, s1, p, n, algorithm='renaud'):
    return decompose(r1, s1, p, algorithm).pairs[0] == largest_part_overflow(r1, s1, p, n)


def _is_power_of_two(n):
    return n & (n - 1) == 0


def check_char2_parity(d):
    """
    In characteristic 2 with |r - s| <= 1 every part is a power of 2; for r = s the
    parts other than 1 come in pairs and V_1 occurs at most once, and for
    |r - s| = 1 no part equals 1.
    """
    if d.p != 2 or abs(d.r - d.s) > 1:
        raise InvalidArgument(f'parity laws are for p = 2 and |r - s| <= 1, got {d.context}')
    if not all(_is_power_of_two(dim) for dim in d.dims):
        return False
    if d.r == d.s:
        return all(part.mult % 2 == 0 if part.dim != 1 else part.mult <= 1 for part in d.pairs)
    return all(dim > 1 for dim in d.dims)
