"""
Closed forms for special families of lambda(r, s, p).

Each formula is both a producer (the CLI's `auto` mode uses it) and a checker
(verify compares it with the general algorithms).
"""
from greenring.decompositions import Decomposition, VirtualSum, normalize
from iima.determinants import delta_sequence, det_Dk
from numtheory.arithmetic import is_prime, p_part, require_prime
from numtheory.expansions import cons_ones_expansion
from utils.exceptions import InvalidArgument

import logging

logger = logging.getLogger(__name__)


def large_p_applies(r, s, p):
    return p == 0 or p >= r + s - 1


def decompose_large_p(r, s, p=0):
    """
    Parts r + s + 1 - 2i, i = 1 .. min(r, s), each once (characteristic 0 or p >= r + s - 1).
    """
    if r < 1 or s < 1:
        raise InvalidArgument(f'dimensions must be positive, got ({r}, {s})')
    if p and not is_prime(p):
        raise InvalidArgument(f'p must be 0 or a prime, got {p}')
    return Decomposition(r, s, p, tuple(
        (r + s + 1 - 2 * i, 1) for i in range(1, min(r, s) + 1)
    ))


def decompose_rr_char2(r):
    """
    lambda(r, r, 2) = sum_i (2^e_i - 2 r_i) V_{2^e_i} over the consecutive-ones expansion.

    Peeling one exponent at a time is the reflection step
    V_r (x) V_r = (2^e_1 - 2 r_1) V_{2^e_1} + V_{r_1} (x) V_{r_1}.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f'r must be a positive integer, got {r!r}')
    expansion = cons_ones_expansion(r)

    virtual = VirtualSum()
    for exponent, tail in zip(expansion.exponents, expansion.partial_sums[1:]):
        virtual.add(2 ** exponent, 2 ** exponent - 2 * tail)
    return normalize(virtual, r, r, 2)


def _rr1_terms(r):
    """
    VirtualSum for lambda(r, r + 1, 2) by two reflection steps per round:

    V_r (x) V_{r+1} = (2^e_1 - 2 r_1 + 1) V_{2^e_1} + (2^e_2 - 2 r_2 - 1) V_{2^e_2} + V_{r_2} (x) V_{r_2 + 1},

    ending at lambda(0, 1, 2) = 0 or at lambda(2^e, 2^e + 1, 2) = V_{2^(e+1)} + (2^e - 1) V_{2^e}.
    """
    virtual = VirtualSum()
    while r:
        expansion = cons_ones_expansion(r)
        e, tails = expansion.exponents, expansion.partial_sums
        if expansion.length == 1:
            virtual.add(2 ** (e[0] + 1), 1)
            virtual.add(2 ** e[0], 2 ** e[0] - 1)
            break
        virtual.add(2 ** e[0], 2 ** e[0] - 2 * tails[1] + 1)
        virtual.add(2 ** e[1], 2 ** e[1] - 2 * tails[2] - 1)
        r = tails[2]
    return virtual


def decompose_rr1_char2(r):
    """
    lambda(r, r + 1, 2); every part is a power of 2 greater than 1.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f'r must be a positive integer, got {r!r}')
    return normalize(_rr1_terms(r), r, r + 1, 2)


def alternating_rr1_form(r):
    """
    The alternating-sign closed form sum_i (2^e_i - 2 r_i + (-1)^(i-1)) V_{2^e_i}.

    It disagrees with lambda(r, r + 1, 2) (r = 1 would give 2V1 instead of V2), so it is
    only used by verify to record the discrepancy; never as a producer.
    """
    expansion = cons_ones_expansion(r)
    virtual = VirtualSum()
    for i, (exponent, tail) in enumerate(zip(expansion.exponents, expansion.partial_sums[1:])):
        virtual.add(2 ** exponent, 2 ** exponent - 2 * tail + (-1) ** i)
    return virtual


def smallest_part(r, p):
    """
    Smallest part of lambda(r, r, p) and its multiplicity: both equal r_p.
    """
    part = p_part(r, p)
    return part, part


def smallest_part_bits_hold(r, p):
    """
    delta_{r-j}(r, r, p) = 0 for 0 < j < r_p, delta_{r-r_p} = 1, and D_{r-r_p}(r, r) = a (mod p)
    where r = a r_p.
    """
    require_prime(p)
    rp = p_part(r, p)
    bits = delta_sequence(r, r, p).bits
    if any(bits[r - j] for j in range(1, rp)) or not bits[r - rp]:
        return False
    return det_Dk(r, r, r - rp) % p == (r // rp) % p


def largest_part_overflow(r1, s1, p, n):
    """
    For r_1, s_1 <= p^n < r_1 + s_1: the largest part is p^n, with multiplicity r_1 + s_1 - p^n.
    """
    require_prime(p)
    pn = p ** n
    if not (1 <= r1 <= pn and 1 <= s1 <= pn and r1 + s1 > pn):
        raise InvalidArgument(f'need r1, s1 <= {pn} < r1 + s1, got ({r1}, {s1})')
    return pn, r1 + s1 - pn
