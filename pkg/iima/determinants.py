"""
Binomial determinants D_k(r, s) and their p-divisibility.

D_k(r, s) is the determinant of the k x k matrix with (i, j) entry
C(r+s-2k, s+i-j-k), 0 <= i, j < k, and has the closed form

    D_k(r, s) = prod_{i=0}^{k-1} C(r+s-2k+i, s-k) / C(s-k+i, s-k),

with D_0 = D_r = 1. delta_k records whether p does not divide D_k.
"""
from dataclasses import dataclass
from functools import lru_cache

from numtheory.arithmetic import binomial, factorial_valuation, kummer_valuation, require_prime
from utils.exceptions import IntegrityFailure, InvalidArgument

import logging

logger = logging.getLogger(__name__)


def _check_range(r, s, k):
    if not 1 <= r <= s:
        raise InvalidArgument(f'need 1 <= r <= s, got ({r}, {s})')
    if not 0 <= k <= r:
        raise InvalidArgument(f'need 0 <= k <= r = {r}, got k={k}')


def det_Dk(r, s, k):
    """
    Exact D_k(r, s); the division in the closed form must come out exact.
    """
    _check_range(r, s, k)
    if k in (0, r):
        return 1

    numerator = denominator = 1
    for i in range(k):
        numerator *= binomial(r + s - 2 * k + i, s - k)
        denominator *= binomial(s - k + i, s - k)

    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegrityFailure(f'D_{k}({r}, {s}) is not an integer: {numerator}/{denominator}')
    return value


def valuation_Dk(r, s, k, p):
    """
    v_p(D_k(r, s)) as summed Kummer carry counts of the closed-form factors.
    """
    _check_range(r, s, k)
    require_prime(p)
    if k in (0, r):
        return 0
    return sum(
        kummer_valuation(r + s - 2 * k + i, s - k, p) - kummer_valuation(s - k + i, s - k, p)
        for i in range(k)
    )


def delta(r, s, k, p):
    """
    1 if p does not divide D_k(r, s), else 0.
    """
    return 1 if valuation_Dk(r, s, k, p) == 0 else 0


@lru_cache(maxsize=64)
def _factorial_valuation_prefix(p, size):
    """
    prefix[n] = sum_{j < n} v_p(j!) for 0 <= n <= size.
    """
    prefix = [0] * (size + 1)
    for n in range(size):
        prefix[n + 1] = prefix[n] + factorial_valuation(n, p)
    return tuple(prefix)


def _prefix_for(p, limit):
    size = 64
    while size < limit:
        size *= 2
    return _factorial_valuation_prefix(p, size)


def fast_valuation_Dk(r, s, k, p, prefix=None):
    """
    v_p(D_k(r, s)) in O(1) from prefix sums of v_p(j!).

    Writing every binomial through factorials, the C(s-k)! factors cancel and
    v_p(D_k) = [P(r+s-k) - P(r+s-2k)] - [P(r) - P(r-k)] - [P(s) - P(s-k)] + P(k).
    """
    _check_range(r, s, k)
    if prefix is None:
        require_prime(p)
        prefix = _prefix_for(p, r + s + 1)
    P = prefix
    return (
        (P[r + s - k] - P[r + s - 2 * k])
        - (P[r] - P[r - k])
        - (P[s] - P[s - k])
        + P[k]
    )


@dataclass(frozen=True)
class DeltaSequence:
    """
    Bits delta_0 .. delta_r for (r, s, p) with r <= s; `ones` is their support.
    """
    r: int
    s: int
    p: int
    bits: tuple

    def __post_init__(self):
        if len(self.bits) != self.r + 1:
            raise IntegrityFailure(f'expected {self.r + 1} bits, got {len(self.bits)}')
        if self.bits[0] != 1 or self.bits[-1] != 1:
            raise IntegrityFailure(f'delta_0 and delta_r must be 1: {self.bits}')

    @property
    def ones(self):
        return tuple(k for k, bit in enumerate(self.bits) if bit)

    @property
    def t(self):
        return len(self.ones) - 1

    def gap(self, k):
        """
        l(k): the smallest positive l with delta_{k - l} = 1 (only for delta_k = 1, k >= 1).
        """
        if not 1 <= k <= self.r or not self.bits[k]:
            raise InvalidArgument(f'gap is defined only where delta_k = 1 and k >= 1, got k={k}')
        ell = 1
        while not self.bits[k - ell]:
            ell += 1
        return ell

    def __str__(self):
        return ''.join(str(bit) for bit in self.bits)


def delta_sequence(r, s, p):
    require_prime(p)
    if not 1 <= r <= s:
        raise InvalidArgument(f'delta sequence needs 1 <= r <= s, got ({r}, {s})')

    prefix = _prefix_for(p, r + s + 1)
    bits = tuple(
        1 if k in (0, r) or fast_valuation_Dk(r, s, k, p, prefix) == 0 else 0
        for k in range(r + 1)
    )
    sequence = DeltaSequence(r, s, p, bits)
    logger.debug('delta(%s, %s, %s) = %s', r, s, p, sequence)
    return sequence


IDENTITY_VARIANTS = ('a', 'b', 'c')


def determinant_identity_holds(r, s, k, variant):
    """
    Exact check of the three recurrences linking neighbouring D_k:

    (a) C(s, s-k) D_{k+1}(r+1, s+1) = C(r+s-k, s-k) D_k(r, s),          0 <= k <= r
    (b) C(s, s-k) D_{k+1}(r, s+1)   = C(r+s-2k-1, s-k) D_k(r, s),       0 <= k <= r-1
    (c) C(r+s-k-1, k) D_{k+1}(r, s) = C(r+s-2k-2, s-k-1) D_k(r, s),     0 <= k <= r-1
    """
    if variant not in IDENTITY_VARIANTS:
        raise InvalidArgument(f'unknown identity variant {variant!r}')
    upper = r if variant == 'a' else r - 1
    if not 1 <= r <= s or not 0 <= k <= upper:
        raise InvalidArgument(f'identity ({variant}) needs 1 <= r <= s and 0 <= k <= {upper}, got r={r}, s={s}, k={k}')

    d_k = det_Dk(r, s, k)
    if variant == 'a':
        return binomial(s, s - k) * det_Dk(r + 1, s + 1, k + 1) == binomial(r + s - k, s - k) * d_k
    if variant == 'b':
        return binomial(s, s - k) * det_Dk(r, s + 1, k + 1) == binomial(r + s - 2 * k - 1, s - k) * d_k
    return binomial(r + s - k - 1, k) * det_Dk(r, s, k + 1) == binomial(r + s - 2 * k - 2, s - k - 1) * d_k
