"""
Renaud's recursive decomposition of V_r (x) V_s.

With r <= s and n the smallest integer with s < p^(n+1), write r = r_0 p^n + r_1
and s = s_0 p^n + s_1. The product is assembled from lambda(r_1, s_1, p) by the
reduction formula, whose second line may carry a negative coefficient
p^n - r_1 - s_1. Those terms cancel against the j = 1 summands of the last line
(the sub-result then has largest part p^n with multiplicity r_1 + s_1 - p^n),
so the assembled VirtualSum always normalizes.
"""
from dataclasses import dataclass

from greenring.decompositions import Decomposition, VirtualSum, normalize
from greenring.transforms import empty_decomposition
from numtheory.arithmetic import require_prime
from utils.decomposition_cache import DecompositionCache
from utils.exceptions import InvalidArgument

import logging

logger = logging.getLogger(__name__)

CACHE_NAMESPACE = 'renaud'


@dataclass(frozen=True)
class ReductionParams:
    """
    Constants of one reduction step modulo p^n.
    """
    r: int
    s: int
    p: int
    n: int
    r0: int
    r1: int
    s0: int
    s1: int
    c: int
    d1: int
    d2: int

    @property
    def pn(self):
        return self.p ** self.n


def base_case(r, s, p):
    """
    lambda(r, s, p) for 1 <= r, s <= p, symmetric in r and s.
    """
    require_prime(p)
    if not (1 <= r <= p and 1 <= s <= p):
        raise InvalidArgument(f'base case needs 1 <= r, s <= p = {p}, got ({r}, {s})')

    virtual = VirtualSum()
    if r + s <= p:
        for j in range(1, min(r, s) + 1):
            virtual.add(r + s - 2 * j + 1)
    else:
        virtual.add(p, r + s - p)
        for j in range(1, p - max(r, s) + 1):
            virtual.add(2 * p - r - s - 2 * j + 1)
    return normalize(virtual, r, s, p)


def reduction_params(r, s, p, n):
    """
    Splits r <= s < p^(n+1) at p^n and picks (c, d_1, d_2).
    """
    require_prime(p)
    if n < 1:
        raise InvalidArgument(f'reduction level must be >= 1, got n={n}')
    if not 1 <= r <= s:
        raise InvalidArgument(f'reduction needs 1 <= r <= s, got ({r}, {s}); sort first')
    if s >= p ** (n + 1):
        raise InvalidArgument(f's = {s} is not below p^(n+1) = {p ** (n + 1)}')

    pn = p ** n
    r0, r1 = divmod(r, pn)
    s0, s1 = divmod(s, pn)
    if r0 + s0 < p:
        c, d1, d2 = 0, r0, r0
    else:
        c, d1, d2 = r + s - p ** (n + 1), p - s0 - 1, p - s0

    return ReductionParams(r=r, s=s, p=p, n=n, r0=r0, r1=r1, s0=s0, s1=s1, c=c, d1=d1, d2=d2)


def reduce(params, sub):
    """
    Assembles the four groups of the reduction formula as a VirtualSum.

    `sub` is lambda(r_1, s_1, p); it is empty when r_1 * s_1 = 0.
    """
    pn = params.pn
    base = params.s0 - params.r0
    virtual = VirtualSum()

    # cV_{p^(n+1)}
    virtual.add(pn * params.p, params.c)

    # |r_1 - s_1| V_{(s_0 - r_0 + 2i) p^n} and max(0, r_1 - s_1) V_{(s_0 - r_0) p^n}
    for i in range(1, params.d1 + 1):
        virtual.add((base + 2 * i) * pn, abs(params.r1 - params.s1))
    virtual.add(base * pn, max(0, params.r1 - params.s1))

    # (p^n - r_1 - s_1) V_{(s_0 - r_0 + 2i - 1) p^n}, possibly negative
    for i in range(1, params.d2 + 1):
        virtual.add((base + 2 * i - 1) * pn, pn - params.r1 - params.s1)

    # n_j (V_{(s_0 - r_0 + 2i) p^n + nu_j} + V_{(s_0 - r_0 + 2i) p^n - nu_j})
    for nu, count in sub.pairs:
        for i in range(0, params.d1 + 1):
            virtual.add((base + 2 * i) * pn + nu, count)
        for i in range(1, params.d1 + 1):
            virtual.add((base + 2 * i) * pn - nu, count)

    return virtual


def scale_case(r, s, p, n, sub):
    """
    r = r_0 p^n, s = s_0 p^n: every part nu of lambda(r_0, s_0, p) becomes p^n nu
    with its multiplicity scaled by p^n.
    """
    require_prime(p)
    pn = p ** n
    if r % pn or s % pn:
        raise InvalidArgument(f'({r}, {s}) are not both multiples of {pn}')
    if sub.context[:2] != (r // pn, s // pn):
        raise InvalidArgument(f'sub-decomposition {sub.context} does not match ({r // pn}, {s // pn})')

    return Decomposition(r, s, p, tuple((pn * nu, pn * count) for nu, count in sub.pairs))


def level(s, p):
    """
    Smallest n >= 1 with s < p^(n+1).
    """
    n = 1
    while s >= p ** (n + 1):
        n += 1
    return n


def decompose_renaud(r, s, p):
    """
    lambda(r, s, p) by recursion on the p-adic length of max(r, s), memoized.
    """
    require_prime(p)
    if r < 1 or s < 1:
        raise InvalidArgument(f'dimensions must be positive, got ({r}, {s})')

    return DecompositionCache.get_or_compute(
        CACHE_NAMESPACE, r, s, p,
        lambda: _decompose_sorted(min(r, s), max(r, s), p),
    )


def _decompose_sorted(r, s, p):
    if s <= p:
        return base_case(r, s, p)

    params = reduction_params(r, s, p, level(s, p))
    logger.debug('reducing (%s, %s, %s): %s', r, s, p, params)

    if params.r1 == 0 and params.s1 == 0:
        sub = decompose_renaud(params.r0, params.s0, p)
        return scale_case(r, s, p, params.n, sub)

    if params.r1 == 0 or params.s1 == 0:
        sub = empty_decomposition(params.r1, params.s1, p)
    else:
        sub = decompose_renaud(params.r1, params.s1, p)
    return normalize(reduce(params, sub), r, s, p)
