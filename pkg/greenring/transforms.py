"""
Duality and reflection of decompositions with respect to a power p^n.
"""
from utils.exceptions import InvalidArgument
from .decompositions import Decomposition, VirtualSum, normalize, to_partition


def _require_power_of(pn, p):
    if p < 2 or pn < 1:
        raise InvalidArgument(f'{pn} is not a power of {p}')
    value = pn
    while value % p == 0:
        value //= p
    if value != 1:
        raise InvalidArgument(f'{pn} is not a power of {p}')


def dual(decomposition, pn):
    """
    lambda(p^n - r, s, p) from lambda(r, s, p).

    V_{p^n - r} (x) V_s = (s - b) V_{p^n} + V_{p^n - lambda_b} + ... + V_{p^n - lambda_1},
    where b = min(r, s); terms of dimension 0 vanish.
    """
    r, s, p = decomposition.context
    _require_power_of(pn, p)
    largest = decomposition.dims[0] if decomposition.pairs else 0
    if pn < max(r, s, largest):
        raise InvalidArgument(f'p^n = {pn} is smaller than max(r, s, mu_1) for ({r}, {s}, {p})')

    virtual = VirtualSum({pn: s - decomposition.b})
    for part in to_partition(decomposition):
        virtual.add(pn - part)
    return normalize(virtual, pn - r, s, p)


def reflect(decomposition, pn):
    """
    lambda(p^n - r, p^n - s, p) = lambda(r, s, p) + (p^n - r - s) V_{p^n}.

    For r + s <= p^n the coefficient is max(p^n - r - s, 0). Otherwise it is negative and
    removes the r + s - p^n copies of V_{p^n} that lambda(r, s, p) always contains.
    At r = p^n or s = p^n the result is the empty decomposition.
    """
    r, s, p = decomposition.context
    _require_power_of(pn, p)
    if not (1 <= r <= pn and 1 <= s <= pn):
        raise InvalidArgument(f'reflection needs 1 <= r, s <= {pn}, got ({r}, {s})')

    virtual = VirtualSum.from_decomposition(decomposition)
    virtual.add(pn, pn - r - s)
    return normalize(virtual, pn - r, pn - s, p)


def reflect_via_duality(decomposition, pn):
    """
    Reflection as duality in the first factor, then (after swapping) in the second.
    """
    once = dual(decomposition, pn)  # context (p^n - r, s)
    twice = dual(once.swapped(), pn)  # context (p^n - s, p^n - r)
    return twice.swapped()


def empty_decomposition(r, s, p):
    """
    The zero module V_0 (x) V_s or V_r (x) V_0.
    """
    if min(r, s) != 0:
        raise InvalidArgument(f'only a zero-sized factor has an empty decomposition, got ({r}, {s})')
    return Decomposition(r, s, p, ())
