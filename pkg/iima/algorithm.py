"""
Decomposition from the delta-sequence, and the conversions between the
multiplicity vector and the part sizes.

The multiplicity-from-parts direction uses the recurrence
m_1 = r + s - mu_1, m_i = mu_{i-1} - mu_i - m_{i-1}. A closed form with the
signs m_i = (-1)^(i-1) [r + s + 2 sum_{j<i} mu_j] - mu_i (no alternation inside
the bracket) does not satisfy it: for lambda(5, 5, 2) = 2V8 + 2V4 + V1 it
gives m_2 = -30 instead of 2. It is not implemented.
"""
from greenring.decompositions import Decomposition, Partition
from utils.exceptions import IntegrityFailure, InvalidArgument
from .determinants import delta_sequence


def decompose_from_delta(sequence):
    """
    Reads m_i = k_i - k_{i-1} copies of V_{r+s-k_i-k_{i-1}} off the support of the bits.
    """
    r, s, ones = sequence.r, sequence.s, sequence.ones
    pairs = tuple(
        (r + s - ones[i] - ones[i - 1], ones[i] - ones[i - 1])
        for i in range(1, len(ones))
    )
    return Decomposition(r, s, sequence.p, pairs)


def decompose_iima(r, s, p):
    """
    lambda(r, s, p) from the delta-sequence of the binomial determinants.
    """
    if r < 1 or s < 1:
        raise InvalidArgument(f'dimensions must be positive, got ({r}, {s})')
    decomposition = decompose_from_delta(delta_sequence(min(r, s), max(r, s), p))
    return decomposition if r <= s else decomposition.swapped()


def parts_recurrence(sequence):
    """
    lambda_k for k = r down to 1: r + s - 2k + l(k) where delta_k = 1, else lambda_{k+1}.

    Kept independent of decompose_from_delta so the two can be cross-checked.
    """
    r, s = sequence.r, sequence.s
    parts = [0] * (r + 2)
    for k in range(r, 0, -1):
        if sequence.bits[k]:
            parts[k] = r + s - 2 * k + sequence.gap(k)
        else:
            parts[k] = parts[k + 1]
    return Partition(tuple(parts[1:r + 1]))


def mults_to_parts(mults, r, s):
    """
    mu_i = r + s - m_i - 2 (m_1 + ... + m_{i-1}).
    """
    mults = tuple(mults)
    if not mults or any(m < 1 for m in mults) or sum(mults) != min(r, s):
        raise InvalidArgument(f'multiplicities {mults} must be positive and sum to min({r}, {s})')

    parts, running = [], 0
    for m in mults:
        parts.append(r + s - m - 2 * running)
        running += m

    if parts[-1] <= 0 or any(a <= b for a, b in zip(parts, parts[1:])):
        raise IntegrityFailure(f'multiplicities {mults} give invalid parts {parts} for ({r}, {s})')
    return tuple(parts)


def parts_to_mults(parts, r, s):
    """
    m_1 = r + s - mu_1, then m_i = mu_{i-1} - mu_i - m_{i-1}.
    """
    parts = tuple(parts)
    if not parts or parts[-1] <= 0 or any(a <= b for a, b in zip(parts, parts[1:])):
        raise InvalidArgument(f'parts {parts} must be positive and strictly decreasing')

    mults = [r + s - parts[0]]
    for i in range(1, len(parts)):
        mults.append(parts[i - 1] - parts[i] - mults[i - 1])

    if any(m <= 0 for m in mults):
        raise IntegrityFailure(f'parts {parts} give non-positive multiplicities {mults} for ({r}, {s})')
    return tuple(mults)
