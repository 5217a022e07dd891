from dataclasses import dataclass

from utils.exceptions import InvalidArgument, IntegrityFailure
from .arithmetic import ceil_log2


@dataclass(frozen=True)
class ConsOnesExpansion:
    """
    Minimal alternating expansion r = 2^e_1 - 2^e_2 + 2^e_3 - ... of a positive integer.

    partial_sums[j] is the tail r_j = 2^e_{j+1} - 2^e_{j+2} + ..., so partial_sums[0] == r
    and partial_sums[-1] == 0.
    """
    exponents: tuple
    partial_sums: tuple

    def __post_init__(self):
        k = len(self.exponents)
        if k == 0 or len(self.partial_sums) != k + 1:
            raise IntegrityFailure(f'malformed expansion {self!r}')
        if any(a <= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise IntegrityFailure(f'exponents must strictly decrease: {self.exponents}')
        if k > 1 and self.exponents[-2] <= self.exponents[-1] + 1:
            raise IntegrityFailure(f'expansion is not of minimal length: {self.exponents}')
        if self.partial_sums[-1] != 0:
            raise IntegrityFailure(f'last partial sum must be 0: {self.partial_sums}')
        for i in range(k):
            bound = 2 ** self.exponents[i]
            if self.partial_sums[i] != bound - self.partial_sums[i + 1]:
                raise IntegrityFailure(f'partial sums do not telescope at {i}: {self.partial_sums}')
            if not 1 <= self.partial_sums[i] <= bound:
                raise IntegrityFailure(f'partial sum r_{i} out of range: {self.partial_sums}')

    @property
    def length(self):
        return len(self.exponents)

    @property
    def value(self):
        return self.partial_sums[0]

    def evaluate(self):
        """
        Recomputes the alternating sum from the exponents alone.
        """
        return sum((-1) ** i * 2 ** e for i, e in enumerate(self.exponents))


def cons_ones_expansion(r):
    """
    Greedy construction: e = ceil(log2(r)), then continue with 2^e - r until it reaches 0.
    """
    if not isinstance(r, int) or r <= 0:
        raise InvalidArgument(f'consecutive-ones expansion needs r >= 1, got {r!r}')

    exponents, partial_sums = [], [r]
    remainder = r
    while remainder:
        exponent = ceil_log2(remainder)
        exponents.append(exponent)
        remainder = 2 ** exponent - remainder
        partial_sums.append(remainder)

    return ConsOnesExpansion(tuple(exponents), tuple(partial_sums))
