"""
Data model for decompositions of V_r (x) V_s in the Green ring.

A Decomposition is the canonical, validated result: distinct dimensions in
strictly decreasing order with positive multiplicities. A VirtualSum is the
scratch space used while assembling a result; it may hold negative
multiplicities, and only normalize() turns it into a Decomposition.
"""
from dataclasses import dataclass
from typing import NamedTuple

from utils.exceptions import CancellationFailure, IntegrityFailure

import logging

logger = logging.getLogger(__name__)


class Part(NamedTuple):
    dim: int
    mult: int


@dataclass(frozen=True)
class Partition:
    """
    Non-increasing list of positive parts.
    """
    parts: tuple

    def __post_init__(self):
        if any(part <= 0 for part in self.parts):
            raise IntegrityFailure(f'partition parts must be positive: {self.parts}')
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise IntegrityFailure(f'partition parts must be non-increasing: {self.parts}')

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ' '.join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Decomposition:
    """
    V_r (x) V_s = m_1 V_mu_1 + ... + m_t V_mu_t over characteristic p.

    The (r, s, p) context is stored so the dimension count (sum m_i mu_i = r*s)
    and part count (sum m_i = min(r, s)) are checked at construction. r or s may
    be 0, which gives the empty decomposition of the zero module.
    p = 0 stands for characteristic zero.
    """
    r: int
    s: int
    p: int
    pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple(Part(int(dim), int(mult)) for dim, mult in self.pairs)
        object.__setattr__(self, 'pairs', pairs)

        if self.r < 0 or self.s < 0:
            raise IntegrityFailure(f'negative context ({self.r}, {self.s}, {self.p})')
        for part in pairs:
            if part.dim <= 0 or part.mult <= 0:
                raise IntegrityFailure(f'non-positive term {part} in {self.context}')
        if any(a.dim <= b.dim for a, b in zip(pairs, pairs[1:])):
            raise IntegrityFailure(f'dimensions not strictly decreasing in {self.context}: {pairs}')

        dimension = sum(part.dim * part.mult for part in pairs)
        if dimension != self.r * self.s:
            raise IntegrityFailure(
                f'dimension count {dimension} != {self.r}*{self.s} for {self.context}: {self}'
            )
        if self.b != min(self.r, self.s):
            raise IntegrityFailure(
                f'part count {self.b} != min({self.r}, {self.s}) for {self.context}: {self}'
            )

    @property
    def context(self):
        return (self.r, self.s, self.p)

    @property
    def dims(self):
        return tuple(part.dim for part in self.pairs)

    @property
    def mults(self):
        return tuple(part.mult for part in self.pairs)

    @property
    def t(self):
        """Number of distinct parts."""
        return len(self.pairs)

    @property
    def b(self):
        """Total number of parts, counted with multiplicity."""
        return sum(part.mult for part in self.pairs)

    def swapped(self):
        """
        Same parts for the (s, r, p) context (J_r (x) J_s is similar to J_s (x) J_r).
        """
        return Decomposition(self.s, self.r, self.p, self.pairs)

    def same_parts(self, other):
        return self.pairs == other.pairs

    def __str__(self):
        if not self.pairs:
            return '0'
        return ' + '.join(
            f'V{part.dim}' if part.mult == 1 else f'{part.mult}V{part.dim}'
            for part in self.pairs
        )


class VirtualSum:
    """
    Green ring element sum c_d V_d with integer (possibly negative) coefficients.

    V_0 terms and zero coefficients are discarded on insertion ([V_0] = [0V]),
    so `terms` never holds a zero entry.
    """

    def __init__(self, terms=None):
        self._terms = {}
        for dim, mult in dict(terms or {}).items():
            self.add(dim, mult)

    def add(self, dim, mult=1):
        """
        Adds mult copies of V_dim in place and returns self.
        """
        if dim < 0:
            raise IntegrityFailure(f'negative dimension {dim} in a virtual sum')
        if dim == 0 or mult == 0:
            return self
        total = self._terms.get(dim, 0) + mult
        if total:
            self._terms[dim] = total
        else:
            del self._terms[dim]
        return self

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """
        Terms in decreasing dimension order.
        """
        return sorted(self._terms.items(), reverse=True)

    def is_empty(self):
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, VirtualSum):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        return f'VirtualSum({dict(self.items())})'

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(
            f'V{dim}' if mult == 1 else f'{mult}V{dim}'
            for dim, mult in self.items()
        )

    @classmethod
    def from_decomposition(cls, decomposition):
        return cls({part.dim: part.mult for part in decomposition.pairs})


def direct_sum(a, b):
    """
    Pointwise sum of multiplicities.
    """
    result = VirtualSum(a.terms)
    for dim, mult in b.items():
        result.add(dim, mult)
    return result


def scale(c, a):
    """
    Multiplies every multiplicity by the integer c.
    """
    return VirtualSum({dim: c * mult for dim, mult in a.items()})


def normalize(virtual, r, s, p):
    """
    Turns a fully cancelled virtual sum into the Decomposition of V_r (x) V_s.
    """
    negative = [(dim, mult) for dim, mult in virtual.items() if mult < 0]
    if negative:
        logger.error('cancellation failed for (%s, %s, %s): %s', r, s, p, virtual)
        raise CancellationFailure(
            f'negative multiplicities {negative} survive in {virtual} for ({r}, {s}, {p})'
        )
    return Decomposition(r, s, p, tuple(virtual.items()))


def to_partition(decomposition):
    """
    Expands every part by its multiplicity.
    """
    return Partition(tuple(
        part.dim for part in decomposition.pairs for _ in range(part.mult)
    ))


def from_partition(partition, r, s, p):
    """
    Groups equal parts and counts them.
    """
    pairs = []
    for part in Partition(tuple(partition)):
        if pairs and pairs[-1][0] == part:
            pairs[-1][1] += 1
        else:
            pairs.append([part, 1])
    return Decomposition(r, s, p, tuple((dim, mult) for dim, mult in pairs))
