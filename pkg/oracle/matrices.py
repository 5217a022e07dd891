"""
Dense matrices over the prime field F_p, stored as numpy arrays.
"""
from dataclasses import dataclass

import numpy as np

from numtheory.arithmetic import require_prime
from utils.exceptions import InvalidArgument

_INT64_LIMIT = 2 ** 62
_FLOAT_EXACT_LIMIT = 2 ** 53


def _dtype_for(p, n):
    """
    int64 while a length-n dot product of residues cannot overflow, else Python ints.
    """
    return np.int64 if (p - 1) ** 2 * max(n, 1) < _INT64_LIMIT else object


@dataclass(frozen=True, eq=False)
class MatrixModP:
    entries: np.ndarray
    p: int

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise InvalidArgument(f'expected a 2-d array, got shape {self.entries.shape}')

    @classmethod
    def from_rows(cls, rows, p):
        require_prime(p)
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else 0
        entries = np.array(rows, dtype=_dtype_for(p, width)).reshape(len(rows), width) % p
        return cls(entries, p)

    @property
    def shape(self):
        return self.entries.shape

    def is_zero(self):
        return not np.any(self.entries)

    def tolist(self):
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, MatrixModP):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self.entries, other.entries)


def identity(n, p):
    require_prime(p)
    return MatrixModP(np.eye(n, dtype=_dtype_for(p, n)), p)


def jordan_block(r, p):
    """
    J_r(1): ones on the diagonal and the superdiagonal.
    """
    require_prime(p)
    if r < 1:
        raise InvalidArgument(f'Jordan block size must be positive, got {r}')
    dtype = _dtype_for(p, r)
    entries = (np.eye(r, dtype=dtype) + np.eye(r, k=1, dtype=dtype)) % p
    return MatrixModP(entries, p)


def _same_field(a, b):
    if a.p != b.p:
        raise InvalidArgument(f'matrices live over different fields: F_{a.p} and F_{b.p}')


def kron(a, b):
    _same_field(a, b)
    rows = a.shape[0] * b.shape[0]
    entries = np.kron(a.entries, b.entries).astype(_dtype_for(a.p, rows))
    return MatrixModP(entries % a.p, a.p)


def mat_mul(a, b):
    """
    Product over F_p. Runs through float64 BLAS while every dot product stays below 2^53.
    """
    _same_field(a, b)
    if a.shape[1] != b.shape[0]:
        raise InvalidArgument(f'cannot multiply {a.shape} by {b.shape}')
    exact_in_float = (
        a.entries.dtype != object and b.entries.dtype != object
        and (a.p - 1) ** 2 * max(a.shape[1], 1) < _FLOAT_EXACT_LIMIT
    )
    if exact_in_float:
        product = (a.entries.astype(np.float64) @ b.entries.astype(np.float64)).astype(np.int64)
    else:
        product = a.entries @ b.entries
    return MatrixModP(product % a.p, a.p)


def subtract(a, b):
    _same_field(a, b)
    if a.shape != b.shape:
        raise InvalidArgument(f'cannot subtract {b.shape} from {a.shape}')
    return MatrixModP((a.entries - b.entries) % a.p, a.p)


def row_echelon(matrix):
    """
    Row echelon basis of the row space: the nonzero rows left after elimination.

    Each pivot only updates the rows with a nonzero entry in its column, and only
    from that column on.
    """
    p = matrix.p
    work = matrix.entries.copy()
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.nonzero(work[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        below = rank + 1 + np.nonzero(work[rank + 1:, col])[0]
        if below.size:
            inverse = pow(int(work[rank, col]), -1, p)
            factors = (work[below, col] * inverse) % p
            work[below, col:] = (work[below, col:] - np.outer(factors, work[rank, col:])) % p
        rank += 1
    return MatrixModP(work[:rank], p)


def rank_mod_p(matrix):
    return row_echelon(matrix).shape[0]
