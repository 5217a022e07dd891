"""
Exact integer and p-adic primitives.

Everything here works on Python integers (arbitrary precision); no floating
point is used anywhere, including for logarithms.
"""
from math import comb, isqrt

from utils.exceptions import InvalidArgument


def is_prime(n):
    """
    Trial division; enough for the characteristics used from the command line.
    """
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(p):
    if not is_prime(p):
        raise InvalidArgument(f'p must be prime, got {p!r}')


def p_valuation(n, p):
    """
    Exponent of the largest power of p dividing n (n >= 1).
    """
    if n <= 0:
        raise InvalidArgument(f'p-valuation needs a positive integer, got {n}')
    require_prime(p)
    exponent = 0
    while n % p == 0:
        n //= p
        exponent += 1
    return exponent


def p_part(n, p):
    """
    The p-part n_p: the largest power of p dividing n.
    """
    return p ** p_valuation(n, p)


def binomial(m, n):
    """
    Exact C(m, n), with C(m, n) = 0 whenever n < 0 or n > m.
    """
    if n < 0 or m < 0 or n > m:
        return 0
    return comb(m, n)


def base_p_digits(n, p):
    """
    Base-p digits of n, least significant first; [] for n = 0.
    """
    digits = []
    while n:
        n, digit = divmod(n, p)
        digits.append(digit)
    return digits


def binomial_mod_p(m, n, p):
    """
    C(m, n) mod p digit by digit (Lucas), never forming C(m, n) itself.
    """
    require_prime(p)
    if n < 0 or n > m:
        return 0
    result = 1
    while n:
        m, m_digit = divmod(m, p)
        n, n_digit = divmod(n, p)
        if n_digit > m_digit:
            return 0
        result = result * comb(m_digit, n_digit) % p
    return result % p


def kummer_valuation(m, n, p):
    """
    v_p(C(m, n)) as the number of carries when adding n and m - n in base p.
    """
    if n < 0 or n > m:
        raise InvalidArgument(f'need 0 <= n <= m, got m={m}, n={n}')
    require_prime(p)
    a, b = n, m - n
    carry = carries = 0
    while a or b or carry:
        total = a % p + b % p + carry
        carry = 1 if total >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def factorial_valuation(n, p):
    """
    v_p(n!) = (n - digit sum of n in base p) / (p - 1).
    """
    if n < 0:
        raise InvalidArgument(f'factorial of a negative number: {n}')
    return (n - sum(base_p_digits(n, p))) // (p - 1)


def ceil_log2(n):
    """
    Exact ceiling of log2(n) for n >= 1.
    """
    if n < 1:
        raise InvalidArgument(f'log2 needs n >= 1, got {n}')
    return (n - 1).bit_length()
