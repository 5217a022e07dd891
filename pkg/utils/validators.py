from django.core.exceptions import ValidationError
from django.core.validators import MinValueValidator

from numtheory.arithmetic import is_prime


# Validator for dimensions r, s (a Jordan block has at least one row)
positive_dimension = MinValueValidator(
    1,
    message="Dimension must be a positive integer."
)


def validate_prime(value):
    """
    Rejects characteristics that are not prime (checked by trial division).
    """
    if not is_prime(value):
        raise ValidationError(
            "%(value)s is not a prime.",
            params={'value': value},
        )


def parse_prime_list(value):
    """
    Parses a comma-separated list such as "2,3,5" into sorted distinct primes.
    """
    try:
        primes = sorted({int(item) for item in str(value).split(',') if item.strip()})
    except ValueError:
        raise ValidationError("Primes must be a comma-separated list of integers.")

    if not primes:
        raise ValidationError("At least one prime is required.")

    for prime in primes:
        validate_prime(prime)
    return primes
