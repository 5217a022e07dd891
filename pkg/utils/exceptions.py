class JordanPartsError(Exception):
    """
    Base class for every error raised by the jordanparts apps.
    """


class InvalidArgument(JordanPartsError, ValueError):
    """
    An operation was called outside its precondition (non-prime p, k out of range, ...).
    """


class IntegrityFailure(JordanPartsError):
    """
    A computed value broke an invariant that the mathematics guarantees.

    Seeing one of these means an implementation bug, never bad user input.
    """


class CancellationFailure(IntegrityFailure):
    """
    A virtual sum still had a negative multiplicity after merging equal dimensions.
    """


class ResourceLimit(JordanPartsError):
    """
    The requested computation exceeds a configured size cap.
    """
