from django.conf import settings
from django.core.cache import caches

import logging

logger = logging.getLogger('jordanparts.cache')


class DecompositionCache:
    """
    Memoizes decompositions using Django's cache system.

    Keys are canonical (r <= s) so that lambda(r, s, p) and lambda(s, r, p) share
    one entry. Stored values are immutable Decomposition objects, so two threads
    computing the same key and both writing it leave the cache in the same state.
    """

    @classmethod
    def _cache(cls):
        return caches[settings.JORDANPARTS_CACHE_ALIAS]

    @staticmethod
    def make_key(algorithm, r, s, p):
        r, s = min(r, s), max(r, s)
        return f'{algorithm}:{p}:{r}:{s}'

    @classmethod
    def get(cls, algorithm, r, s, p):
        """
        Returns the cached decomposition, or None on a miss.
        """
        return cls._cache().get(cls.make_key(algorithm, r, s, p))

    @classmethod
    def store(cls, algorithm, decomposition):
        """
        Stores a decomposition under the key of its own (r, s, p) context.
        """
        key = cls.make_key(algorithm, decomposition.r, decomposition.s, decomposition.p)
        cls._cache().set(key, decomposition, timeout=None)
        logger.debug('cached %s', key)

    @classmethod
    def get_or_compute(cls, algorithm, r, s, p, compute):
        """
        Returns the cached value, computing and storing it on a miss.

        The stored value is re-keyed to the caller's argument order on the way out.
        """
        cached = cls.get(algorithm, r, s, p)
        if cached is None:
            cached = compute()
            cls.store(algorithm, cached)
        if (cached.r, cached.s) != (r, s):
            cached = cached.swapped()
        return cached

    @classmethod
    def clear(cls):
        cls._cache().clear()
