"""
Bounded memo for expensive group computations (normal forms, element
matrices, inversion sets, projections, enumerated universes).
"""
from collections import OrderedDict
from typing import Any, Dict, Hashable, Optional
import logging

logger = logging.getLogger(__name__)

_MISSING = object()


class ComputationCache:
    def __init__(self, name: str, max_size: int = 50000):
        """
        Initialize the cache.

        Args:
            name (str): Label used in log lines and statistics
            max_size (int): Maximum number of entries to keep in the cache
        """
        if max_size <= 0:
            raise ValueError("max_size must be positive")
        self.name = name
        self.cache: "OrderedDict[Hashable, Any]" = OrderedDict()
        self.max_size = max_size
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    def get(self, key: Hashable, default: Optional[Any] = None) -> Any:
        """
        Get a cached value if available.

        Args:
            key (Hashable): Cache key
            default (Any): Value returned on a miss

        Returns:
            Any: Cached value or default
        """
        value = self.cache.get(key, _MISSING)
        if value is _MISSING:
            self.misses += 1
            return default
        self.hits += 1
        return value

    def __contains__(self, key: Hashable) -> bool:
        return key in self.cache

    def put(self, key: Hashable, value: Any) -> Any:
        """
        Cache a value, evicting the oldest entries beyond max_size.

        Returns:
            Any: the value, so callers can write `return cache.put(k, v)`
        """
        self.cache[key] = value
        while len(self.cache) > self.max_size:
            self.cache.popitem(last=False)
            self.evictions += 1
            if self.evictions % self.max_size == 1:
                logger.info(f"Cache '{self.name}' full, evicting oldest entries")
        return value

    def clear_cache(self) -> None:
        """Clear all entries from the cache."""
        self.cache.clear()
        logger.info(f"Cache '{self.name}' cleared")

    def get_stats(self) -> Dict[str, int]:
        """
        Get cache statistics.

        Returns:
            Dict[str, int]: entries, max_size, hits, misses, evictions
        """
        return {
            "entries": len(self.cache),
            "max_size": self.max_size,
            "hits": self.hits,
            "misses": self.misses,
            "evictions": self.evictions,
        }
