"""
Tests for the bounded computation cache.
"""
import pytest

from utils.cache import ComputationCache


class TestComputationCache:
    """Tests for ComputationCache"""

    def test_put_and_get(self):
        """A stored value comes back and counts as a hit"""
        cache = ComputationCache("test", max_size=4)
        assert cache.put((0, 1), "s0 s1") == "s0 s1"
        assert cache.get((0, 1)) == "s0 s1"
        assert cache.get_stats()["hits"] == 1

    def test_miss_returns_default(self):
        """Missing keys give the default and count as misses"""
        cache = ComputationCache("test", max_size=4)
        assert cache.get("absent") is None
        assert cache.get("absent", 7) == 7
        assert cache.get_stats()["misses"] == 2

    def test_eviction_order(self):
        """The oldest entries go first once max_size is exceeded"""
        cache = ComputationCache("test", max_size=2)
        cache.put("a", 1)
        cache.put("b", 2)
        cache.put("c", 3)
        assert "a" not in cache
        assert "b" in cache and "c" in cache
        assert cache.get_stats()["evictions"] == 1

    def test_clear_cache(self):
        """clear_cache drops every entry"""
        cache = ComputationCache("test", max_size=2)
        cache.put("a", 1)
        cache.clear_cache()
        assert cache.get_stats()["entries"] == 0

    def test_invalid_size(self):
        """max_size must be positive"""
        with pytest.raises(ValueError):
            ComputationCache("test", max_size=0)
