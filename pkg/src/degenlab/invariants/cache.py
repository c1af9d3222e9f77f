"""
Invariant Cache Module for degenlab

Derivation dimensions, power profiles and Burde values are pure functions of
the structure constants, and the reproduction pipeline asks for the same
ones many times (certificates, graph ranks, property checks). This module
keeps them in a bounded, least-recently-used module-level cache keyed by
the algebra's structural fingerprint.

The cache structure:
{
    ("derivation_dimension", fingerprint): 4,
    ("power_profile", fingerprint, 4): PowerProfile(...),
    ("burde", fingerprint, 1, 2): BurdeResult(...),
    ...
}
"""

import logging
import threading
from collections import OrderedDict
from typing import Any, Callable, Dict, Hashable, Tuple

from degenlab.algebra.superalgebra import SuperAlgebra

logger = logging.getLogger(__name__)

# Least recently used entries are dropped past this size
MAX_ENTRIES = 4096

# Module-level cache with thread safety
_invariant_cache: "OrderedDict[Tuple, Any]" = OrderedDict()
_cache_lock = threading.Lock()
_stats = {"hits": 0, "misses": 0, "evictions": 0}
_max_entries = MAX_ENTRIES


def get_cache_key(kind: str, algebra: SuperAlgebra, *args: Hashable) -> Tuple:
    """Generate a unique cache key for an invariant of an algebra."""
    return (kind, algebra.fingerprint) + tuple(args)


def cached(kind: str, algebra: SuperAlgebra, compute: Callable[[], Any], *args: Hashable) -> Any:
    """
    Return the cached value for (kind, algebra, args), computing it on a miss.

    The computation runs outside the lock; two threads racing on the same
    key compute the same value and the second store is a no-op.
    """
    key = get_cache_key(kind, algebra, *args)
    with _cache_lock:
        if key in _invariant_cache:
            _stats["hits"] += 1
            _invariant_cache.move_to_end(key)
            return _invariant_cache[key]
        _stats["misses"] += 1
    value = compute()
    with _cache_lock:
        _invariant_cache.setdefault(key, value)
        while len(_invariant_cache) > _max_entries:
            _invariant_cache.popitem(last=False)
            _stats["evictions"] += 1
    logger.debug(f"Cached {kind}{args or ''} for {algebra.name or 'unnamed algebra'}")
    return value


def set_cache_size(max_entries: int = MAX_ENTRIES) -> None:
    """Change the entry bound, evicting the oldest entries if needed."""
    global _max_entries
    if max_entries < 1:
        raise ValueError(f"Cache size must be positive, got {max_entries}")
    with _cache_lock:
        _max_entries = max_entries
        while len(_invariant_cache) > _max_entries:
            _invariant_cache.popitem(last=False)
            _stats["evictions"] += 1


def invalidate_cache() -> None:
    """Drop every cached invariant."""
    with _cache_lock:
        _invariant_cache.clear()
        for name in _stats:
            _stats[name] = 0
    logger.info("Invalidated invariant cache")


def get_cache_stats() -> Dict[str, int]:
    """
    Get statistics about the invariant cache.

    Returns:
        Dictionary with entry count, bound, hits, misses and evictions
    """
    with _cache_lock:
        return {
            "entries": len(_invariant_cache),
            "max_entries": _max_entries,
            "hits": _stats["hits"],
            "misses": _stats["misses"],
            "evictions": _stats["evictions"],
        }
