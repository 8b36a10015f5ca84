"""Process-wide memo for ideal powers and symbolic powers."""

import logging
import threading
from collections import OrderedDict
from typing import Hashable, Optional, Tuple

from srreg.config import POWER_CACHE_SIZE

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, Hashable, int]


class PowerCache:
    """Stores computed powers keyed by (kind, ideal key, exponent).

    This class provides a singleton instance so that every ``power`` and
    ``symbolic_power`` call in a process shares one memo. Stored values are
    immutable ideals, so a concurrent fill of the same key can only ever
    store an identical value; the lock keeps the dictionary itself consistent.
    Once ``max_entries`` is reached the least recently used entry is evicted.
    """

    _instance = None

    def __new__(cls):
        """Create a singleton instance."""
        if cls._instance is None:
            cls._instance = super(PowerCache, cls).__new__(cls)
            cls._instance._entries = OrderedDict()
            cls._instance._lock = threading.Lock()
            cls._instance.max_entries = POWER_CACHE_SIZE
        return cls._instance

    def store(self, kind: str, ideal_key: Hashable, s: int, value) -> None:
        """Store a computed power.

        Args:
            kind: ``"power"`` or ``"symbolic"``.
            ideal_key: Hashable identity of the base ideal.
            s: The exponent.
            value: The resulting ideal.
        """
        key = (kind, ideal_key, s)
        with self._lock:
            self._entries.setdefault(key, value)
            self._entries.move_to_end(key)
            evicted = 0
            while len(self._entries) > self.max_entries:
                self._entries.popitem(last=False)
                evicted += 1
        logger.debug(f"Stored {kind} power s={s}" + (f", evicted {evicted}" if evicted else ""))

    def get(self, kind: str, ideal_key: Hashable, s: int) -> Optional[object]:
        """Return the cached power, or None if not computed yet."""
        key = (kind, ideal_key, s)
        with self._lock:
            value = self._entries.get(key)
            if value is not None:
                self._entries.move_to_end(key)
            return value

    def highest(self, kind: str, ideal_key: Hashable, s: int) -> Tuple[int, Optional[object]]:
        """Return the largest cached exponent t <= s and its value (0, None if absent)."""
        with self._lock:
            for t in range(s, 0, -1):
                value = self._entries.get((kind, ideal_key, t))
                if value is not None:
                    return t, value
        return 0, None

    def resize(self, max_entries: int) -> None:
        """Change the capacity, evicting the oldest entries if needed."""
        if max_entries < 1:
            raise ValueError(f"cache capacity must be positive, got {max_entries}")
        with self._lock:
            self.max_entries = max_entries
            while len(self._entries) > max_entries:
                self._entries.popitem(last=False)

    def size(self) -> int:
        with self._lock:
            return len(self._entries)

    def clear(self) -> None:
        """Clear all stored powers."""
        with self._lock:
            self._entries.clear()
        logger.debug("Cleared power cache")


# Create a singleton instance
power_cache = PowerCache()
