"""
Hopf YD Verifier - Cache Manager
Cache mémoire thread-safe pour les constructions coûteuses (composantes, doubles, itérés de Δ)
"""
import hashlib
import logging
import threading
from datetime import datetime
from functools import wraps
from typing import Any, Callable, Dict, Hashable, Optional

logger = logging.getLogger(__name__)

_MISSING = object()


class CacheManager:
    """Gestionnaire de cache mémoire avec éviction de l'entrée la plus ancienne"""

    def __init__(self, max_size: int = 1000):
        self.local_cache: Dict[str, Dict[str, Any]] = {}
        self.cache_stats = {
            'hits': 0,
            'misses': 0,
            'evictions': 0
        }
        self.max_local_cache_size = max_size
        self._lock = threading.Lock()

    @staticmethod
    def generate_key(namespace: str, parts: Hashable) -> str:
        """Clé stable dérivée de parties exactes (chaînes de scalaires, noms)"""
        digest = hashlib.md5(repr(parts).encode()).hexdigest()
        return f"{namespace}:{digest}"

    def get(self, key: str, default: Any = None) -> Any:
        with self._lock:
            entry = self.local_cache.get(key)
            if entry is None:
                self.cache_stats['misses'] += 1
                return default
            self.cache_stats['hits'] += 1
        logger.debug(f"Cache hit: {key}")
        return entry['value']

    def set(self, key: str, value: Any) -> None:
        with self._lock:
            if key not in self.local_cache and len(self.local_cache) >= self.max_local_cache_size:
                self._evict_oldest_local()
            self.local_cache[key] = {'value': value, 'created_at': datetime.now()}

    def get_or_compute(self, key: str, factory: Callable[[], Any]) -> Any:
        """
        Valeur en cache ou calculée par factory.

        Le calcul se fait hors verrou ; si deux threads calculent la même clé,
        la première valeur stockée est gardée et renvoyée aux deux.
        """
        value = self.get(key, _MISSING)
        if value is not _MISSING:
            return value
        computed = factory()
        with self._lock:
            entry = self.local_cache.get(key)
            if entry is not None:
                return entry['value']
            if len(self.local_cache) >= self.max_local_cache_size:
                self._evict_oldest_local()
            self.local_cache[key] = {'value': computed, 'created_at': datetime.now()}
        return computed

    def _evict_oldest_local(self) -> None:
        """Évince l'entrée la plus ancienne (appelé sous verrou)"""
        if not self.local_cache:
            return
        oldest_key = min(self.local_cache.keys(),
                         key=lambda k: self.local_cache[k]['created_at'])
        del self.local_cache[oldest_key]
        self.cache_stats['evictions'] += 1

    def get_stats(self) -> Dict[str, Any]:
        """Retourne les statistiques du cache"""
        with self._lock:
            total_requests = self.cache_stats['hits'] + self.cache_stats['misses']
            hit_rate = (self.cache_stats['hits'] / total_requests * 100) if total_requests > 0 else 0
            return {
                'hits': self.cache_stats['hits'],
                'misses': self.cache_stats['misses'],
                'evictions': self.cache_stats['evictions'],
                'hit_rate': hit_rate,
                'local_cache_size': len(self.local_cache),
            }


_default_manager: Optional[CacheManager] = None
_default_lock = threading.Lock()


def get_cache_manager() -> CacheManager:
    """Instance partagée, créée à la première demande"""
    global _default_manager
    with _default_lock:
        if _default_manager is None:
            from config.settings import PERFORMANCE_CONFIG
            _default_manager = CacheManager(PERFORMANCE_CONFIG['cache_max_entries'])
        return _default_manager


def cached_function(key_fn: Callable[..., Hashable], key_prefix: str = ""):
    """Décorateur de mémoïsation ; key_fn transforme les arguments en clé exacte"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            cache_manager = get_cache_manager()
            cache_key = CacheManager.generate_key(f"{key_prefix}{func.__name__}", key_fn(*args, **kwargs))
            return cache_manager.get_or_compute(cache_key, lambda: func(*args, **kwargs))
        return wrapper
    return decorator
