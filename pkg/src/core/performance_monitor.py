"""
Hopf YD Verifier - Performance Monitor
Durée des étapes de vérification et mémoire résidente (mode --timings)
"""
import logging
import threading
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List

import psutil

logger = logging.getLogger(__name__)


class PerformanceMonitor:
    """Chronométrage par étape, thread-safe"""

    def __init__(self):
        self.stage_history: List[Dict[str, Any]] = []
        self._lock = threading.Lock()
        self._process = psutil.Process()
        self.peak_rss_mb = self._rss_mb()

    def _rss_mb(self) -> float:
        try:
            return self._process.memory_info().rss / (1024 ** 2)
        except psutil.Error as e:
            logger.error(f"Error reading process memory: {e}")
            return 0.0

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        """Mesure la durée d'un bloc et met à jour le pic de mémoire"""
        start_time = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start_time
            rss = self._rss_mb()
            with self._lock:
                self.peak_rss_mb = max(self.peak_rss_mb, rss)
                self.stage_history.append({'stage': name, 'seconds': elapsed, 'rss_mb': rss})
            logger.info(f"Stage '{name}' finished in {elapsed:.3f}s (rss {rss:.1f} MB)")

    def total_seconds(self) -> float:
        with self._lock:
            return sum(s['seconds'] for s in self.stage_history)

    def get_summary(self) -> Dict[str, Any]:
        with self._lock:
            return {
                'stages': [dict(s) for s in self.stage_history],
                'total_seconds': sum(s['seconds'] for s in self.stage_history),
                'peak_rss_mb': self.peak_rss_mb,
            }
