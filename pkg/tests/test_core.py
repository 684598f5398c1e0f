"""
Hopf YD Verifier - Core Services Tests
Algèbre linéaire exacte, cache mémoire, suivi des performances
"""

import sys
import threading
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core import linalg
from src.core.cache_manager import CacheManager, cached_function
from src.core.exceptions import SingularMatrixError
from src.core.field import Field
from src.core.performance_monitor import PerformanceMonitor
from src.core.report import get_sampling, use_sampling


class TestExactLinearAlgebra:
    """Tests du pivot de Gauss exact"""

    def test_rational_inverse(self, rationals):
        m = rationals.array([[2, 1], [1, 1]])
        inv = linalg.inverse(rationals, m)
        assert inv.tolist() == [[1, -1], [-1, 2]]

    def test_inverse_with_fractions(self, rationals):
        inv = linalg.inverse(rationals, rationals.array([[2, 0], [0, 3]]))
        assert inv[0, 0] == Fraction(1, 2)
        assert inv[1, 1] == Fraction(1, 3)

    def test_prime_field_inverse(self):
        f5 = Field.prime(5)
        m = f5.array([[2, 0], [0, 3]])
        inv = linalg.inverse(f5, m)
        assert inv.tolist() == [[3, 0], [0, 2]]

    def test_singular(self, rationals):
        m = rationals.array([[1, 2], [2, 4]])
        assert linalg.rank(rationals, m) == 1
        assert not linalg.is_invertible(rationals, m)
        with pytest.raises(SingularMatrixError):
            linalg.inverse(rationals, m)

    def test_singular_mod_p(self):
        f3 = Field.prime(3)
        m = f3.array([[1, 2], [2, 1]])
        # det = -3
        assert linalg.rank(Field.rationals(), m) == 2
        assert linalg.rank(f3, m) == 1

    def test_solve(self, rationals):
        a = rationals.array([[1, 1], [1, -1]])
        x = linalg.solve(rationals, a, rationals.array([3, 1]))
        assert x.tolist() == [2, 1]

    def test_solve_free_variables_are_zero(self, rationals):
        a = rationals.array([[1, 1, 0]])
        x = linalg.solve(rationals, a, rationals.array([5]))
        assert x.tolist() == [5, 0, 0]

    def test_inconsistent_system(self, rationals):
        a = rationals.array([[1, 1], [2, 2]])
        with pytest.raises(SingularMatrixError):
            linalg.solve(rationals, a, rationals.array([1, 3]))

    def test_matrix_power(self, rationals):
        m = rationals.array([[1, 1], [0, 1]])
        assert linalg.matrix_power(rationals, m, 3).tolist() == [[1, 3], [0, 1]]
        assert linalg.matrix_power(rationals, m, -2).tolist() == [[1, -2], [0, 1]]
        assert linalg.matrix_power(rationals, m, 0).tolist() == [[1, 0], [0, 1]]

    def test_first_nonzero(self):
        arr = np.zeros((2, 3), dtype=object)
        assert linalg.first_nonzero(arr) is None
        arr[1, 2] = Fraction(1, 2)
        assert linalg.first_nonzero(arr) == (1, 2)


class TestCacheManager:
    """Tests du cache des constructions coûteuses"""

    def test_hit_and_miss_statistics(self):
        cache = CacheManager(max_size=4)
        calls = []
        for _ in range(3):
            cache.get_or_compute("k", lambda: calls.append(1) or "value")
        assert calls == [1]
        stats = cache.get_stats()
        assert stats['hits'] == 2
        assert stats['misses'] == 1
        assert stats['local_cache_size'] == 1

    def test_eviction_of_oldest(self):
        cache = CacheManager(max_size=2)
        for key in ("a", "b", "c"):
            cache.set(key, key.upper())
        assert cache.get("a") is None
        assert cache.get("c") == "C"
        assert cache.get_stats()['evictions'] == 1

    def test_generated_keys_depend_on_parts(self):
        assert CacheManager.generate_key("ns", ("x", 1)) == CacheManager.generate_key("ns", ("x", 1))
        assert CacheManager.generate_key("ns", ("x", 1)) != CacheManager.generate_key("ns", ("x", 2))
        assert CacheManager.generate_key("ns", 1).startswith("ns:")

    def test_concurrent_compute_keeps_first_value(self):
        cache = CacheManager()
        results = []

        def worker(i):
            results.append(cache.get_or_compute("shared", lambda: [i]))

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r is results[0] for r in results)

    def test_cached_function(self):
        cache = CacheManager()
        calls = []

        @cached_function(lambda n: n, key_prefix="test.")
        def square(n):
            calls.append(n)
            return n * n

        with patch('src.core.cache_manager.get_cache_manager', return_value=cache):
            assert square(3) == 9
            assert square(3) == 9
            assert square(4) == 16
        assert calls == [3, 4]
        assert square.__name__ == "square"


class TestPerformanceMonitor:
    """Tests du chronométrage des étapes"""

    def test_stages_are_recorded(self):
        monitor = PerformanceMonitor()
        with monitor.stage("hopf:kC2"):
            pass
        with monitor.stage("yd:kC2"):
            pass
        summary = monitor.get_summary()
        assert [s['stage'] for s in summary['stages']] == ["hopf:kC2", "yd:kC2"]
        assert summary['total_seconds'] == pytest.approx(monitor.total_seconds())
        assert summary['peak_rss_mb'] > 0

    def test_stage_recorded_on_error(self):
        monitor = PerformanceMonitor()
        with pytest.raises(RuntimeError):
            with monitor.stage("broken"):
                raise RuntimeError("boom")
        assert monitor.get_summary()['stages'][0]['stage'] == "broken"


class TestSampling:
    """Tests du mode échantillonné"""

    def test_use_sampling_restores_previous_state(self):
        assert get_sampling() is None
        with use_sampling(5, seed=7):
            assert get_sampling() == (5, 7)
            with use_sampling(None):
                assert get_sampling() is None
            assert get_sampling() == (5, 7)
        assert get_sampling() is None
