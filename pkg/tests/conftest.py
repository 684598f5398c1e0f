"""
Hopf YD Verifier - Fixtures partagées
Algèbres du corpus et chemins des fichiers de data/fixtures
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.field import Field  # noqa: E402
from src.hopf.automorphisms import HopfAutomorphism, antipode_power  # noqa: E402
from src.hopf.builtins import build_builtin, corpus_algebra  # noqa: E402

FIXTURES_DIR = Path(__file__).parent.parent / 'data' / 'fixtures'


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def rationals():
    return Field.rationals()


@pytest.fixture(scope="session")
def sweedler(rationals):
    """H4 sur ℚ"""
    return build_builtin({"builtin": "sweedler4"}, rationals)


@pytest.fixture(scope="session")
def kc2(rationals):
    return corpus_algebra("cyclic2", rationals)


@pytest.fixture(scope="session")
def kc3(rationals):
    return corpus_algebra("cyclic3", rationals)


@pytest.fixture(scope="session")
def identity_aut(sweedler):
    return HopfAutomorphism.identity(sweedler)


@pytest.fixture(scope="session")
def s2(sweedler):
    """S² sur H4 : diag(1, 1, -1, -1)"""
    return antipode_power(sweedler, 2)
