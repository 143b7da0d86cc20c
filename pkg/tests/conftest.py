import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parents[1]
SRC = REPO / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def a6():
    from reslat.fileformat import load_structure

    s, _ = load_structure(FIXTURES / "a6.json")
    return s


@pytest.fixture(scope="session")
def chain2():
    from reslat.fileformat import load_structure

    s, _ = load_structure(FIXTURES / "chain2.json")
    return s


@pytest.fixture(scope="session")
def chain3_godel():
    from reslat.fileformat import load_structure

    s, _ = load_structure(FIXTURES / "chain3-godel.json")
    return s


@pytest.fixture(scope="session")
def chain3_luk():
    from reslat.fileformat import load_structure

    s, _ = load_structure(FIXTURES / "chain3-luk.json")
    return s
