import time
from pathlib import Path

import pytest

from arrcomp import braid_arrangement, fiber_type, intersection_poset, parse_arrangement

CORPUS_DIR = Path(__file__).parent / "corpus"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def corpus_texts():
    """name -> raw file text for every corpus arrangement."""
    texts = {path.stem: path.read_text() for path in sorted(CORPUS_DIR.glob("*.arr"))}
    assert len(texts) >= 10
    return texts


@pytest.fixture(scope="session")
def corpus_arrangements(corpus_texts):
    return {name: parse_arrangement(text) for name, text in corpus_texts.items()}


@pytest.fixture(scope="session")
def corpus_posets(corpus_arrangements):
    return {
        name: intersection_poset(a) for name, a in corpus_arrangements.items()
    }


@pytest.fixture(scope="session")
def braid_data():
    """n -> (arrangement, poset, tower, poset-and-tower build seconds)."""
    data = {}
    for n in range(1, 6):
        arrangement = braid_arrangement(n)
        start = time.monotonic()
        poset = intersection_poset(arrangement)
        tower = fiber_type(arrangement, poset)
        data[n] = (arrangement, poset, tower, time.monotonic() - start)
    return data
