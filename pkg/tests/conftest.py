import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vfassign.corpus import corpus_expressions, run_corpus
from vfassign.expressions import parse_construction


@pytest.fixture(scope="session")
def corpus_specs():
    return tuple(parse_construction(e) for e in corpus_expressions())


@pytest.fixture(scope="session")
def corpus_report():
    return run_corpus()
