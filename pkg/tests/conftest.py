import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import ACCEPTANCE_LINES, random_corpus, reference_diagrams  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return reference_diagrams() + random_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
