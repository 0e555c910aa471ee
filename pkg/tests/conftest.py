import functools

import pytest

from ncgb.corpus import example
from ncgb.engine import EngineConfig, free_gbasis

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def corpus_run(label: str, variant: str = "std"):
    p = example(label)
    return free_gbasis(p.generators, p.spec, EngineConfig(p.bound, variant))


@pytest.fixture(scope="session")
def run_corpus():
    return corpus_run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
