from __future__ import annotations

import time
from pathlib import Path

import pytest

from markovpass.codec import Model, build_model
from markovpass.corpus import Corpus, load_corpus

REPO_ROOT = Path(__file__).resolve().parents[1]
TALE_PATH = REPO_ROOT / "data" / "tale-of-two-cities.txt"


@pytest.fixture(scope="session")
def tale_corpus() -> Corpus:
    if not TALE_PATH.exists():
        pytest.fail(f"bundled corpus missing: {TALE_PATH}")
    return load_corpus(TALE_PATH)


class NovelModelCache:
    """Builds one novel model per order on demand, remembering build times.

    The acceptance suite charges build time against the criterion that
    triggered the build, so tests that share models stay honest about cost.
    """

    def __init__(self, corpus: Corpus) -> None:
        self._corpus = corpus
        self._models: dict[int, Model] = {}
        self.build_seconds: dict[int, float] = {}

    def get(self, order: int) -> Model:
        if order not in self._models:
            started = time.monotonic()
            self._models[order] = build_model(self._corpus, order)
            self.build_seconds[order] = time.monotonic() - started
        return self._models[order]


@pytest.fixture(scope="session")
def novel_models(tale_corpus: Corpus) -> NovelModelCache:
    return NovelModelCache(tale_corpus)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one line per acceptance criterion at the end of the run."""
    rows = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "ERROR")):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(report, "when", "call") == "call":
                rows.append((nodeid.rsplit("::", 1)[-1], label))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in sorted(rows):
        terminalreporter.write_line(f"{label}  {name}")
