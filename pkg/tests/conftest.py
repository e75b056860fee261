import os
import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = Path(__file__).resolve().parent / "fixtures"
sys.path.insert(0, str(ROOT / "scripts"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from build_corpus import build_corpus  # noqa: E402

ACCEPTANCE: list[tuple[int, str, bool, str]] = []


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    """>= 100 natural colour images; override with SHSM_CORPUS=/path/to/dir."""
    override = os.environ.get("SHSM_CORPUS")
    if override:
        return Path(override)
    out = tmp_path_factory.mktemp("corpus")
    build_corpus(out, count=100, size=256, seed=0)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def criterion():
    """Record one acceptance line and fail the test if the criterion is not met."""

    def record(number: int, name: str, ok: bool, detail: str = ""):
        ACCEPTANCE.append((number, name, bool(ok), detail))
        assert ok, f"criterion {number} ({name}) not met: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")
