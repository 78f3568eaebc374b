from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from tagnav.engine import build_state

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES = REPO_ROOT / "fixtures"

# filled by tests/test_acceptance.py; echoed after the run so the per-criterion
# verdicts are visible even when pytest captures stdout
ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, summary in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {summary}")

MINI_ARTICLES = FIXTURES / "mini.jsonl"
MINI_TAGS = FIXTURES / "mini-tags.jsonl"
MINI_RELATIONS = FIXTURES / "mini-relations.txt"

# the CLI default threshold of 10 is scaled down for the desk-size fixture
MINI_MIN_USERS = 2


@pytest.fixture(scope="session")
def mini_state():
    """The mini corpus run through the full default pipeline."""
    return build_state(
        MINI_ARTICLES,
        MINI_TAGS,
        MINI_RELATIONS,
        min_users=MINI_MIN_USERS,
    )


@pytest.fixture()
def mini_copy(tmp_path):
    """Writable copies of the fixture files, for tests that mutate them."""
    paths = {}
    for name, src in [
        ("articles", MINI_ARTICLES),
        ("tags", MINI_TAGS),
        ("relations", MINI_RELATIONS),
    ]:
        dst = tmp_path / src.name
        shutil.copy(src, dst)
        paths[name] = dst
    return paths
