import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import league_fixture  # noqa: E402

from cricsquad import RoleCategory  # noqa: E402

DATA = Path(__file__).parent / "data"


def read_names(name: str) -> list[str]:
    return [line.strip() for line in (DATA / name).read_text().splitlines() if line.strip()]


@pytest.fixture
def league_store():
    return league_fixture.build_store()


@pytest.fixture(scope="session")
def reference_pools():
    doc = json.loads((DATA / "reference_pools.json").read_text())
    pools = {
        RoleCategory.parse(cat): [(e["player_id"], float(e["score"])) for e in entries]
        for cat, entries in doc["pools"].items()
    }
    names = {p["player_id"]: p["display_name"] for p in doc["players"]}
    return pools, names


@pytest.fixture(scope="session")
def name_aliases():
    return json.loads((DATA / "reference_config.json").read_text())["aliases"]


@pytest.fixture
def store_file(tmp_path, league_store):
    path = tmp_path / "store.json"
    league_store.save(path)
    return path


# acceptance criteria report: one line per criterion in the terminal summary
_REPORT = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_REPORT] = {}


@pytest.fixture
def report(request):
    lines = request.config.stash[_REPORT]

    def record(number: int, ok: bool, detail: str) -> bool:
        lines[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_REPORT, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
